#pragma once

// Word lists backing the lexicon-driven rules. File format: UTF-8, LF,
// `correct<TAB>corrupted[<TAB>extra]`, '#' starts a comment line. Substitution
// lexicons must be injective in both directions so reverse transformations
// stay exact; data lexicons (extra-field carriers like the abbreviation list)
// only need unique keys.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turgec/text.hpp"

namespace turgec {

struct LexiconError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LexiconEntry {
    std::string key;    // correct surface form or stem
    std::string value;  // corrupted counterpart, or auxiliary data
    std::string extra;  // optional third field
};

class Lexicon {
  public:
    Lexicon() = default;
    explicit Lexicon(std::string name, bool pair_injective = true)
        : name_(std::move(name)), pair_injective_(pair_injective) {}

    const std::string& name() const { return name_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<LexiconEntry>& entries() const { return entries_; }

    void add(LexiconEntry e, size_t line_no = 0) {
        auto where = [&] {
            std::ostringstream os;
            os << "lexicon " << name_;
            if (line_no) os << ", line " << line_no;
            return os.str();
        };
        if (e.key.empty() || e.value.empty())
            throw LexiconError(where() + ": empty field");
        if (by_key_.count(e.key))
            throw LexiconError(where() + ": duplicate key '" + e.key + "'");
        if (pair_injective_ && by_value_.count(e.value))
            throw LexiconError(where() + ": duplicate value '" + e.value + "'");
        size_t idx = entries_.size();
        by_key_.emplace(e.key, idx);
        if (pair_injective_) by_value_.emplace(e.value, idx);
        entries_.push_back(std::move(e));
    }

    std::optional<std::string> lookup_forward(std::string_view key) const {
        auto it = by_key_.find(std::string(key));
        if (it == by_key_.end()) return std::nullopt;
        return entries_[it->second].value;
    }

    std::optional<std::string> lookup_reverse(std::string_view value) const {
        auto it = by_value_.find(std::string(value));
        if (it == by_value_.end()) return std::nullopt;
        return entries_[it->second].key;
    }

    const LexiconEntry* find_key(std::string_view key) const {
        auto it = by_key_.find(std::string(key));
        return it == by_key_.end() ? nullptr : &entries_[it->second];
    }

    // Longest entry whose key is a prefix of `token`; nullptr when none.
    const LexiconEntry* longest_key_prefix(std::string_view token) const {
        const LexiconEntry* best = nullptr;
        for (const auto& e : entries_)
            if (token.size() >= e.key.size() &&
                token.substr(0, e.key.size()) == e.key)
                if (!best || e.key.size() > best->key.size()) best = &e;
        return best;
    }

    const LexiconEntry* longest_value_prefix(std::string_view token) const {
        const LexiconEntry* best = nullptr;
        for (const auto& e : entries_)
            if (token.size() >= e.value.size() &&
                token.substr(0, e.value.size()) == e.value)
                if (!best || e.value.size() > best->value.size()) best = &e;
        return best;
    }

  private:
    std::string name_;
    bool pair_injective_ = true;
    std::vector<LexiconEntry> entries_;
    std::map<std::string, size_t> by_key_;
    std::map<std::string, size_t> by_value_;
};

inline Lexicon load_lexicon_from_string(std::string name, std::string_view text,
                                        bool pair_injective = true) {
    Lexicon lex(std::move(name), pair_injective);
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        ++line_no;
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        size_t t1 = line.find('\t');
        if (t1 == std::string_view::npos)
            throw LexiconError("lexicon " + lex.name() + ", line " +
                               std::to_string(line_no) +
                               ": expected tab-separated fields");
        size_t t2 = line.find('\t', t1 + 1);
        LexiconEntry e;
        e.key = normalize_sentence(line.substr(0, t1));
        if (t2 == std::string_view::npos) {
            e.value = normalize_sentence(line.substr(t1 + 1));
        } else {
            e.value = normalize_sentence(line.substr(t1 + 1, t2 - t1 - 1));
            e.extra = normalize_sentence(line.substr(t2 + 1));
        }
        lex.add(std::move(e), line_no);
    }
    return lex;
}

inline Lexicon load_lexicon_from_file(const std::string& path, std::string name,
                                      bool pair_injective = true) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LexiconError("cannot open lexicon file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_lexicon_from_string(std::move(name), buf.str(), pair_injective);
}

// Named collection of all lexicons the rule registry consumes.
class LexiconSet {
  public:
    const Lexicon& get(const std::string& name) const {
        auto it = lexicons_.find(name);
        if (it == lexicons_.end())
            throw LexiconError("unknown lexicon: " + name);
        return it->second;
    }

    bool has(const std::string& name) const { return lexicons_.count(name) > 0; }

    void put(Lexicon lex) {
        std::string name = lex.name();
        lexicons_.insert_or_assign(std::move(name), std::move(lex));
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [k, _] : lexicons_) out.push_back(k);
        return out;
    }

  private:
    std::map<std::string, Lexicon> lexicons_;
};

}  // namespace turgec
