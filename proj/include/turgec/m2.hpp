#pragma once

// The annotation interchange format: an S line with the corrupted sentence
// followed by one A line per edit,
//   A <start> <end>|||<type>|||<correction>|||REQUIRED|||-NONE-|||<annotator>
// records separated by a blank line. Error-free records are a bare S line.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turgec/rules.hpp"
#include "turgec/text.hpp"

namespace turgec {

struct Edit {
    size_t start = 0;  // token index into the corrupted sentence, inclusive
    size_t end = 0;    // exclusive
    RuleId rule = RuleId::ConjDeSep;
    std::string correction;  // replacement phrase, tokens joined by spaces

    bool operator==(const Edit&) const = default;
};

struct AnnotatedPair {
    Sentence tokens;  // corrupted sentence
    std::vector<Edit> edits;

    bool operator==(const AnnotatedPair&) const = default;
};

struct M2ParseError : std::runtime_error {
    size_t record = 0;
    size_t line = 0;
    M2ParseError(size_t record_, size_t line_, const std::string& msg)
        : std::runtime_error("record " + std::to_string(record_) + ", line " +
                             std::to_string(line_) + ": " + msg),
          record(record_),
          line(line_) {}
};

inline void check_edits(const AnnotatedPair& pair, size_t record = 0,
                        size_t line = 0) {
    size_t prev_end = 0;
    bool first = true;
    for (const Edit& e : pair.edits) {
        if (e.start >= e.end)
            throw M2ParseError(record, line, "edit span is empty or inverted");
        if (e.end > pair.tokens.size())
            throw M2ParseError(record, line, "edit span exceeds sentence length");
        if (!first && e.start < prev_end)
            throw M2ParseError(record, line, "edits overlap or are unsorted");
        prev_end = e.end;
        first = false;
    }
}

inline std::string serialize(const AnnotatedPair& pair) {
    std::string out = "S " + join_tokens(pair.tokens) + "\n";
    for (const Edit& e : pair.edits) {
        out += "A " + std::to_string(e.start) + " " + std::to_string(e.end) +
               "|||" + std::string(rule_name(e.rule)) + "|||" + e.correction +
               "|||REQUIRED|||-NONE-|||0\n";
    }
    return out;
}

inline std::string serialize_corpus(const std::vector<AnnotatedPair>& pairs) {
    std::string out;
    for (const AnnotatedPair& p : pairs) {
        out += serialize(p);
        out += "\n";
    }
    return out;
}

inline std::vector<AnnotatedPair> parse(std::string_view text) {
    std::vector<AnnotatedPair> out;
    AnnotatedPair current;
    bool in_record = false;
    size_t line_no = 0;
    size_t record_no = 1;

    auto flush = [&] {
        if (!in_record) return;
        check_edits(current, record_no, line_no);
        out.push_back(std::move(current));
        current = AnnotatedPair{};
        in_record = false;
        ++record_no;
    };

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        bool last = (eol == std::string_view::npos);
        pos = last ? text.size() + 1 : eol + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                 line.back() == '\t'))
            line.remove_suffix(1);

        if (line.empty()) {
            flush();
            if (last) break;
            continue;
        }
        if (line.rfind("S ", 0) == 0) {
            flush();
            current.tokens = split_tokens(line.substr(2));
            in_record = true;
        } else if (line.rfind("A ", 0) == 0) {
            if (!in_record)
                throw M2ParseError(record_no, line_no, "A line before any S line");
            std::string_view body = line.substr(2);
            // split on "|||"
            std::vector<std::string_view> fields;
            size_t p = 0;
            while (true) {
                size_t q = body.find("|||", p);
                if (q == std::string_view::npos) {
                    fields.push_back(body.substr(p));
                    break;
                }
                fields.push_back(body.substr(p, q - p));
                p = q + 3;
            }
            if (fields.size() != 6)
                throw M2ParseError(record_no, line_no,
                                   "malformed A line: expected 6 fields, got " +
                                       std::to_string(fields.size()));
            // field 0: "<start> <end>"
            size_t sp = fields[0].find(' ');
            if (sp == std::string_view::npos)
                throw M2ParseError(record_no, line_no,
                                   "malformed A line: missing span indices");
            Edit e;
            try {
                e.start = std::stoul(std::string(fields[0].substr(0, sp)));
                e.end = std::stoul(std::string(fields[0].substr(sp + 1)));
            } catch (const std::exception&) {
                throw M2ParseError(record_no, line_no,
                                   "malformed A line: non-numeric span");
            }
            auto rule = rule_from_name(fields[1]);
            if (!rule)
                throw M2ParseError(record_no, line_no,
                                   "unknown rule id '" + std::string(fields[1]) +
                                       "'");
            e.rule = *rule;
            e.correction = std::string(fields[2]);
            if (fields[3] != "REQUIRED" || fields[4] != "-NONE-")
                throw M2ParseError(record_no, line_no,
                                   "malformed A line: unexpected literal fields");
            try {
                (void)std::stoul(std::string(fields[5]));
            } catch (const std::exception&) {
                throw M2ParseError(record_no, line_no,
                                   "malformed A line: non-numeric annotator");
            }
            current.edits.push_back(std::move(e));
        } else {
            throw M2ParseError(record_no, line_no,
                               "unexpected line: '" + std::string(line) + "'");
        }
        if (last) break;
    }
    flush();
    return out;
}

// Realizes the corrected sentence by replacing each edited span with its
// correction, right to left so indices stay valid.
inline Sentence apply_edits(const AnnotatedPair& pair) {
    check_edits(pair);
    Sentence out = pair.tokens;
    for (size_t k = pair.edits.size(); k > 0; --k) {
        const Edit& e = pair.edits[k - 1];
        Sentence repl = split_tokens(e.correction);
        out.erase(out.begin() + static_cast<ptrdiff_t>(e.start),
                  out.begin() + static_cast<ptrdiff_t>(e.end));
        out.insert(out.begin() + static_cast<ptrdiff_t>(e.start), repl.begin(),
                   repl.end());
    }
    return out;
}

}  // namespace turgec
