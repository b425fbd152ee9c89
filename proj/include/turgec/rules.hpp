#pragma once

// Registry of the 21 writing rules. Each rule carries an eligibility
// predicate over grammatically correct text, a forward corruption, and the
// exact reverse transformation. The invariant the whole toolkit leans on:
// for every eligible span, reverse(forward(span)) restores the original
// tokens byte for byte, and the corrupted span is recognized by the same
// pattern the reverse transformation validates.

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turgec/lexicon.hpp"
#include "turgec/morphology.hpp"
#include "turgec/text.hpp"

namespace turgec {

enum class RuleId : int {
    ConjDeSep = 0,
    ConjDeVh,
    ConjDeAr,
    Yada,
    ConjDeApos,
    CaseDe,
    ConjKiSep,
    ConjKiExc,
    ForeignR1,
    ForeignR2,
    ForeignR2Exc,
    BisyllHaplVow,
    BisyllHaplVowExc,
    LightVerbSep,
    LightVerbAdj,
    CompVerbAdj,
    PronounExc,
    SentCap,
    Capped,
    Abbrev,
    PronouncExc,
};

inline constexpr int kRuleCount = 21;

struct RuleInfo {
    RuleId id;
    const char* name;     // wire spelling, emitted verbatim in annotations
    int catalog_no;       // stable catalog number (gaps are reserved ids)
    int consumes;         // tokens read by the forward transformation
    int emits;            // tokens written; 0 = varies by lexicon entry
    double default_p;     // default corruption probability
    const char* lexicon;  // required lexicon, or nullptr
    const char* summary;
};

// Default probabilities follow the relative frequency of each error type in
// everyday writing, normalized so the most common one sits at 0.9.
inline const std::array<RuleInfo, kRuleCount>& rule_table() {
    static const std::array<RuleInfo, kRuleCount> t = {{
        {RuleId::ConjDeSep, "CONJ_DE_SEP", 1, 2, 1, 0.9 * 12962 / 37462, nullptr,
         "conjunction de/da written separately; corruption joins it onto the previous word"},
        {RuleId::ConjDeVh, "CONJ_DE_VH", 2, 1, 1, 0.9 * 101 / 37462, nullptr,
         "conjunction de/da follows vowel harmony; corruption flips the vowel"},
        {RuleId::ConjDeAr, "CONJ_DE_AR", 3, 1, 1, 0.9 * 99 / 37462, nullptr,
         "conjunction de/da never assimilates; corruption writes t after a voiceless final"},
        {RuleId::Yada, "YADA", 4, 2, 1, 0.9 * 472 / 37462, nullptr,
         "ya da is always written separately; corruption joins it"},
        {RuleId::ConjDeApos, "CONJ_DE_APOS", 5, 2, 1, 0.9 * 10859 / 37462, nullptr,
         "conjunction de/da never takes an apostrophe; corruption attaches it to a proper noun"},
        {RuleId::CaseDe, "CASE_DE", 6, 1, 2, 0.9, "CASE_DE_STEMS",
         "locative -de/-da is written adjacent; corruption splits it off"},
        {RuleId::ConjKiSep, "CONJ_KI_SEP", 7, 2, 1, 0.9 * 1817 / 37462, nullptr,
         "conjunction ki is written separately; corruption joins it"},
        {RuleId::ConjKiExc, "CONJ_KI_EXC", 8, 1, 0, 0.9 * 1395 / 37462, "CONJ_KI_EXC",
         "conventional adjacent ki words; corruption per exception list"},
        {RuleId::ForeignR1, "FOREIGN_R1", 9, 1, 1, 0.9 * 307 / 37462, "FOREIGN_R1",
         "initial consonant clusters keep no epenthetic vowel; corruption inserts one"},
        {RuleId::ForeignR2, "FOREIGN_R2", 15, 1, 1, 0.9 * 327 / 37462, "FOREIGN_R2",
         "loanword finals soften before a vowel; corruption keeps the hard consonant"},
        {RuleId::ForeignR2Exc, "FOREIGN_R2_EXC", 16, 1, 1, 0.9 * 422 / 37462, "FOREIGN_R2_EXC",
         "loanwords exempt from softening; corruption softens them"},
        {RuleId::BisyllHaplVow, "BISYLL_HAPL_VOW", 13, 1, 1, 0.9 * 1567 / 37462, "BISYLL_HAPL_VOW",
         "haplology drops the second vowel before a vowel suffix; corruption restores it"},
        {RuleId::BisyllHaplVowExc, "BISYLL_HAPL_VOW_EXC", 14, 1, 1, 0.9 * 866 / 37462,
         "BISYLL_HAPL_VOW_EXC",
         "adverbs that keep their final vowel; corruption drops it"},
        {RuleId::LightVerbSep, "LIGHT_VERB_SEP", 17, 2, 1, 0.9 * 460 / 37462, nullptr,
         "unassimilated light-verb compounds are separate; corruption joins them"},
        {RuleId::LightVerbAdj, "LIGHT_VERB_ADJ", 18, 1, 2, 0.9 * 547 / 37462, "LIGHT_VERB_ADJ",
         "assimilated light-verb compounds are adjacent; corruption splits them"},
        {RuleId::CompVerbAdj, "COMP_VERB_ADJ", 20, 1, 2, 0.9 * 7840 / 37462, nullptr,
         "converb + auxiliary compounds are adjacent; corruption splits them"},
        {RuleId::PronounExc, "PRONOUN_EXC", 22, 1, 2, 0.9 * 3867 / 37462, "PRONOUN_EXC",
         "fused pronouns are adjacent; corruption splits them"},
        {RuleId::SentCap, "SENT_CAP", 23, 1, 1, 0.9 * 2613 / 37462, nullptr,
         "sentences start uppercase; corruption lowercases the first letter"},
        {RuleId::Capped, "CAPPED", 24, 1, 1, 0.9 * 834 / 37462, "CAPPED",
         "circumflexed loanwords; corruption strips the circumflex"},
        {RuleId::Abbrev, "ABBREV", 25, 1, 1, 0.9 * 359 / 37462, "ABBREV",
         "abbreviation punctuation and suffix harmony; corruption per list"},
        {RuleId::PronouncExc, "PRONOUNC_EXC", 12, 1, 1, 0.9 * 12750 / 37462, nullptr,
         "stem-final a/e keeps its spelling before y + future suffix; corruption raises it"},
    }};
    return t;
}

inline const RuleInfo& rule_info(RuleId id) {
    return rule_table()[static_cast<size_t>(id)];
}

inline std::string_view rule_name(RuleId id) { return rule_info(id).name; }

inline std::optional<RuleId> rule_from_name(std::string_view name) {
    for (const auto& r : rule_table())
        if (name == r.name) return r.id;
    return std::nullopt;
}

inline std::vector<RuleId> all_rules() {
    std::vector<RuleId> out;
    out.reserve(kRuleCount);
    for (const auto& r : rule_table()) out.push_back(r.id);
    return out;
}

struct Span {
    size_t start = 0;
    size_t end = 0;  // exclusive
    size_t length() const { return end - start; }
};

struct ReverseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Site of the vowel before y + future material. In the correct direction the
// vowel is a/e; in the corrupted direction it is a close vowel whose backness
// agrees with the suffix. npos when absent.
inline size_t pronounce_site(const CodepointString& cps, bool corrupted) {
    static const std::u32string_view tails[] = {U"acak", U"ecek", U"acağ",
                                                U"eceğ"};
    for (size_t k = 1; k + 2 < cps.size(); ++k) {
        char32_t v = cps[k];
        if (cps[k + 1] != U'y') continue;
        bool ok_vowel, back_vowel;
        if (!corrupted) {
            ok_vowel = (v == U'a' || v == U'e');
            back_vowel = (v == U'a');
        } else {
            ok_vowel = (v == U'ı' || v == U'i' || v == U'u' || v == U'ü');
            back_vowel = (v == U'ı' || v == U'u');
        }
        if (!ok_vowel) continue;
        std::u32string_view rest(cps.data() + k + 2, cps.size() - k - 2);
        for (auto t : tails) {
            if (rest.size() < t.size() || rest.substr(0, t.size()) != t) continue;
            if ((t[0] == U'a') != back_vowel) continue;
            if (corrupted && k == 1) {
                char32_t head = to_lower_tr_char(cps[0]);
                if (head == U'd' || head == U'y') continue;  // diyecek, yiyecek
            }
            return k;
        }
    }
    return std::u32string::npos;
}

namespace detail {

// --- shared word sets ------------------------------------------------------

inline const std::set<std::string>& light_verb_aux_forms() {
    static const std::set<std::string> s = [] {
        std::set<std::string> f;
        auto add = [&](std::string_view stem, std::initializer_list<const char*> sufs) {
            for (const char* suf : sufs) f.insert(std::string(stem) + suf);
        };
        add("et", {"mek", "mekte", "meden", "medi", "meyen", "miş", "mişti",
                   "ti", "tim", "tin", "tik", "tiler", "er", "erdi", "iyor",
                   "iyordu", "ecek", "ecekti", "en", "erek", "ip", "sin",
                   "meli", "mez"});
        add("edil", {"mek", "di", "ir", "iyor", "miş", "ecek", "medi", "en",
                     "erek", "ip"});
        add("eyle", {"mek", "di", "r", "miş", "yecek", "yen"});
        add("ol", {"mak", "makta", "madan", "madı", "mayan", "muş", "muştu",
                   "du", "dum", "dun", "duk", "dular", "ur", "urdu", "uyor",
                   "uyordu", "acak", "acaktı", "an", "arak", "up", "sun",
                   "malı", "maz"});
        add("olun", {"mak", "du", "ur", "uyor", "muş", "acak", "madı", "an",
                     "arak", "up"});
        return f;
    }();
    return s;
}

// Tokens that start with one of these are fused derived verbs, not joined
// light-verb spellings; the reverse matcher must leave them alone.
inline const std::set<std::string>& light_verb_reverse_stoplist() {
    static const std::set<std::string> s = {"yönet", "yüksel"};
    return s;
}

inline const std::set<std::string>& light_verb_noun_stoplist() {
    static const std::set<std::string> s = {
        "ve", "ya", "ne", "bu", "şu", "o", "ben", "sen", "biz", "siz",
        "hem", "ki", "de", "da", "çok", "az", "en", "daha", "gibi", "için",
        "ile", "ama", "fakat", "veya", "yahut", "ancak", "hiç", "her"};
    return s;
}

// Inflection tails accepted after an auxiliary stem inside a compound verb
// and after a light-verb adjacency stem. Exact-match set.
inline const std::set<std::string>& verbal_tails() {
    static const std::set<std::string> s = {
        "mak", "mek", "ma", "me",
        "dı", "di", "du", "dü", "tı", "ti", "tu", "tü",
        "dım", "dim", "dum", "düm", "tım", "tim", "tum", "tüm",
        "dın", "din", "dun", "dün", "tın", "tin", "tun", "tün",
        "dık", "dik", "duk", "dük", "tık", "tik", "tuk", "tük",
        "dılar", "diler", "dular", "düler", "tılar", "tiler", "tular", "tüler",
        "dığı", "diği", "duğu", "düğü", "tığı", "tiği", "tuğu", "tüğü",
        "dığım", "diğim", "dığın", "diğin",
        "dığında", "diğinde", "duğunda", "düğünde",
        "mış", "miş", "muş", "müş", "mıştı", "mişti", "muştu", "müştü",
        "ır", "ir", "ur", "ür", "ar", "er",
        "ırdı", "irdi", "urdu", "ürdü", "ardı", "erdi",
        "ıyor", "iyor", "uyor", "üyor", "ıyordu", "iyordu", "uyordu", "üyordu",
        "acak", "ecek", "acaktı", "ecekti", "acağı", "eceği",
        "arak", "erek", "ıp", "ip", "up", "üp",
        "madan", "meden", "an", "en",
        "sın", "sin", "sun", "sün", "malı", "meli", "maz", "mez",
        "ilir", "ildi", "ilen", "ilmiş", "ilecek"};
    return s;
}

// Verbal endings that license a conjunction-ki reading of the previous word.
inline const std::set<std::string>& ki_verbal_endings() {
    static const std::set<std::string> s = {
        "mış", "miş", "muş", "müş", "mıştı", "mişti", "muştu", "müştü",
        "dı", "di", "du", "dü", "tı", "ti", "tu", "tü",
        "ydı", "ydi", "ydu", "ydü", "yor", "yordu",
        "acak", "ecek", "acaktı", "ecekti",
        "ır", "ir", "ur", "ür", "ar", "er", "maz", "mez",
        "malı", "meli", "dır", "dir", "dur", "dür", "tır", "tir", "tur", "tür",
        "sa", "se", "saydı", "seydi"};
    return s;
}

inline const std::set<std::string>& ki_predicate_words() {
    static const std::set<std::string> s = {"var",   "yok",  "olur", "oldu",
                                            "dedi",  "demiş", "diyor", "gerek",
                                            "lazım", "belli", "şart"};
    return s;
}

inline const std::vector<std::u32string>& comp_aux_stems() {
    static const std::vector<std::u32string> s = {U"bil", U"ver", U"kal",
                                                  U"dur", U"gel", U"yaz"};
    return s;
}

inline bool is_converb_vowel(char32_t c) {
    switch (c) {
        case U'a': case U'e': case U'ı': case U'i': case U'u': case U'ü':
            return true;
        default:
            return false;
    }
}

// Suffix chains accepted by the vowel-keeping adverbs (rule family 14).
inline const std::set<std::string>& adverb_loc_suffixes() {
    static const std::set<std::string> s = {"da",  "de",  "dan",  "den",
                                            "daki", "deki"};
    return s;
}

// --- small string helpers --------------------------------------------------

inline bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.substr(s.size() - suffix.size()) == suffix;
}

inline bool first_upper(std::string_view token) {
    CodepointString cps = decode_utf8(token);
    return !cps.empty() && is_upper_tr(cps.front());
}

inline std::string lower_first(std::string_view token) {
    CodepointString cps = decode_utf8(token);
    if (!cps.empty()) cps.front() = to_lower_tr_char(cps.front());
    return encode_utf8(cps);
}

inline std::string upper_first(std::string_view token) {
    CodepointString cps = decode_utf8(token);
    if (!cps.empty()) cps.front() = to_upper_tr_char(cps.front());
    return encode_utf8(cps);
}

// Case-folded prefix lookup: matches `token` against entry keys (or values),
// trying the token verbatim and, if its first letter is uppercase, the
// lowercased variant. Returns entry plus whether capitalization must be
// restored on the replacement.
struct CasedHit {
    const LexiconEntry* entry = nullptr;
    bool recapitalize = false;
    std::string remainder;
};

inline std::optional<CasedHit> match_key_prefix(const Lexicon& lex,
                                                std::string_view token) {
    if (const LexiconEntry* e = lex.longest_key_prefix(token))
        return CasedHit{e, false, std::string(token.substr(e->key.size()))};
    if (first_upper(token)) {
        std::string low = lower_first(token);
        if (const LexiconEntry* e = lex.longest_key_prefix(low))
            return CasedHit{e, true, low.substr(e->key.size())};
    }
    return std::nullopt;
}

inline std::optional<CasedHit> match_value_prefix(const Lexicon& lex,
                                                  std::string_view token) {
    if (const LexiconEntry* e = lex.longest_value_prefix(token))
        return CasedHit{e, false, std::string(token.substr(e->value.size()))};
    if (first_upper(token)) {
        std::string low = lower_first(token);
        if (const LexiconEntry* e = lex.longest_value_prefix(low))
            return CasedHit{e, true, low.substr(e->value.size())};
    }
    return std::nullopt;
}

inline bool vowel_follows(std::string_view remainder) {
    if (remainder.empty()) return false;
    CodepointString cps = decode_utf8(remainder);
    return !cps.empty() && is_vowel_tr(cps.front());
}

inline std::string flip_harmony_vowels(std::string_view s) {
    CodepointString cps = decode_utf8(s);
    for (char32_t& c : cps) {
        switch (c) {
            case U'e': c = U'a'; break;
            case U'a': c = U'e'; break;
            case U'i': c = U'ı'; break;
            case U'ı': c = U'i'; break;
            case U'ö': c = U'o'; break;
            case U'o': c = U'ö'; break;
            case U'ü': c = U'u'; break;
            case U'u': c = U'ü'; break;
            default: break;
        }
    }
    return encode_utf8(cps);
}

}  // namespace detail

// ---------------------------------------------------------------------------

class RuleEngine {
  public:
    explicit RuleEngine(const LexiconSet& lexicons) : lex_(&lexicons) {}

    enum class Provenance { Lexicon, Pattern };

    struct Forward {
        size_t span_start = 0;               // first consumed token
        std::vector<std::string> original;   // consumed tokens
        std::vector<std::string> replacement;
    };

    struct RevMatch {
        size_t length = 0;  // corrupted-span token count starting at the probe
        Provenance provenance = Provenance::Pattern;
    };

    // True when the forward transformation may fire anchored at `index`.
    // For two-token patterns the anchor is the distinguishing token (the
    // clitic for the de/da and ki families, the auxiliary for light verbs).
    bool is_eligible(RuleId rule, const Sentence& s,
                     const std::vector<MorphInfo>& morph, size_t index) const {
        if (index >= s.size())
            throw std::out_of_range("is_eligible: token index out of range");
        if (morph.size() != s.size())
            throw std::invalid_argument("is_eligible: morph not aligned");
        return eligible_impl(rule, s, morph, index).has_value();
    }

    Forward apply_forward(RuleId rule, const Sentence& s,
                          const std::vector<MorphInfo>& morph,
                          size_t index) const {
        if (index >= s.size())
            throw std::out_of_range("apply_forward: token index out of range");
        auto fwd = eligible_impl(rule, s, morph, index);
        if (!fwd)
            throw std::logic_error(std::string("apply_forward: span not eligible for ") +
                                   std::string(rule_name(rule)));
        return *fwd;
    }

    // Non-throwing probe used by the generation loop.
    std::optional<Forward> try_forward(RuleId rule, const Sentence& s,
                                       const std::vector<MorphInfo>& morph,
                                       size_t index) const {
        if (index >= s.size() || morph.size() != s.size()) return std::nullopt;
        return eligible_impl(rule, s, morph, index);
    }

    // Restores the correct surface form of a corrupted span. Throws
    // ReverseError when the span does not match the rule's corrupted pattern.
    std::vector<std::string> apply_reverse(RuleId rule, const Sentence& s,
                                           Span span) const {
        if (span.start >= span.end || span.end > s.size())
            throw ReverseError(reverse_err_msg(rule, span, "span out of range"));
        auto m = match_corrupted(rule, s, span.start);
        if (!m || m->length != span.length())
            throw ReverseError(reverse_err_msg(rule, span, "pattern mismatch"));
        return reverse_impl(rule, s, span.start, m->length);
    }

    // Detection primitive: does the corrupted pattern of `rule` start at
    // token `i`? Returns the matched span length and its provenance.
    std::optional<RevMatch> match_corrupted(RuleId rule, const Sentence& s,
                                            size_t i) const;

  private:
    const LexiconSet* lex_;

    const Lexicon& need(const char* name) const { return lex_->get(name); }

    size_t find_aux_suffix(const std::string& tok) const;
    std::optional<std::string> find_adjacency(const std::string& t1,
                                              const std::string& t2) const;

    // A word the joined-clitic pattern may claim. Known locative stems and
    // vowel-keeping adverbs are excluded: a de/da ending on those reads as a
    // suffix, so joining (and un-joining) there is never unambiguous.
    bool joinable_clitic_host(const std::string& word) const {
        std::string low = to_lower_tr(word);
        const Lexicon& stems = need("CASE_DE_STEMS");
        if (!stems.empty() && stems.find_key(low)) return false;
        if (need("BISYLL_HAPL_VOW_EXC").find_key(low)) return false;
        return true;
    }

    static std::string reverse_err_msg(RuleId rule, Span span, const char* why) {
        std::string m = "apply_reverse ";
        m += rule_name(rule);
        m += " [" + std::to_string(span.start) + "," + std::to_string(span.end) + "): ";
        m += why;
        return m;
    }

    std::optional<Forward> eligible_impl(RuleId rule, const Sentence& s,
                                         const std::vector<MorphInfo>& morph,
                                         size_t i) const;
    std::vector<std::string> reverse_impl(RuleId rule, const Sentence& s,
                                          size_t start, size_t len) const;
};

// ---------------------------------------------------------------------------
// forward eligibility + transformation

inline std::optional<RuleEngine::Forward> RuleEngine::eligible_impl(
    RuleId rule, const Sentence& s, const std::vector<MorphInfo>& morph,
    size_t i) const {
    using namespace detail;
    const std::string& tok = s[i];
    auto make = [&](size_t start, std::vector<std::string> orig,
                    std::vector<std::string> repl) {
        Forward f;
        f.span_start = start;
        f.original = std::move(orig);
        f.replacement = std::move(repl);
        return f;
    };

    switch (rule) {
        case RuleId::ConjDeSep: {
            // separate conjunction clitic, joined onto the previous word
            if (i == 0 || (tok != "de" && tok != "da")) return std::nullopt;
            if (morph[i].pos_guess != PosGuess::Conjunction) return std::nullopt;
            const std::string& prev = s[i - 1];
            if (prev == "ya" || prev == "Ya") return std::nullopt;  // YADA's span
            CodepointString pc = decode_utf8(prev);
            if (pc.size() < 2 || contains_apostrophe(pc)) return std::nullopt;
            auto want = harmony_variant("de", prev, false);
            if (!want || *want != tok) return std::nullopt;
            if (!joinable_clitic_host(prev)) return std::nullopt;
            return make(i - 1, {prev, tok}, {prev + tok});
        }
        case RuleId::ConjDeVh: {
            if (i == 0 || (tok != "de" && tok != "da")) return std::nullopt;
            auto want = harmony_variant("de", s[i - 1], false);
            if (!want || *want != tok) return std::nullopt;
            return make(i, {tok}, {tok == "de" ? "da" : "de"});
        }
        case RuleId::ConjDeAr: {
            if (i == 0 || (tok != "de" && tok != "da")) return std::nullopt;
            if (morph[i - 1].final_consonant != FinalConsonant::Fortis)
                return std::nullopt;
            auto want = harmony_variant("de", s[i - 1], false);
            if (!want || *want != tok) return std::nullopt;
            return make(i, {tok}, {tok == "de" ? "te" : "ta"});
        }
        case RuleId::Yada: {
            if (i + 1 >= s.size()) return std::nullopt;
            if ((tok != "ya" && tok != "Ya") || s[i + 1] != "da")
                return std::nullopt;
            return make(i, {tok, s[i + 1]}, {tok + "da"});
        }
        case RuleId::ConjDeApos: {
            if (i == 0 || (tok != "de" && tok != "da")) return std::nullopt;
            const MorphInfo& pm = morph[i - 1];
            if (!pm.is_capitalized || pm.has_apostrophe) return std::nullopt;
            auto want = harmony_variant("de", s[i - 1], false);
            if (!want || *want != tok) return std::nullopt;
            return make(i - 1, {s[i - 1], tok}, {s[i - 1] + "'" + tok});
        }
        case RuleId::CaseDe: {
            // split the locative suffix off a known stem
            CodepointString cps = decode_utf8(tok);
            if (cps.size() < 4 || contains_apostrophe(cps)) return std::nullopt;
            if (!locative_ending_consistent(cps)) return std::nullopt;
            std::string stem =
                encode_utf8(std::u32string_view(cps.data(), cps.size() - 2));
            std::string suffix = encode_utf8(
                std::u32string_view(cps.data() + cps.size() - 2, 2));
            const Lexicon& stems = need("CASE_DE_STEMS");
            if (!stems.empty() && !stems.find_key(to_lower_tr(stem)))
                return std::nullopt;
            return make(i, {tok}, {stem, suffix});
        }
        case RuleId::ConjKiSep: {
            if (i == 0 || tok != "ki") return std::nullopt;
            const std::string& prev = s[i - 1];
            if (morph[i - 1].has_apostrophe) return std::nullopt;
            CodepointString pc = decode_utf8(prev);
            if (pc.size() < 2) return std::nullopt;
            std::string low = to_lower_tr(prev);
            bool pred = ki_predicate_words().count(low) > 0;
            if (!pred)
                for (const auto& suf : ki_verbal_endings())
                    if (ends_with(low, suf)) { pred = true; break; }
            if (!pred) return std::nullopt;
            return make(i - 1, {prev, tok}, {prev + tok});
        }
        case RuleId::ConjKiExc: {
            const Lexicon& lex = need("CONJ_KI_EXC");
            const LexiconEntry* e = lex.find_key(tok);
            bool cap = false;
            if (!e && first_upper(tok)) {
                e = lex.find_key(lower_first(tok));
                cap = (e != nullptr);
            }
            if (!e) return std::nullopt;
            Sentence repl = split_tokens(e->value);
            if (cap && !repl.empty()) repl[0] = upper_first(repl[0]);
            return make(i, {tok}, std::move(repl));
        }
        case RuleId::ForeignR1: {
            auto hit = match_key_prefix(need("FOREIGN_R1"), tok);
            if (!hit) return std::nullopt;
            std::string out = hit->entry->value + hit->remainder;
            if (hit->recapitalize) out = upper_first(out);
            return make(i, {tok}, {out});
        }
        case RuleId::ForeignR2: {
            auto hit = match_key_prefix(need("FOREIGN_R2"), tok);
            if (!hit || !vowel_follows(hit->remainder)) return std::nullopt;
            std::string out = hit->entry->value + hit->remainder;
            if (hit->recapitalize) out = upper_first(out);
            return make(i, {tok}, {out});
        }
        case RuleId::ForeignR2Exc: {
            auto hit = match_key_prefix(need("FOREIGN_R2_EXC"), tok);
            if (!hit || !vowel_follows(hit->remainder)) return std::nullopt;
            std::string out = hit->entry->value + hit->remainder;
            if (hit->recapitalize) out = upper_first(out);
            return make(i, {tok}, {out});
        }
        case RuleId::BisyllHaplVow: {
            auto hit = match_key_prefix(need("BISYLL_HAPL_VOW"), tok);
            if (!hit || !vowel_follows(hit->remainder)) return std::nullopt;
            std::string out = hit->entry->value + hit->remainder;
            if (hit->recapitalize) out = upper_first(out);
            return make(i, {tok}, {out});
        }
        case RuleId::BisyllHaplVowExc: {
            auto hit = match_key_prefix(need("BISYLL_HAPL_VOW_EXC"), tok);
            if (!hit) return std::nullopt;
            if (!adverb_loc_suffixes().count(hit->remainder)) return std::nullopt;
            auto stem_lv = last_vowel(decode_utf8(hit->entry->key));
            auto suf_cps = decode_utf8(hit->remainder);
            if (!stem_lv ||
                vowel_backness(*stem_lv) != vowel_backness(suf_cps[1]))
                return std::nullopt;
            std::string out = hit->entry->value + hit->remainder;
            if (hit->recapitalize) out = upper_first(out);
            return make(i, {tok}, {out});
        }
        case RuleId::LightVerbSep: {
            // anchor: the auxiliary token
            if (i == 0) return std::nullopt;
            if (!light_verb_aux_forms().count(tok)) return std::nullopt;
            const std::string& prev = s[i - 1];
            CodepointString pc = decode_utf8(prev);
            if (pc.size() < 2 || contains_apostrophe(pc)) return std::nullopt;
            if (count_vowels(pc) == 0) return std::nullopt;
            char32_t last = pc.back();
            if (!is_letter_tr(last) || is_vowel_tr(last)) return std::nullopt;
            if (light_verb_noun_stoplist().count(to_lower_tr(prev)))
                return std::nullopt;
            // the joined token must round-trip through the reverse matcher
            std::string joined = prev + tok;
            std::string low = to_lower_tr(joined);
            for (const auto& stop : light_verb_reverse_stoplist())
                if (starts_with(low, stop)) return std::nullopt;
            if (match_key_prefix(need("LIGHT_VERB_ADJ"), joined))
                return std::nullopt;
            if (find_aux_suffix(joined) != tok.size()) return std::nullopt;
            return make(i - 1, {prev, tok}, {prev + tok});
        }
        case RuleId::LightVerbAdj: {
            auto hit = match_key_prefix(need("LIGHT_VERB_ADJ"), tok);
            if (!hit || hit->remainder.empty()) return std::nullopt;
            if (!verbal_tails().count(hit->remainder)) return std::nullopt;
            Sentence words = split_tokens(hit->entry->value);
            if (words.size() != 2) return std::nullopt;
            std::string first = hit->recapitalize ? upper_first(words[0]) : words[0];
            return make(i, {tok}, {first, words[1] + hit->remainder});
        }
        case RuleId::CompVerbAdj: {
            CodepointString cps = decode_utf8(tok);
            if (contains_apostrophe(cps)) return std::nullopt;
            for (size_t p = 2; p + 3 <= cps.size(); ++p) {
                if (!is_converb_vowel(cps[p - 1])) continue;
                std::u32string_view rest(cps.data() + p, cps.size() - p);
                for (const auto& aux : comp_aux_stems()) {
                    if (rest.size() <= aux.size()) continue;
                    if (rest.substr(0, aux.size()) != aux) continue;
                    std::u32string_view pre(cps.data(), p);
                    if (count_vowels(pre) < 2) continue;
                    std::string tail =
                        encode_utf8(rest.substr(aux.size()));
                    if (!verbal_tails().count(tail)) continue;
                    return make(i, {tok},
                                {encode_utf8(pre),
                                 encode_utf8(aux) + tail});
                }
            }
            return std::nullopt;
        }
        case RuleId::PronounExc: {
            auto hit = match_key_prefix(need("PRONOUN_EXC"), tok);
            if (!hit) return std::nullopt;
            Sentence words = split_tokens(hit->entry->value);
            if (words.size() != 2) return std::nullopt;
            std::string first = hit->recapitalize ? upper_first(words[0]) : words[0];
            return make(i, {tok}, {first, words[1] + hit->remainder});
        }
        case RuleId::SentCap: {
            if (i != 0) return std::nullopt;
            CodepointString cps = decode_utf8(tok);
            if (cps.empty() || !is_letter_tr(cps.front()) ||
                !is_upper_tr(cps.front()))
                return std::nullopt;
            return make(i, {tok}, {lower_first(tok)});
        }
        case RuleId::Capped: {
            auto hit = match_key_prefix(need("CAPPED"), tok);
            if (!hit) return std::nullopt;
            std::string out = hit->entry->value + hit->remainder;
            if (hit->recapitalize) out = upper_first(out);
            return make(i, {tok}, {out});
        }
        case RuleId::Abbrev: {
            const Lexicon& lex = need("ABBREV");
            // trailing-period entries: exact token match
            if (const LexiconEntry* e = lex.find_key(tok)) {
                if (e->value == "period" && ends_with(tok, "."))
                    return make(i, {tok}, {tok.substr(0, tok.size() - 1)});
            }
            // suffixed entries: canonical'suffix with correct harmony
            size_t ap = tok.find('\'');
            if (ap == std::string::npos || ap == 0 || ap + 1 >= tok.size())
                return std::nullopt;
            std::string base = tok.substr(0, ap);
            std::string suffix = tok.substr(ap + 1);
            const LexiconEntry* e = lex.find_key(base);
            if (!e) return std::nullopt;
            CodepointString scps = decode_utf8(suffix);
            if (count_vowels(scps) == 0) return std::nullopt;
            if (e->value == "front" || e->value == "back") {
                Backness want = e->value == "front" ? Backness::Front
                                                    : Backness::Back;
                for (char32_t c : scps)
                    if (is_vowel_tr(c) && vowel_backness(c) != want)
                        return std::nullopt;
                return make(i, {tok},
                            {base + "'" + flip_harmony_vowels(suffix)});
            }
            if (e->value == "height") {
                // close vowels misspelled open: i -> e, ı -> a
                bool any = false;
                for (char32_t& c : scps) {
                    if (c == U'i') { c = U'e'; any = true; }
                    else if (c == U'ı') { c = U'a'; any = true; }
                    else if (c == U'e' || c == U'a') return std::nullopt;
                }
                if (!any) return std::nullopt;
                return make(i, {tok}, {base + "'" + encode_utf8(scps)});
            }
            return std::nullopt;
        }
        case RuleId::PronouncExc: {
            CodepointString cps = decode_utf8(tok);
            if (contains_apostrophe(cps)) return std::nullopt;
            size_t k = pronounce_site(cps, /*corrupted=*/false);
            if (k == std::u32string::npos) return std::nullopt;
            CodepointString out = cps;
            out[k] = (out[k] == U'a') ? U'ı' : U'i';
            return make(i, {tok}, {encode_utf8(out)});
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// corrupted-pattern matching (detection + reverse precondition)

inline std::optional<RuleEngine::RevMatch> RuleEngine::match_corrupted(
    RuleId rule, const Sentence& s, size_t i) const {
    using namespace detail;
    if (i >= s.size()) return std::nullopt;
    const std::string& tok = s[i];
    auto pat = [](size_t n) { return RevMatch{n, Provenance::Pattern}; };
    auto lexm = [](size_t n) { return RevMatch{n, Provenance::Lexicon}; };

    switch (rule) {
        case RuleId::ConjDeSep: {
            CodepointString cps = decode_utf8(tok);
            if (cps.size() < 4 || contains_apostrophe(cps)) return std::nullopt;
            if (!(ends_with(tok, "de") || ends_with(tok, "da")))
                return std::nullopt;
            std::string stem = encode_utf8(
                std::u32string_view(cps.data(), cps.size() - 2));
            std::string clitic = tok.substr(tok.size() - 2);
            if (stem == "ya" || stem == "Ya") return std::nullopt;  // YADA's span
            auto want = harmony_variant("de", stem, false);
            if (!want || *want != clitic) return std::nullopt;
            if (!joinable_clitic_host(stem)) return std::nullopt;
            return pat(1);
        }
        case RuleId::ConjDeVh: {
            if (i == 0 || (tok != "de" && tok != "da")) return std::nullopt;
            auto want = harmony_variant("de", s[i - 1], false);
            if (!want || *want == tok) return std::nullopt;
            return pat(1);
        }
        case RuleId::ConjDeAr: {
            if (i == 0 || (tok != "te" && tok != "ta")) return std::nullopt;
            CodepointString pc = decode_utf8(s[i - 1]);
            if (pc.empty() || !is_fortis_consonant(pc.back())) return std::nullopt;
            auto want = harmony_variant("de", s[i - 1], false);
            if (!want) return std::nullopt;
            // vowel must already be the correct harmony; only the consonant is off
            if ((*want)[1] != tok[1]) return std::nullopt;
            return pat(1);
        }
        case RuleId::Yada: {
            if (tok == "yada" || tok == "Yada") return pat(1);
            return std::nullopt;
        }
        case RuleId::ConjDeApos: {
            CodepointString cps = decode_utf8(tok);
            if (cps.size() < 5) return std::nullopt;
            if (!is_apostrophe(cps[cps.size() - 3])) return std::nullopt;
            if (!(ends_with(tok, "de") || ends_with(tok, "da")))
                return std::nullopt;
            std::u32string_view base(cps.data(), cps.size() - 3);
            if (base.empty() || !is_upper_tr(base.front())) return std::nullopt;
            if (contains_apostrophe(base)) return std::nullopt;
            std::string base8 = encode_utf8(base);
            auto want = harmony_variant("de", base8, false);
            if (!want || *want != tok.substr(tok.size() - 2)) return std::nullopt;
            return pat(1);
        }
        case RuleId::CaseDe: {
            if (i + 1 >= s.size()) return std::nullopt;
            const std::string& nxt = s[i + 1];
            if (nxt != "de" && nxt != "da" && nxt != "te" && nxt != "ta")
                return std::nullopt;
            CodepointString pc = decode_utf8(tok);
            if (pc.size() < 2 || contains_apostrophe(pc)) return std::nullopt;
            CodepointString joined = pc;
            for (char32_t c : decode_utf8(nxt)) joined.push_back(c);
            if (!locative_ending_consistent(joined)) return std::nullopt;
            const Lexicon& stems = need("CASE_DE_STEMS");
            if (!stems.empty() && !stems.find_key(to_lower_tr(tok)))
                return std::nullopt;
            return lexm(2);
        }
        case RuleId::ConjKiSep: {
            if (!ends_with(tok, "ki")) return std::nullopt;
            CodepointString cps = decode_utf8(tok);
            if (cps.size() < 4 || contains_apostrophe(cps)) return std::nullopt;
            std::string stem = encode_utf8(
                std::u32string_view(cps.data(), cps.size() - 2));
            std::string low = to_lower_tr(stem);
            if (ki_predicate_words().count(low)) return pat(1);
            for (const auto& suf : ki_verbal_endings())
                if (ends_with(low, suf)) return pat(1);
            return std::nullopt;
        }
        case RuleId::ConjKiExc: {
            const Lexicon& lex = need("CONJ_KI_EXC");
            if (i + 1 < s.size()) {
                std::string two = tok + " " + s[i + 1];
                if (lex.lookup_reverse(two)) return lexm(2);
                if (first_upper(tok) && lex.lookup_reverse(lower_first(two)))
                    return lexm(2);
            }
            if (lex.lookup_reverse(tok)) return lexm(1);
            if (first_upper(tok) && lex.lookup_reverse(lower_first(tok)))
                return lexm(1);
            return std::nullopt;
        }
        case RuleId::ForeignR1: {
            if (match_value_prefix(need("FOREIGN_R1"), tok)) return lexm(1);
            return std::nullopt;
        }
        case RuleId::ForeignR2: {
            auto hit = match_value_prefix(need("FOREIGN_R2"), tok);
            if (hit && vowel_follows(hit->remainder)) return lexm(1);
            return std::nullopt;
        }
        case RuleId::ForeignR2Exc: {
            auto hit = match_value_prefix(need("FOREIGN_R2_EXC"), tok);
            if (hit && vowel_follows(hit->remainder)) return lexm(1);
            return std::nullopt;
        }
        case RuleId::BisyllHaplVow: {
            auto hit = match_value_prefix(need("BISYLL_HAPL_VOW"), tok);
            if (hit && vowel_follows(hit->remainder)) return lexm(1);
            return std::nullopt;
        }
        case RuleId::BisyllHaplVowExc: {
            auto hit = match_value_prefix(need("BISYLL_HAPL_VOW_EXC"), tok);
            if (!hit) return std::nullopt;
            if (!adverb_loc_suffixes().count(hit->remainder)) return std::nullopt;
            auto stem_lv = last_vowel(decode_utf8(hit->entry->value));
            auto suf = decode_utf8(hit->remainder);
            if (!stem_lv || vowel_backness(*stem_lv) != vowel_backness(suf[1]))
                return std::nullopt;
            return lexm(1);
        }
        case RuleId::LightVerbSep: {
            CodepointString cps = decode_utf8(tok);
            if (contains_apostrophe(cps)) return std::nullopt;
            std::string low = to_lower_tr(tok);
            for (const auto& stop : light_verb_reverse_stoplist())
                if (starts_with(low, stop)) return std::nullopt;
            if (match_key_prefix(need("LIGHT_VERB_ADJ"), tok))
                return std::nullopt;  // correct adjacent spelling, not a join
            size_t best = find_aux_suffix(tok);
            if (best == 0) return std::nullopt;
            return pat(1);
        }
        case RuleId::LightVerbAdj: {
            if (i + 1 >= s.size()) return std::nullopt;
            if (find_adjacency(tok, s[i + 1])) return lexm(2);
            return std::nullopt;
        }
        case RuleId::CompVerbAdj: {
            if (i + 1 >= s.size()) return std::nullopt;
            const std::string& t1 = tok;
            const std::string& t2 = s[i + 1];
            CodepointString c1 = decode_utf8(t1);
            CodepointString c2 = decode_utf8(t2);
            if (c1.empty() || c2.empty()) return std::nullopt;
            if (contains_apostrophe(c1) || contains_apostrophe(c2))
                return std::nullopt;
            if (!is_converb_vowel(c1.back()) || count_vowels(c1) < 2)
                return std::nullopt;
            for (const auto& aux : comp_aux_stems()) {
                if (c2.size() <= aux.size()) continue;
                if (std::u32string_view(c2.data(), aux.size()) != aux) continue;
                std::string tail = encode_utf8(
                    std::u32string_view(c2.data() + aux.size(),
                                        c2.size() - aux.size()));
                if (verbal_tails().count(tail)) return pat(2);
            }
            return std::nullopt;
        }
        case RuleId::PronounExc: {
            if (i + 1 >= s.size()) return std::nullopt;
            for (const auto& e : need("PRONOUN_EXC").entries()) {
                Sentence words = split_tokens(e.value);
                if (words.size() != 2) continue;
                bool head_ok = (tok == words[0]) ||
                               (first_upper(tok) && lower_first(tok) == words[0]);
                if (!head_ok) continue;
                if (starts_with(s[i + 1], words[1])) return lexm(2);
            }
            return std::nullopt;
        }
        case RuleId::SentCap: {
            if (i != 0) return std::nullopt;
            CodepointString cps = decode_utf8(tok);
            if (cps.empty() || !is_letter_tr(cps.front()) ||
                !is_lower_tr(cps.front()))
                return std::nullopt;
            return pat(1);
        }
        case RuleId::Capped: {
            if (match_value_prefix(need("CAPPED"), tok)) return lexm(1);
            return std::nullopt;
        }
        case RuleId::Abbrev: {
            const Lexicon& lex = need("ABBREV");
            if (const LexiconEntry* e = lex.find_key(tok + ".")) {
                if (e->value == "period") return lexm(1);
            }
            size_t ap = tok.find('\'');
            if (ap == std::string::npos || ap == 0 || ap + 1 >= tok.size())
                return std::nullopt;
            const LexiconEntry* e = lex.find_key(tok.substr(0, ap));
            if (!e) return std::nullopt;
            CodepointString scps = decode_utf8(tok.substr(ap + 1));
            if (count_vowels(scps) == 0) return std::nullopt;
            if (e->value == "front" || e->value == "back") {
                Backness wrong = e->value == "front" ? Backness::Back
                                                     : Backness::Front;
                for (char32_t c : scps)
                    if (is_vowel_tr(c) && vowel_backness(c) != wrong)
                        return std::nullopt;
                return lexm(1);
            }
            if (e->value == "height") {
                bool any = false;
                for (char32_t c : scps) {
                    if (c == U'e' || c == U'a') any = true;
                    else if (c == U'i' || c == U'ı') return std::nullopt;
                }
                return any ? std::optional<RevMatch>(lexm(1)) : std::nullopt;
            }
            return std::nullopt;
        }
        case RuleId::PronouncExc: {
            CodepointString cps = decode_utf8(tok);
            if (contains_apostrophe(cps)) return std::nullopt;
            if (pronounce_site(cps, /*corrupted=*/true) == std::u32string::npos)
                return std::nullopt;
            return pat(1);
        }
    }
    return std::nullopt;
}

// Longest auxiliary surface form that terminates `tok`, leaving a noun of at
// least two codepoints with a vowel in front of it. 0 when none fits.
inline size_t RuleEngine::find_aux_suffix(const std::string& tok) const {
    size_t best = 0;
    for (const auto& aux : detail::light_verb_aux_forms()) {
        if (aux.size() >= tok.size()) continue;
        if (!detail::ends_with(tok, aux)) continue;
        std::string head = tok.substr(0, tok.size() - aux.size());
        CodepointString hc = decode_utf8(head);
        if (hc.size() < 2 || count_vowels(hc) == 0) continue;
        char32_t last = hc.back();
        if (!is_letter_tr(last) || is_vowel_tr(last)) continue;
        if (detail::light_verb_noun_stoplist().count(to_lower_tr(head))) continue;
        if (aux.size() > best) best = aux.size();
    }
    return best;
}

// Matches a (noun, inflected-auxiliary) pair against the adjacency pairs;
// returns the joined correct token when one fits.
inline std::optional<std::string> RuleEngine::find_adjacency(
    const std::string& t1, const std::string& t2) const {
    for (const auto& e : need("LIGHT_VERB_ADJ").entries()) {
        Sentence words = split_tokens(e.value);
        if (words.size() != 2) continue;
        bool cap = false;
        if (t1 != words[0]) {
            if (!(detail::first_upper(t1) && detail::lower_first(t1) == words[0]))
                continue;
            cap = true;
        }
        if (!detail::starts_with(t2, words[1])) continue;
        std::string tail = t2.substr(words[1].size());
        if (tail.empty() || !detail::verbal_tails().count(tail)) continue;
        std::string out = e.key + tail;
        return cap ? detail::upper_first(out) : out;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// reverse transformations

inline std::vector<std::string> RuleEngine::reverse_impl(RuleId rule,
                                                         const Sentence& s,
                                                         size_t start,
                                                         size_t len) const {
    using namespace detail;
    const std::string& tok = s[start];
    switch (rule) {
        case RuleId::ConjDeSep:
            return {tok.substr(0, tok.size() - 2), tok.substr(tok.size() - 2)};
        case RuleId::ConjDeVh: {
            auto want = harmony_variant("de", s[start - 1], false);
            return {*want};
        }
        case RuleId::ConjDeAr:
            return {std::string("d") + tok.substr(1)};
        case RuleId::Yada:
            return {tok.substr(0, tok.size() - 2), "da"};
        case RuleId::ConjDeApos: {
            CodepointString cps = decode_utf8(tok);
            std::string base =
                encode_utf8(std::u32string_view(cps.data(), cps.size() - 3));
            return {base, tok.substr(tok.size() - 2)};
        }
        case RuleId::CaseDe:
            return {tok + s[start + 1]};
        case RuleId::ConjKiSep:
            return {tok.substr(0, tok.size() - 2), "ki"};
        case RuleId::ConjKiExc: {
            const Lexicon& lex = need("CONJ_KI_EXC");
            std::string joined = tok;
            for (size_t k = 1; k < len; ++k) joined += " " + s[start + k];
            if (auto key = lex.lookup_reverse(joined)) return {*key};
            auto key = lex.lookup_reverse(lower_first(joined));
            return {upper_first(*key)};
        }
        case RuleId::ForeignR1:
        case RuleId::ForeignR2:
        case RuleId::ForeignR2Exc:
        case RuleId::BisyllHaplVow:
        case RuleId::BisyllHaplVowExc: {
            const Lexicon& lex = need(rule_info(rule).lexicon);
            auto hit = match_value_prefix(lex, tok);
            std::string out = hit->entry->key + hit->remainder;
            if (hit->recapitalize) out = upper_first(out);
            return {out};
        }
        case RuleId::LightVerbSep: {
            size_t n = find_aux_suffix(tok);
            return {tok.substr(0, tok.size() - n), tok.substr(tok.size() - n)};
        }
        case RuleId::LightVerbAdj: {
            auto adj = find_adjacency(tok, s[start + 1]);
            return {*adj};
        }
        case RuleId::CompVerbAdj:
            return {tok + s[start + 1]};
        case RuleId::PronounExc: {
            for (const auto& e : need("PRONOUN_EXC").entries()) {
                Sentence words = split_tokens(e.value);
                if (words.size() != 2) continue;
                if (tok == words[0] && starts_with(s[start + 1], words[1]))
                    return {e.key + s[start + 1].substr(words[1].size())};
                if (first_upper(tok) && lower_first(tok) == words[0] &&
                    starts_with(s[start + 1], words[1]))
                    return {upper_first(e.key) +
                            s[start + 1].substr(words[1].size())};
            }
            throw ReverseError("PRONOUN_EXC reverse: no adjacency entry");
        }
        case RuleId::SentCap:
            return {upper_first(tok)};
        case RuleId::Capped: {
            auto hit = match_value_prefix(need("CAPPED"), tok);
            std::string out = hit->entry->key + hit->remainder;
            if (hit->recapitalize) out = upper_first(out);
            return {out};
        }
        case RuleId::Abbrev: {
            const Lexicon& lex = need("ABBREV");
            if (const LexiconEntry* e = lex.find_key(tok + ".")) {
                if (e->value == "period") return {tok + "."};
            }
            size_t ap = tok.find('\'');
            std::string base = tok.substr(0, ap);
            std::string suffix = tok.substr(ap + 1);
            const LexiconEntry* e = lex.find_key(base);
            if (e->value == "front" || e->value == "back")
                return {base + "'" + flip_harmony_vowels(suffix)};
            // height: open vowels back to close
            CodepointString scps = decode_utf8(suffix);
            for (char32_t& c : scps) {
                if (c == U'e') c = U'i';
                else if (c == U'a') c = U'ı';
            }
            return {base + "'" + encode_utf8(scps)};
        }
        case RuleId::PronouncExc: {
            CodepointString cps = decode_utf8(tok);
            size_t k = pronounce_site(cps, /*corrupted=*/true);
            bool back = (cps[k] == U'ı' || cps[k] == U'u');
            cps[k] = back ? U'a' : U'e';
            return {encode_utf8(cps)};
        }
    }
    throw ReverseError("unhandled rule in reverse transformation");
}

}  // namespace turgec
