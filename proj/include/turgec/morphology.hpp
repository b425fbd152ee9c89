#pragma once

// Surface-level phonological/morphological analysis. This is a deliberately
// lightweight provider: enough signal for rule eligibility checks, computed
// from token text alone (plus one left neighbor for the part-of-speech
// guess). A heavier analyzer can be swapped in behind the same MorphInfo
// shape without touching the rule registry.

#include <optional>
#include <string>
#include <vector>

#include "turgec/text.hpp"

namespace turgec {

enum class Harmony { Back, Front, None };
enum class FinalConsonant { Fortis, Lenis, Vowel, Other };
enum class SuffixKind { Locative, CliticCandidate, PronounceableFuture, None };
enum class PosGuess { Conjunction, Other };

struct DetectedSuffix {
    std::string surface;  // suffix surface form; stem + surface == token
    SuffixKind kind = SuffixKind::None;
    std::string stem;
};

struct MorphInfo {
    Harmony harmony = Harmony::None;
    bool rounded = false;  // rounding of the last vowel
    FinalConsonant final_consonant = FinalConsonant::Other;
    size_t syllables = 0;  // vowel count
    DetectedSuffix detected_suffix;
    PosGuess pos_guess = PosGuess::Other;
    bool is_capitalized = false;
    bool has_apostrophe = false;
};

inline std::string to_lower_tr(std::string_view s) {
    CodepointString cps = decode_utf8(s);
    for (char32_t& c : cps) c = to_lower_tr_char(c);
    return encode_utf8(cps);
}

inline std::string to_upper_tr(std::string_view s) {
    CodepointString cps = decode_utf8(s);
    for (char32_t& c : cps) c = to_upper_tr_char(c);
    return encode_utf8(cps);
}

namespace detail {

// True when `cps` ends with one of de/da/te/ta spelled consistently as a
// locative suffix of the stem before it: vowel follows the stem's backness
// and the initial consonant assimilates after a fortis final.
inline bool locative_ending_consistent(const CodepointString& cps) {
    if (cps.size() < 4) return false;
    char32_t cons = cps[cps.size() - 2];
    char32_t vow = cps[cps.size() - 1];
    if ((cons != U'd' && cons != U't') || (vow != U'a' && vow != U'e'))
        return false;
    std::u32string_view stem(cps.data(), cps.size() - 2);
    auto lv = last_vowel(stem);
    if (!lv) return false;
    Backness want = vowel_backness(*lv);
    if (vowel_backness(vow) != want) return false;
    char32_t final_c = stem.back();
    bool fortis = is_fortis_consonant(final_c);
    return fortis ? cons == U't' : cons == U'd';
}

// Clitic candidate: ends in de/da with matching harmony but a consonant that
// contradicts the locative reading (e.g. fortis final + d), which only a
// joined conjunction produces.
inline bool clitic_candidate_ending(const CodepointString& cps) {
    if (cps.size() < 4) return false;
    char32_t cons = cps[cps.size() - 2];
    char32_t vow = cps[cps.size() - 1];
    if (cons != U'd' || (vow != U'a' && vow != U'e')) return false;
    std::u32string_view stem(cps.data(), cps.size() - 2);
    auto lv = last_vowel(stem);
    if (!lv) return false;
    if (vowel_backness(vow) != vowel_backness(*lv)) return false;
    return is_fortis_consonant(stem.back());
}

// Index of the a/e that sits before y + future/participle material
// (…ayacak/…eyecek and their softened forms), or npos.
inline size_t pronounceable_future_site(const CodepointString& cps) {
    static const std::u32string_view tails[] = {U"acak", U"ecek", U"acağ",
                                                U"eceğ"};
    for (size_t k = 0; k + 2 < cps.size(); ++k) {
        char32_t v = cps[k];
        if (v != U'a' && v != U'e') continue;
        if (cps[k + 1] != U'y') continue;
        std::u32string_view rest(cps.data() + k + 2, cps.size() - k - 2);
        for (auto t : tails) {
            if (rest.size() >= t.size() && rest.substr(0, t.size()) == t) {
                bool back = (t[0] == U'a');
                if ((v == U'a') == back) return k;
            }
        }
    }
    return std::u32string::npos;
}

}  // namespace detail

inline MorphInfo analyze_token(const std::string& token,
                               const std::string* left_neighbor) {
    MorphInfo m;
    CodepointString cps = decode_utf8(token);
    if (cps.empty()) return m;

    m.syllables = count_vowels(cps);
    if (auto lv = last_vowel(cps)) {
        Backness b = vowel_backness(*lv);
        m.harmony = (b == Backness::Back) ? Harmony::Back : Harmony::Front;
        m.rounded = is_rounded_vowel(*lv);
    }

    char32_t last = cps.back();
    if (is_vowel_tr(last))
        m.final_consonant = FinalConsonant::Vowel;
    else if (is_fortis_consonant(last))
        m.final_consonant = FinalConsonant::Fortis;
    else if (is_letter_tr(last))
        m.final_consonant = FinalConsonant::Lenis;
    else
        m.final_consonant = FinalConsonant::Other;

    m.is_capitalized = is_upper_tr(cps.front());
    m.has_apostrophe = contains_apostrophe(cps);

    // Standalone de/da between words: on grammatically correct input the
    // separately written clitic is the conjunction.
    if (left_neighbor != nullptr && (token == "de" || token == "da"))
        m.pos_guess = PosGuess::Conjunction;

    size_t fut = detail::pronounceable_future_site(cps);
    if (fut != std::u32string::npos) {
        m.detected_suffix.kind = SuffixKind::PronounceableFuture;
        m.detected_suffix.stem = encode_utf8(std::u32string_view(cps.data(), fut));
        m.detected_suffix.surface =
            encode_utf8(std::u32string_view(cps.data() + fut, cps.size() - fut));
    } else if (detail::locative_ending_consistent(cps)) {
        m.detected_suffix.kind = SuffixKind::Locative;
        m.detected_suffix.stem =
            encode_utf8(std::u32string_view(cps.data(), cps.size() - 2));
        m.detected_suffix.surface =
            encode_utf8(std::u32string_view(cps.data() + cps.size() - 2, 2));
    } else if (detail::clitic_candidate_ending(cps)) {
        m.detected_suffix.kind = SuffixKind::CliticCandidate;
        m.detected_suffix.stem =
            encode_utf8(std::u32string_view(cps.data(), cps.size() - 2));
        m.detected_suffix.surface =
            encode_utf8(std::u32string_view(cps.data() + cps.size() - 2, 2));
    }
    return m;
}

inline std::vector<MorphInfo> analyze(const Sentence& sentence) {
    std::vector<MorphInfo> out;
    out.reserve(sentence.size());
    for (size_t i = 0; i < sentence.size(); ++i)
        out.push_back(analyze_token(sentence[i], i ? &sentence[i - 1] : nullptr));
    return out;
}

// Correct surface of the de/da clitic after `preceding_token`. The vowel
// follows the last vowel's backness; the consonant assimilates to t only
// when asked for (the locative does, the conjunction never does). Empty
// result means the preceding token has no vowel to harmonize with.
inline std::optional<std::string> harmony_variant(std::string_view base_clitic,
                                                  std::string_view preceding_token,
                                                  bool assimilate) {
    (void)base_clitic;  // single clitic family: de/da/te/ta
    CodepointString prev = decode_utf8(preceding_token);
    auto lv = last_vowel(prev);
    if (!lv) return std::nullopt;
    bool back = vowel_backness(*lv) == Backness::Back;
    bool fortis = !prev.empty() && is_fortis_consonant(prev.back());
    std::string out;
    out.push_back((assimilate && fortis) ? 't' : 'd');
    append_utf8(out, back ? U'a' : U'e');
    return out;
}

}  // namespace turgec
