#pragma once

// Rule-based detection and correction: every rule's corrupted-pattern
// recognizer runs over the sentence, overlaps are resolved deterministically
// (longer span, then lexicon over pattern provenance, then registry order),
// and the surviving spans are fixed by their reverse transformations.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "turgec/rules.hpp"
#include "turgec/text.hpp"

namespace turgec {

struct Detection {
    size_t start = 0;
    size_t end = 0;
    RuleId rule = RuleId::ConjDeSep;
    RuleEngine::Provenance provenance = RuleEngine::Provenance::Pattern;
};

struct CorrectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<Detection> detect(const RuleEngine& engine,
                                     const Sentence& tokens) {
    std::vector<Detection> candidates;
    for (size_t i = 0; i < tokens.size(); ++i) {
        for (const auto& info : rule_table()) {
            auto m = engine.match_corrupted(info.id, tokens, i);
            if (!m) continue;
            candidates.push_back(
                Detection{i, i + m->length, info.id, m->provenance});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Detection& a, const Detection& b) {
                         size_t la = a.end - a.start, lb = b.end - b.start;
                         if (la != lb) return la > lb;
                         if (a.provenance != b.provenance)
                             return a.provenance ==
                                    RuleEngine::Provenance::Lexicon;
                         if (a.rule != b.rule) return a.rule < b.rule;
                         return a.start < b.start;
                     });
    std::vector<Detection> picked;
    for (const Detection& c : candidates) {
        bool clash = false;
        for (const Detection& p : picked)
            if (c.start < p.end && p.start < c.end) {
                clash = true;
                break;
            }
        if (!clash) picked.push_back(c);
    }
    std::sort(picked.begin(), picked.end(),
              [](const Detection& a, const Detection& b) {
                  return a.start < b.start;
              });
    return picked;
}

inline Sentence correct(const RuleEngine& engine, const Sentence& tokens,
                        const std::vector<Detection>& detections) {
    for (size_t k = 0; k + 1 < detections.size(); ++k)
        if (detections[k].end > detections[k + 1].start)
            throw CorrectionError("correct: detections overlap");
    Sentence out = tokens;
    for (size_t k = detections.size(); k > 0; --k) {
        const Detection& d = detections[k - 1];
        if (d.end > out.size())
            throw CorrectionError("correct: detection span out of range");
        std::vector<std::string> repl;
        try {
            repl = engine.apply_reverse(d.rule, out, Span{d.start, d.end});
        } catch (const ReverseError& e) {
            throw CorrectionError(std::string("correct: ") + e.what());
        }
        out.erase(out.begin() + static_cast<ptrdiff_t>(d.start),
                  out.begin() + static_cast<ptrdiff_t>(d.end));
        out.insert(out.begin() + static_cast<ptrdiff_t>(d.start), repl.begin(),
                   repl.end());
    }
    return out;
}

inline Sentence detect_and_correct(const RuleEngine& engine,
                                   const Sentence& tokens) {
    return correct(engine, tokens, detect(engine, tokens));
}

}  // namespace turgec
