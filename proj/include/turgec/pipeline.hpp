#pragma once

// Corpus-scale generation: per-sentence corruption with shuffled rule order,
// probability gating and once-per-token flags, the reverse-transformation
// round-trip filter, error-free composition control, and splitting.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "turgec/config.hpp"
#include "turgec/m2.hpp"
#include "turgec/morphology.hpp"
#include "turgec/rng.hpp"
#include "turgec/rules.hpp"
#include "turgec/text.hpp"

namespace turgec {

namespace rng_purpose {
inline constexpr uint64_t kSentence = 1;
inline constexpr uint64_t kShuffle = 2;
}  // namespace rng_purpose

struct GenerationReport {
    uint64_t seed = 0;
    std::string config_digest;
    size_t input_lines = 0;
    size_t unique_sentences = 0;
    size_t duplicates_removed = 0;
    size_t emitted = 0;
    size_t dropped = 0;
    size_t error_free = 0;
    std::array<size_t, 3> split_sizes = {0, 0, 0};
    std::map<std::string, size_t> rule_counts;
    bool high_drop_warning = false;

    size_t total_annotations() const {
        size_t n = 0;
        for (const auto& [_, c] : rule_counts) n += c;
        return n;
    }
};

struct GenerationResult {
    std::array<std::vector<AnnotatedPair>, 3> splits;  // train, val, test
    GenerationReport report;
};

// One sentence through the corruption loop. Rules are visited in an order
// drawn from the stream; each rule scans tokens left to right; a site fires
// when its tokens are still untouched, the rule is eligible, and a
// Bernoulli(p) draw succeeds. Fired spans are flagged so no token is
// transformed twice. When a full pass fires nothing, the pass is re-drawn up
// to cfg.max_passes times so sentences with eligible sites rarely come back
// clean; a sentence with no eligible site at all returns unchanged.
inline AnnotatedPair corrupt_sentence(const Sentence& original,
                                      const RuleEngine& engine,
                                      const PipelineConfig& cfg,
                                      RngStream& rng) {
    struct Rec {
        size_t start;
        size_t emitted;
        RuleId rule;
        std::string correction;
    };

    std::vector<RuleId> order;
    for (const auto& r : rule_table())
        if (cfg.enabled_rules.count(r.id) && cfg.probability(r.id) > 0.0)
            order.push_back(r.id);

    Sentence tokens = original;
    std::vector<char> untouched(tokens.size(), 1);
    std::vector<Rec> recs;

    for (int pass = 0; pass < cfg.max_passes && recs.empty(); ++pass) {
        bool any_eligible = false;
        rng.shuffle(order);
        for (RuleId rule : order) {
            double p = cfg.probability(rule);
            std::vector<MorphInfo> morph = analyze(tokens);
            size_t i = 0;
            while (i < tokens.size()) {
                if (!untouched[i]) {
                    ++i;
                    continue;
                }
                auto fwd = engine.try_forward(rule, tokens, morph, i);
                if (!fwd) {
                    ++i;
                    continue;
                }
                size_t lo = fwd->span_start;
                size_t consumed = fwd->original.size();
                bool free_span = true;
                for (size_t k = lo; k < lo + consumed; ++k)
                    if (!untouched[k]) free_span = false;
                if (!free_span) {
                    ++i;
                    continue;
                }
                any_eligible = true;
                if (!rng.bernoulli(p)) {
                    ++i;
                    continue;
                }
                // splice tokens and flags, shift earlier records
                size_t emitted = fwd->replacement.size();
                tokens.erase(tokens.begin() + static_cast<ptrdiff_t>(lo),
                             tokens.begin() + static_cast<ptrdiff_t>(lo + consumed));
                tokens.insert(tokens.begin() + static_cast<ptrdiff_t>(lo),
                              fwd->replacement.begin(), fwd->replacement.end());
                untouched.erase(untouched.begin() + static_cast<ptrdiff_t>(lo),
                                untouched.begin() +
                                    static_cast<ptrdiff_t>(lo + consumed));
                untouched.insert(untouched.begin() + static_cast<ptrdiff_t>(lo),
                                 emitted, 0);
                for (Rec& r : recs)
                    if (r.start > lo) r.start += emitted - consumed;
                Rec rec;
                rec.start = lo;
                rec.emitted = emitted;
                rec.rule = rule;
                rec.correction = join_tokens(fwd->original);
                recs.push_back(std::move(rec));
                morph = analyze(tokens);
                i = lo + emitted;
            }
        }
        if (!any_eligible) break;
    }

    std::sort(recs.begin(), recs.end(),
              [](const Rec& a, const Rec& b) { return a.start < b.start; });
    AnnotatedPair pair;
    pair.tokens = std::move(tokens);
    for (const Rec& r : recs)
        pair.edits.push_back(Edit{r.start, r.start + r.emitted, r.rule,
                                  r.correction});
    return pair;
}

// The postprocessing filter: reverse-transform every edited span (right to
// left) and require byte-exact reconstruction of the original sentence.
inline bool validate_roundtrip(const RuleEngine& engine,
                               const AnnotatedPair& pair,
                               const Sentence& original) {
    Sentence cur = pair.tokens;
    for (size_t k = pair.edits.size(); k > 0; --k) {
        const Edit& e = pair.edits[k - 1];
        std::vector<std::string> restored;
        try {
            restored = engine.apply_reverse(e.rule, cur, Span{e.start, e.end});
        } catch (const ReverseError&) {
            return false;
        }
        if (join_tokens(restored) != e.correction) return false;
        cur.erase(cur.begin() + static_cast<ptrdiff_t>(e.start),
                  cur.begin() + static_cast<ptrdiff_t>(e.end));
        cur.insert(cur.begin() + static_cast<ptrdiff_t>(e.start),
                   restored.begin(), restored.end());
    }
    return cur == original;
}

inline GenerationResult generate_corpus(const std::vector<std::string>& lines,
                                        const PipelineConfig& cfg,
                                        const RuleEngine& engine,
                                        unsigned n_threads = 1) {
    cfg.validate();

    // normalize + dedupe, preserving first-seen order
    std::vector<Sentence> sentences;
    std::set<std::string> seen;
    size_t nonempty = 0;
    for (const std::string& raw : lines) {
        std::string norm = normalize_sentence(raw);
        if (norm.empty()) continue;
        ++nonempty;
        if (!seen.insert(norm).second) continue;
        sentences.push_back(split_tokens(norm));
    }
    if (sentences.empty())
        throw std::invalid_argument("generate_corpus: no input sentences");

    GenerationReport report;
    report.seed = cfg.seed;
    report.config_digest = config_digest(cfg);
    report.input_lines = nonempty;
    report.unique_sentences = sentences.size();
    report.duplicates_removed = nonempty - sentences.size();

    struct Outcome {
        AnnotatedPair pair;
        bool dropped = false;
    };
    std::vector<Outcome> outcomes(sentences.size());

    auto work = [&](size_t lo, size_t hi) {
        for (size_t idx = lo; idx < hi; ++idx) {
            RngStream rng =
                RngStream::derive(cfg.seed, rng_purpose::kSentence, idx);
            Outcome& out = outcomes[idx];
            bool keep_clean = rng.bernoulli(cfg.error_free_fraction);
            if (keep_clean) {
                out.pair.tokens = sentences[idx];
                continue;
            }
            AnnotatedPair pair = corrupt_sentence(sentences[idx], engine, cfg, rng);
            if (!pair.edits.empty() &&
                !validate_roundtrip(engine, pair, sentences[idx])) {
                out.dropped = true;
                continue;
            }
            out.pair = std::move(pair);
        }
    };

    if (n_threads <= 1 || sentences.size() < 2) {
        work(0, sentences.size());
    } else {
        unsigned workers = std::min<unsigned>(
            n_threads, static_cast<unsigned>(sentences.size()));
        std::vector<std::thread> threads;
        size_t chunk = (sentences.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            size_t lo = w * chunk;
            size_t hi = std::min(sentences.size(), lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(work, lo, hi);
        }
        for (auto& t : threads) t.join();
    }

    std::vector<AnnotatedPair> emitted;
    emitted.reserve(sentences.size());
    size_t corrupted_kept = 0;
    for (Outcome& o : outcomes) {
        if (o.dropped) {
            ++report.dropped;
            continue;
        }
        if (o.pair.edits.empty())
            ++report.error_free;
        else
            ++corrupted_kept;
        for (const Edit& e : o.pair.edits)
            ++report.rule_counts[std::string(rule_name(e.rule))];
        emitted.push_back(std::move(o.pair));
    }
    report.emitted = emitted.size();
    report.high_drop_warning =
        report.dropped > 0 && report.dropped * 2 > report.dropped + corrupted_kept;

    RngStream shuffle_rng =
        RngStream::derive(cfg.seed, rng_purpose::kShuffle, 0);
    shuffle_rng.shuffle(emitted);

    // largest-remainder split so sizes are exact
    size_t n = emitted.size();
    std::array<size_t, 3> sizes;
    std::array<double, 3> frac;
    size_t assigned = 0;
    for (int k = 0; k < 3; ++k) {
        double raw = cfg.split_ratios[k] * static_cast<double>(n);
        sizes[k] = static_cast<size_t>(raw);
        frac[k] = raw - static_cast<double>(sizes[k]);
        assigned += sizes[k];
    }
    while (assigned < n) {
        int best = 0;
        for (int k = 1; k < 3; ++k)
            if (frac[k] > frac[best]) best = k;
        ++sizes[best];
        frac[best] = -1.0;
        ++assigned;
    }
    report.split_sizes = sizes;

    GenerationResult result;
    result.report = report;
    size_t at = 0;
    for (int k = 0; k < 3; ++k) {
        result.splits[k].assign(
            std::make_move_iterator(emitted.begin() + static_cast<ptrdiff_t>(at)),
            std::make_move_iterator(emitted.begin() +
                                    static_cast<ptrdiff_t>(at + sizes[k])));
        at += sizes[k];
    }
    return result;
}

}  // namespace turgec
