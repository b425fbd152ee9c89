#pragma once

// Evaluation: correction scoring over extracted edits (P/R/F0.5, corpus
// level) and detection scoring over per-token rule labels (macro P/R/F1,
// span or token granularity).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "turgec/m2.hpp"
#include "turgec/text.hpp"

namespace turgec {

struct ExtractedEdit {
    size_t start = 0;  // source span, token indices
    size_t end = 0;
    std::string replacement;  // hypothesis tokens joined by spaces

    bool operator==(const ExtractedEdit&) const = default;
};

// Minimal-cost token alignment (insert/delete/substitute at unit cost),
// deterministic: walking from the left, a match is preferred, then a
// substitution, then a deletion, then an insertion, among steps that stay on
// a minimal path. Maximal runs of non-match operations merge into one edit.
inline std::vector<ExtractedEdit> extract_edits(const Sentence& source,
                                                const Sentence& hypothesis) {
    const size_t n = source.size(), m = hypothesis.size();
    // suffix costs: cost[i][j] = edits aligning source[i..) to hypothesis[j..)
    std::vector<std::vector<size_t>> cost(n + 1, std::vector<size_t>(m + 1, 0));
    for (size_t i = 0; i <= n; ++i) cost[i][m] = n - i;
    for (size_t j = 0; j <= m; ++j) cost[n][j] = m - j;
    for (size_t i = n; i-- > 0;) {
        for (size_t j = m; j-- > 0;) {
            size_t sub = cost[i + 1][j + 1] + (source[i] == hypothesis[j] ? 0 : 1);
            size_t del = cost[i + 1][j] + 1;
            size_t ins = cost[i][j + 1] + 1;
            cost[i][j] = std::min({sub, del, ins});
        }
    }
    enum class Op { Match, Sub, Del, Ins };
    std::vector<Op> ops;
    size_t i = 0, j = 0;
    while (i < n || j < m) {
        size_t c = cost[i][j];
        if (i < n && j < m && source[i] == hypothesis[j] &&
            cost[i + 1][j + 1] == c) {
            ops.push_back(Op::Match);
            ++i, ++j;
        } else if (i < n && j < m && cost[i + 1][j + 1] + 1 == c) {
            ops.push_back(Op::Sub);
            ++i, ++j;
        } else if (i < n && cost[i + 1][j] + 1 == c) {
            ops.push_back(Op::Del);
            ++i;
        } else {
            ops.push_back(Op::Ins);
            ++j;
        }
    }
    std::vector<ExtractedEdit> out;
    size_t si = 0, hj = 0;
    size_t run_s = 0, run_h = 0;
    bool in_run = false;
    auto close_run = [&] {
        if (!in_run) return;
        std::string repl;
        for (size_t k = run_h; k < hj; ++k) {
            if (k > run_h) repl.push_back(' ');
            repl += hypothesis[k];
        }
        out.push_back(ExtractedEdit{run_s, si, repl});
        in_run = false;
    };
    for (Op op : ops) {
        if (op == Op::Match) {
            close_run();
            ++si, ++hj;
            continue;
        }
        if (!in_run) {
            run_s = si;
            run_h = hj;
            in_run = true;
        }
        if (op == Op::Sub) ++si, ++hj;
        else if (op == Op::Del) ++si;
        else ++hj;
    }
    close_run();
    return out;
}

struct ClassScore {
    std::string label;
    double precision = 0.0;
    double recall = 0.0;
    double f_score = 0.0;
    size_t matched = 0;
    size_t proposed = 0;
    size_t gold = 0;
};

struct ScoreReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_score = 0.0;
    double beta = 0.5;
    size_t matched = 0;
    size_t proposed = 0;
    size_t gold = 0;
    std::vector<ClassScore> per_class;  // detection only
};

inline double f_beta(double p, double r, double beta) {
    double b2 = beta * beta;
    double denom = b2 * p + r;
    if (denom <= 0.0) return 0.0;
    return (1.0 + b2) * p * r / denom;
}

// Correction scoring: a system edit counts iff a gold edit with the same span
// and the same correction text exists. Counts are summed corpus-wide first.
inline ScoreReport score_correction(const std::vector<Sentence>& hypotheses,
                                    const std::vector<AnnotatedPair>& gold) {
    if (hypotheses.size() != gold.size())
        throw std::invalid_argument(
            "score_correction: hypothesis count (" +
            std::to_string(hypotheses.size()) + ") != gold record count (" +
            std::to_string(gold.size()) + ")");
    ScoreReport rep;
    rep.beta = 0.5;
    for (size_t r = 0; r < gold.size(); ++r) {
        std::vector<ExtractedEdit> sys = extract_edits(gold[r].tokens, hypotheses[r]);
        rep.proposed += sys.size();
        rep.gold += gold[r].edits.size();
        for (const ExtractedEdit& e : sys)
            for (const Edit& g : gold[r].edits)
                if (g.start == e.start && g.end == e.end &&
                    g.correction == e.replacement) {
                    ++rep.matched;
                    break;
                }
    }
    rep.precision = rep.proposed ? static_cast<double>(rep.matched) / rep.proposed : 0.0;
    rep.recall = rep.gold ? static_cast<double>(rep.matched) / rep.gold : 0.0;
    rep.f_score = f_beta(rep.precision, rep.recall, rep.beta);
    return rep;
}

// Token labels for one record: the empty string marks no-error tokens.
inline std::vector<std::string> labels_from_pair(const AnnotatedPair& pair) {
    std::vector<std::string> labels(pair.tokens.size());
    for (const Edit& e : pair.edits)
        for (size_t k = e.start; k < e.end && k < labels.size(); ++k)
            labels[k] = std::string(rule_name(e.rule));
    return labels;
}

using LabelSequence = std::vector<std::string>;

namespace detail {

struct LabeledSpan {
    size_t record;
    size_t start;
    size_t end;
    std::string label;
    bool operator==(const LabeledSpan&) const = default;
};

inline std::vector<LabeledSpan> spans_of(const std::vector<LabelSequence>& seqs) {
    std::vector<LabeledSpan> out;
    for (size_t r = 0; r < seqs.size(); ++r) {
        const LabelSequence& seq = seqs[r];
        size_t i = 0;
        while (i < seq.size()) {
            if (seq[i].empty()) {
                ++i;
                continue;
            }
            size_t j = i + 1;
            while (j < seq.size() && seq[j] == seq[i]) ++j;
            out.push_back(LabeledSpan{r, i, j, seq[i]});
            i = j;
        }
    }
    return out;
}

}  // namespace detail

// Detection scoring: per class (error type), a predicted span is a true
// positive iff an identical gold span exists (same boundaries and label).
// Per-class P/R/F1 are then macro-averaged over the classes present in gold
// or predictions. Token granularity replaces spans with individual tokens.
inline ScoreReport score_detection(const std::vector<LabelSequence>& predicted,
                                   const std::vector<LabelSequence>& gold,
                                   bool token_level = false) {
    if (predicted.size() != gold.size())
        throw std::invalid_argument("score_detection: record count mismatch");
    for (size_t r = 0; r < gold.size(); ++r)
        if (predicted[r].size() != gold[r].size())
            throw std::invalid_argument(
                "score_detection: label sequence length mismatch at record " +
                std::to_string(r));

    std::map<std::string, ClassScore> classes;
    if (!token_level) {
        auto psp = detail::spans_of(predicted);
        auto gsp = detail::spans_of(gold);
        for (const auto& s : psp) {
            ClassScore& c = classes[s.label];
            c.label = s.label;
            ++c.proposed;
            if (std::find(gsp.begin(), gsp.end(), s) != gsp.end()) ++c.matched;
        }
        for (const auto& s : gsp) {
            ClassScore& c = classes[s.label];
            c.label = s.label;
            ++c.gold;
        }
    } else {
        for (size_t r = 0; r < gold.size(); ++r)
            for (size_t i = 0; i < gold[r].size(); ++i) {
                const std::string& p = predicted[r][i];
                const std::string& g = gold[r][i];
                if (!p.empty()) {
                    ClassScore& c = classes[p];
                    c.label = p;
                    ++c.proposed;
                    if (p == g) ++c.matched;
                }
                if (!g.empty()) {
                    ClassScore& c = classes[g];
                    c.label = g;
                    ++c.gold;
                }
            }
    }

    ScoreReport rep;
    rep.beta = 1.0;
    double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
    for (auto& [_, c] : classes) {
        c.precision = c.proposed ? static_cast<double>(c.matched) / c.proposed : 0.0;
        c.recall = c.gold ? static_cast<double>(c.matched) / c.gold : 0.0;
        c.f_score = f_beta(c.precision, c.recall, 1.0);
        sum_p += c.precision;
        sum_r += c.recall;
        sum_f += c.f_score;
        rep.matched += c.matched;
        rep.proposed += c.proposed;
        rep.gold += c.gold;
        rep.per_class.push_back(c);
    }
    size_t k = classes.size();
    rep.precision = k ? sum_p / static_cast<double>(k) : 0.0;
    rep.recall = k ? sum_r / static_cast<double>(k) : 0.0;
    rep.f_score = k ? sum_f / static_cast<double>(k) : 0.0;
    return rep;
}

}  // namespace turgec
