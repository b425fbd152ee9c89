#pragma once

// Brute-force alignment oracle, independent of the scorer's dynamic
// program: enumerate complete monotone op sequences depth-first with
// match > substitute > delete > insert preference, keep the first sequence
// that realizes the minimal cost, and merge non-match runs into edits.
// Exponential; fine for the <= 8-token instances it oracles.

#include <optional>
#include <string>
#include <vector>

#include "turgec/scoring.hpp"
#include "turgec/text.hpp"

namespace oracle {

enum class Op { Match, Sub, Del, Ins };

inline size_t best_cost(const turgec::Sentence& s, const turgec::Sentence& h,
                        size_t i, size_t j) {
    if (i == s.size()) return h.size() - j;
    if (j == h.size()) return s.size() - i;
    size_t sub = best_cost(s, h, i + 1, j + 1) + (s[i] == h[j] ? 0 : 1);
    size_t del = best_cost(s, h, i + 1, j) + 1;
    size_t ins = best_cost(s, h, i, j + 1) + 1;
    return std::min({sub, del, ins});
}

inline bool dfs(const turgec::Sentence& s, const turgec::Sentence& h, size_t i,
                size_t j, size_t budget, std::vector<Op>& ops) {
    if (i == s.size() && j == h.size()) return budget == 0;
    if (i < s.size() && j < h.size() && s[i] == h[j]) {
        ops.push_back(Op::Match);
        if (dfs(s, h, i + 1, j + 1, budget, ops)) return true;
        ops.pop_back();
    }
    if (budget > 0) {
        if (i < s.size() && j < h.size() && s[i] != h[j]) {
            ops.push_back(Op::Sub);
            if (dfs(s, h, i + 1, j + 1, budget - 1, ops)) return true;
            ops.pop_back();
        }
        if (i < s.size()) {
            ops.push_back(Op::Del);
            if (dfs(s, h, i + 1, j, budget - 1, ops)) return true;
            ops.pop_back();
        }
        if (j < h.size()) {
            ops.push_back(Op::Ins);
            if (dfs(s, h, i, j + 1, budget - 1, ops)) return true;
            ops.pop_back();
        }
    }
    return false;
}

inline std::vector<turgec::ExtractedEdit> extract_edits_oracle(
    const turgec::Sentence& s, const turgec::Sentence& h) {
    std::vector<Op> ops;
    bool found = dfs(s, h, 0, 0, best_cost(s, h, 0, 0), ops);
    (void)found;
    std::vector<turgec::ExtractedEdit> out;
    size_t si = 0, hj = 0;
    std::optional<size_t> run_s, run_h;
    auto close = [&] {
        if (!run_s) return;
        std::string repl;
        for (size_t k = *run_h; k < hj; ++k) {
            if (k > *run_h) repl.push_back(' ');
            repl += h[k];
        }
        out.push_back(turgec::ExtractedEdit{*run_s, si, repl});
        run_s.reset();
        run_h.reset();
    };
    for (Op op : ops) {
        if (op == Op::Match) {
            close();
            ++si, ++hj;
            continue;
        }
        if (!run_s) {
            run_s = si;
            run_h = hj;
        }
        if (op == Op::Sub) ++si, ++hj;
        else if (op == Op::Del) ++si;
        else ++hj;
    }
    close();
    return out;
}

}  // namespace oracle
