#ifndef BRAMSEY_RAMSEY_HPP
#define BRAMSEY_RAMSEY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bramsey/cycle.hpp"
#include "bramsey/graph.hpp"

namespace bramsey {

enum class RamseyOutcome { AllColoringsHit, GoodColoring, BudgetExhausted };

// Result of one arrowing decision. A GoodColoring outcome always carries a
// complete coloring that re-verified against the cycle searcher (no color i
// contains a cycle of length lengths[i]).
struct RamseyVerdict {
    int N = 0;
    std::vector<int> lengths; // forbidden cycle lengths per color
    RamseyOutcome outcome = RamseyOutcome::BudgetExhausted;
    std::optional<ColoredBipartiteGraph> good_coloring;
    long long nodes_explored = 0;
    double wall_ms = 0; // excluded from deterministic artifacts
    std::string resume_state; // JSON cursor, set when BudgetExhausted
};

// Exhaustive backtracking over complete r-colorings of K_{N,N} in row-major
// cell order with incremental exact-length cycle checks through each new
// edge and lex-leader symmetry pruning (row perms, column perms, and color
// perms among repeated lengths). r <= 3. `resume_state` restarts a budgeted
// search from its serialized cursor; `jobs` > 1 splits the first cells
// across threads (deterministic merge, no resume support).
RamseyVerdict decide_arrowing(int N, const std::vector<int>& lengths, Budget budget = {},
                              const std::string& resume_state = "", int jobs = 1);

struct BramseyResult {
    std::vector<int> lengths;
    std::optional<int> value; // exact when the scan closed
    int lo = 0;               // the value is always >= lo
    std::optional<int> hi;
    std::optional<ColoredBipartiteGraph> certificate; // good coloring at lo-1
    long long nodes_explored = 0;
    std::vector<std::pair<int, int>> scan; // (N, outcome as int)
};

// Scans N upward from the construction lower bound sum(n_i) - r + 1. Exact
// value when every decision closes within budget, otherwise the bracketing
// interval with the last verified good coloring.
BramseyResult ramsey_value(const std::vector<int>& lengths, int n_max, Budget budget = {},
                      int jobs = 1);

} // namespace bramsey

#endif
