#ifndef BRAMSEY_CYCLE_HPP
#define BRAMSEY_CYCLE_HPP

#include <string>
#include <vector>

#include "bramsey/graph.hpp"

namespace bramsey {

// Explicit witness for a monochromatic cycle: vertices alternate
// x_1, y_1, ..., x_l, y_l and the closing pair (y_l, x_1) is an edge of the
// stated color, like every consecutive pair.
struct CycleCertificate {
    int color = 0;
    std::vector<Vertex> vertices;
    int length() const { return int(vertices.size()); }
};

enum class SearchOutcome { Found, Absent, Unknown };

// Soft limits for searches. max_nodes keeps runs deterministic; max_ms is a
// cooperative wall-clock cap (checked every few thousand nodes). Negative
// values mean unlimited.
struct Budget {
    long long max_nodes = -1;
    double max_ms = -1;
};

struct CycleSearchResult {
    SearchOutcome outcome = SearchOutcome::Absent;
    CycleCertificate certificate; // valid only when Found
    long long nodes = 0;
};

// Exact-length cycle detection on a single-color view. Exhaustive (no false
// Absent) whenever the search completes within budget; the returned
// certificate is the lexicographically least one under the fixed order
// (anchor = smallest X index on the cycle, neighbors explored ascending).
CycleSearchResult find_cycle_of_length(const GraphView& v, int target, Budget budget = {});

struct VerifyResult {
    bool ok = false;
    std::string reason; // first failing check when !ok
};

// Re-checks every certificate invariant against the graph; shares no state
// with the search.
VerifyResult verify_cycle(const ColoredBipartiteGraph& g, const CycleCertificate& cert);

// Longest even cycle length in the view, 0 for forests. Exactness is only
// guaranteed at small sizes, so views with more than 32 admissible vertices
// per side are rejected.
int circumference(const GraphView& v);

} // namespace bramsey

#endif
