#ifndef BRAMSEY_MATCHING_HPP
#define BRAMSEY_MATCHING_HPP

#include <utility>
#include <variant>
#include <vector>

#include "bramsey/cycle.hpp" // VerifyResult
#include "bramsey/graph.hpp"

namespace bramsey {

struct Matching {
    std::vector<std::pair<int, int>> edges; // (x, y), sorted by x
    int size() const { return int(edges.size()); }
    int saturated() const { return 2 * int(edges.size()); }
};

// Largest matching confined to one component of a color class.
struct ConnectedMatchingCertificate {
    int color = 0;       // 0 when the source view admits several colors
    int component_id = -1; // index in components() order, -1 when edgeless
    Component component;
    Matching matching;
    int saturated = 0;
};

// Witness that no matching saturating alpha vertices exists: T induces a
// low-degree subgraph, T and U are not joined by any edge, and |U|+2|S| is
// small. All comparisons against sqrt(|V|) are done in exact integer
// arithmetic.
struct TutteDecomposition {
    Bits s_x, s_y, t_x, t_y, u_x, u_y;
    long long alpha = 0;
};

Matching max_matching(const GraphView& v);

ConnectedMatchingCertificate largest_connected_matching(const GraphView& v);

// Either a matching saturating >= alpha vertices, or a decomposition whose
// three properties verify. The decomposition is built from alternating-path
// reachability off a maximum matching (separator = odd-level vertices), with
// components of the remainder split into T (size < sqrt|V|) and U. If that
// triple ever failed to verify, an exhaustive separator search runs for
// |V| <= 20; beyond that the operation reports failure.
std::variant<Matching, TutteDecomposition> tutte_partition(const GraphView& v, long long alpha);

VerifyResult verify_tutte(const GraphView& v, const TutteDecomposition& d);

// Per color 1..r, the largest connected matching of that color class.
std::vector<ConnectedMatchingCertificate> best_connected_matchings(const ColoredBipartiteGraph& g);

} // namespace bramsey

#endif
