#ifndef BRAMSEY_TEST_HELPERS_HPP
#define BRAMSEY_TEST_HELPERS_HPP

#include <functional>
#include <vector>

#include "bramsey/graph.hpp"
#include "bramsey/rng.hpp"

namespace testutil {

using namespace bramsey;

inline ColoredBipartiteGraph complete(int n1, int n2, int color = 1, int r = 1) {
    std::vector<EdgeColor> es;
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y) es.push_back({x, y, color});
    return ColoredBipartiteGraph::build(n1, n2, r, es);
}

// single-color random graph with edge probability pnum/100
inline ColoredBipartiteGraph random_graph(int n1, int n2, uint64_t pnum, uint64_t seed) {
    Rng rng(seed);
    std::vector<EdgeColor> es;
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y)
            if (rng.chance(pnum, 100)) es.push_back({x, y, 1});
    return ColoredBipartiteGraph::build(n1, n2, 1, es);
}

// independent maximum matching oracle: plain Kuhn augmenting paths over
// adjacency lists, no layering, no bitsets
inline int kuhn_matching_size(const GraphView& v) {
    int n1 = v.graph().n1(), n2 = v.graph().n2();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n1));
    for (int x = 0; x < n1; ++x)
        if (v.xs().test(x)) adj[static_cast<size_t>(x)] = v.neighbors_of_x(x).to_vector();
    std::vector<int> match_y(static_cast<size_t>(n2), -1);
    std::vector<char> used;
    std::function<bool(int)> try_x = [&](int x) -> bool {
        for (int y : adj[static_cast<size_t>(x)]) {
            if (used[static_cast<size_t>(y)]) continue;
            used[static_cast<size_t>(y)] = 1;
            if (match_y[static_cast<size_t>(y)] == -1 || try_x(match_y[static_cast<size_t>(y)])) {
                match_y[static_cast<size_t>(y)] = x;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int x = 0; x < n1; ++x) {
        if (adj[static_cast<size_t>(x)].empty()) continue;
        used.assign(static_cast<size_t>(n2), 0);
        if (try_x(x)) ++size;
    }
    return size;
}

} // namespace testutil

#endif
