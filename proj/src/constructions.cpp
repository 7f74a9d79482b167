#include "bramsey/constructions.hpp"

#include "bramsey/rng.hpp"

namespace bramsey {

ColoredBipartiteGraph lower_bound_coloring(const std::vector<int>& lengths) {
    const int r = int(lengths.size());
    if (r < 1) throw Error("need at least one length");
    long long N = 0;
    for (int i = 0; i < r; ++i) {
        if (lengths[i] < 2)
            throw Error("length n_" + std::to_string(i + 1) + " = " +
                        std::to_string(lengths[i]) + " below 2");
        N += lengths[i];
    }
    N -= r;
    if (N < 1) throw Error("empty construction: sum(n_i) - r < 1");
    if (N > ColoredBipartiteGraph::kMaxSide) throw Error("construction above desk-scale cap");
    if (r > ColoredBipartiteGraph::kMaxColors) throw Error("too many colors");

    // column t (1-based) belongs to color k iff
    //   sum_{i<k} n_i - k + 2 <= t <= sum_{i<=k} n_i - k
    std::vector<int> column_color(size_t(N) + 1, 0);
    long long prefix = 0;
    for (int k = 1; k <= r; ++k) {
        long long lo = prefix - k + 2;
        prefix += lengths[k - 1];
        long long hi = prefix - k;
        for (long long t = lo; t <= hi; ++t) column_color[size_t(t)] = k;
    }

    std::vector<EdgeColor> edges;
    edges.reserve(size_t(N) * size_t(N));
    for (int s = 0; s < N; ++s)
        for (int t = 1; t <= N; ++t)
            edges.push_back({s, t - 1, column_color[size_t(t)]});
    return ColoredBipartiteGraph::build(int(N), int(N), r, edges);
}

ColoredBipartiteGraph h_tilde(int n) {
    if (n < 1) throw Error("h_tilde needs n >= 1");
    const int N = 4 * n;
    if (N > ColoredBipartiteGraph::kMaxSide) throw Error("construction above desk-scale cap");
    const int u = 2 * n; // first vertex of U_3
    const int v = 0;     // first vertex of V_1

    auto block = [n](int i) { // 1-based block id -> [lo, hi)
        return std::pair<int, int>{(i - 1) * n, i * n};
    };
    std::vector<EdgeColor> edges;
    auto join = [&](int ui, int vi, int color) {
        auto [ulo, uhi] = block(ui);
        auto [vlo, vhi] = block(vi);
        for (int x = ulo; x < uhi; ++x)
            for (int y = vlo; y < vhi; ++y) edges.push_back({x, y, color});
    };

    join(1, 1, kBlue);
    join(1, 2, kBlue);
    join(1, 4, kRed);
    join(2, 1, kRed);
    join(2, 3, kRed);
    join(2, 2, kBlue);
    join(3, 2, kRed);
    join(3, 3, kBlue);
    // U_3 to V_4: blue except the exceptional vertex u, which is red
    {
        auto [vlo, vhi] = block(4);
        for (int x = 2 * n; x < 3 * n; ++x)
            for (int y = vlo; y < vhi; ++y) edges.push_back({x, y, x == u ? kRed : kBlue});
    }
    join(4, 3, kRed);
    // U_4 to V_1: red except the exceptional vertex v, which gets blue
    {
        auto [vlo, vhi] = block(1);
        for (int x = 3 * n; x < 4 * n; ++x)
            for (int y = vlo; y < vhi; ++y) edges.push_back({x, y, y == v ? kBlue : kRed});
    }
    join(4, 4, kBlue);

    return ColoredBipartiteGraph::build(N, N, 2, edges);
}

ColoredBipartiteGraph random_complete_coloring(int n, int r, uint64_t seed) {
    if (n < 1 || n > ColoredBipartiteGraph::kMaxSide) throw Error("bad side size");
    if (r < 1 || r > ColoredBipartiteGraph::kMaxColors) throw Error("bad color count");
    Rng rng(seed);
    std::vector<EdgeColor> edges;
    edges.reserve(size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            edges.push_back({x, y, 1 + int(rng.next_below(uint64_t(r)))});
    return ColoredBipartiteGraph::build(n, n, r, edges);
}

} // namespace bramsey
