#include "bramsey/cycle.hpp"

#include <chrono>

namespace bramsey {

namespace {

struct CycleSearcher {
    const GraphView& view;
    int target;
    Budget budget;

    int n1, n2;
    std::vector<Bits> adj_x, adj_y; // admissible neighborhoods
    Bits visited_x, visited_y;
    Bits active_x, active_y; // admissible vertices with nonzero degree
    std::vector<int> path; // alternating x,y indices, starts at anchor (X)
    int anchor = 0;
    long long nodes = 0;
    bool out_of_budget = false;
    std::chrono::steady_clock::time_point t0;

    explicit CycleSearcher(const GraphView& v, int tgt, Budget b)
        : view(v), target(tgt), budget(b), n1(v.graph().n1()), n2(v.graph().n2()),
          visited_x(n1), visited_y(n2), active_x(n1), active_y(n2) {
        adj_x.resize(n1, Bits(n2));
        adj_y.resize(n2, Bits(n1));
        v.xs().for_each([&](int x) {
            adj_x[x] = v.neighbors_of_x(x);
            if (adj_x[x].any()) active_x.set(x);
        });
        v.ys().for_each([&](int y) {
            adj_y[y] = v.neighbors_of_y(y);
            if (adj_y[y].any()) active_y.set(y);
        });
        t0 = std::chrono::steady_clock::now();
    }

    bool tick() {
        ++nodes;
        if (budget.max_nodes >= 0 && nodes > budget.max_nodes) {
            out_of_budget = true;
            return false;
        }
        if (budget.max_ms >= 0 && (nodes & 0xfff) == 0) {
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            if (ms > budget.max_ms) {
                out_of_budget = true;
                return false;
            }
        }
        return true;
    }

    // Unvisited vertices reachable from `from` plus whether the anchor can be
    // re-entered. Sound prune: a cycle completion needs enough fresh vertices
    // on each side and a way back to the anchor.
    bool reach_prune(Vertex from, int need_x, int need_y) {
        Bits rx(n1), ry(n2);
        bool anchor_hit = false;
        std::vector<Vertex> stack{from};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            if (u.side == Side::X) {
                Bits nb = adj_x[u.index];
                nb.and_not(visited_y);
                nb.and_not(ry);
                nb.for_each([&](int y) {
                    ry.set(y);
                    stack.push_back({Side::Y, y});
                });
            } else {
                if (adj_y[u.index].test(anchor)) anchor_hit = true;
                Bits nb = adj_y[u.index];
                nb.and_not(visited_x);
                nb.and_not(rx);
                nb.for_each([&](int x) {
                    if (x > anchor) {
                        rx.set(x);
                        stack.push_back({Side::X, x});
                    }
                });
            }
        }
        if (!anchor_hit) return false;
        return rx.count() >= need_x && ry.count() >= need_y;
    }

    // current position is path.back(); edges used = path.size()-1 if at Y...
    // we track edges explicitly instead.
    bool dfs_from_y(int y, int edges_used) {
        if (!tick()) return false;
        int rem = target - edges_used; // odd, >= 1
        if (rem == 1) return adj_y[y].test(anchor);
        // intermediates: rem-1 vertices alternating X first
        int need_x = (rem - 1 + 1) / 2; // = rem/2 rounded up for X-first run
        int need_y = (rem - 1) / 2;
        if (rem >= 11 && !reach_prune({Side::Y, y}, need_x, need_y)) return false;
        Bits cand = adj_y[y];
        cand.and_not(visited_x);
        for (int x = cand.next(anchor + 1); x != -1; x = cand.next(x + 1)) {
            visited_x.set(x);
            path.push_back(x);
            if (dfs_from_x(x, edges_used + 1)) return true;
            path.pop_back();
            visited_x.reset(x);
            if (out_of_budget) return false;
        }
        return false;
    }

    bool dfs_from_x(int x, int edges_used) {
        if (!tick()) return false;
        int rem = target - edges_used; // even, >= 2
        int unvis_y = active_y.count() - visited_y.count();
        int unvis_x = 0; // computed lazily only when close to the bound
        int need_y = rem / 2;
        int need_x = rem / 2 - 1;
        if (unvis_y < need_y) return false;
        if (need_x > 0) {
            Bits ux = active_x;
            ux.and_not(visited_x);
            unvis_x = 0;
            ux.for_each([&](int i) {
                if (i > anchor) ++unvis_x;
            });
            if (unvis_x < need_x) return false;
        }
        Bits cand = adj_x[x];
        cand.and_not(visited_y);
        for (int y = cand.first(); y != -1; y = cand.next(y + 1)) {
            visited_y.set(y);
            path.push_back(y);
            if (dfs_from_y(y, edges_used + 1)) return true;
            path.pop_back();
            visited_y.reset(y);
            if (out_of_budget) return false;
        }
        return false;
    }

    CycleSearchResult run() {
        CycleSearchResult res;
        for (int a = active_x.first(); a != -1; a = active_x.next(a + 1)) {
            anchor = a; // every X index on the cycle will be >= a
            visited_x.clear();
            visited_y.clear();
            visited_x.set(a);
            path.assign(1, a);
            if (dfs_from_x(a, 0)) {
                res.outcome = SearchOutcome::Found;
                res.certificate.color = view.single_color();
                for (size_t i = 0; i < path.size(); ++i)
                    res.certificate.vertices.push_back(
                        {i % 2 == 0 ? Side::X : Side::Y, path[i]});
                res.nodes = nodes;
                return res;
            }
            if (out_of_budget) break;
        }
        res.outcome = out_of_budget ? SearchOutcome::Unknown : SearchOutcome::Absent;
        res.nodes = nodes;
        return res;
    }
};

} // namespace

CycleSearchResult find_cycle_of_length(const GraphView& v, int target, Budget budget) {
    if (v.single_color() == 0)
        throw Error("cycle search needs a single-color view");
    if (target < 4 || target % 2 != 0)
        throw Error("target length must be even and >= 4, got " + std::to_string(target));
    int mn = std::min(v.xs().count(), v.ys().count());
    if (target > 2 * mn)
        throw Error("target " + std::to_string(target) + " exceeds 2*min side = " +
                    std::to_string(2 * mn));
    CycleSearcher s(v, target, budget);
    return s.run();
}

VerifyResult verify_cycle(const ColoredBipartiteGraph& g, const CycleCertificate& cert) {
    const auto& vs = cert.vertices;
    if (vs.size() < 4 || vs.size() % 2 != 0)
        return {false, "length must be even and >= 4"};
    if (cert.color < 1 || cert.color > g.colors())
        return {false, "color out of range"};
    for (size_t i = 0; i < vs.size(); ++i) {
        Side want = (i % 2 == 0) ? Side::X : Side::Y;
        if (vs[i].side != want) return {false, "vertices must alternate x,y starting at x"};
        int cap = vs[i].side == Side::X ? g.n1() : g.n2();
        if (vs[i].index < 0 || vs[i].index >= cap) return {false, "vertex index out of range"};
    }
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) return {false, "repeated vertex " + vs[i].str()};
    for (size_t i = 0; i < vs.size(); ++i) {
        const Vertex& a = vs[i];
        const Vertex& b = vs[(i + 1) % vs.size()];
        int x = a.side == Side::X ? a.index : b.index;
        int y = a.side == Side::X ? b.index : a.index;
        if (g.color_at(x, y) != cert.color)
            return {false, "pair (" + a.str() + "," + b.str() + ") is not an edge of color " +
                               std::to_string(cert.color)};
    }
    return {true, ""};
}

int circumference(const GraphView& v) {
    int cx = v.xs().count(), cy = v.ys().count();
    if (cx > 32 || cy > 32)
        throw Error("circumference is exact only up to 32 vertices per side; "
                    "probe with find_cycle_of_length instead");
    int mn = std::min(cx, cy);
    for (int len = 2 * mn; len >= 4; len -= 2) {
        auto r = find_cycle_of_length(v, len);
        if (r.outcome == SearchOutcome::Found) return len;
    }
    return 0;
}

} // namespace bramsey
