#include "bramsey/embed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bramsey/rng.hpp"

namespace bramsey {

namespace {

// Exact-length path search. Candidates are ordered fewest-options-first
// (dynamic degree among unvisited vertices), which keeps hard-to-place
// vertices from being stranded on near-spanning lengths.
struct PathSearcher {
    const GraphView& view;
    int n1, n2;
    int vx, vy;
    int target_edges;
    std::vector<Bits> adj_x, adj_y;
    Bits visited_x, visited_y;
    Bits dom_x, dom_y; // admissible vertices of the pair
    std::vector<int> path;
    long long nodes = 0, node_cap = 0;
    bool budget_trip = false;
    std::vector<uint32_t> prio_x, prio_y; // restart-dependent tie-break

    PathSearcher(const GraphView& v, int vx_, int vy_, int edges)
        : view(v), n1(v.graph().n1()), n2(v.graph().n2()), vx(vx_), vy(vy_),
          target_edges(edges), visited_x(n1), visited_y(n2), dom_x(v.xs()), dom_y(v.ys()) {
        adj_x.resize(n1, Bits(n2));
        adj_y.resize(n2, Bits(n1));
        dom_x.for_each([&](int x) { adj_x[x] = v.neighbors_of_x(x); });
        dom_y.for_each([&](int y) { adj_y[y] = v.neighbors_of_y(y); });
        prio_x.assign(n1, 0);
        prio_y.assign(n2, 0);
    }

    bool tick() {
        if (++nodes > node_cap) {
            budget_trip = true;
            return false;
        }
        return true;
    }

    // fresh = unvisited; vy is kept out of the interior by pre-visiting it
    bool guards(bool at_x, int rem) {
        int free_y = dom_y.count() - visited_y.count(); // excludes vy
        int free_x = dom_x.count() - visited_x.count();
        int need_x, need_y;
        if (at_x) { // rem odd: interiors (rem-1)/2 of each side
            need_x = (rem - 1) / 2;
            need_y = (rem - 1) / 2;
        } else { // rem even: interiors rem/2 X, rem/2 - 1 Y
            need_x = rem / 2;
            need_y = rem / 2 - 1;
        }
        if (free_x < need_x || free_y < need_y) return false;
        if (rem > 1) {
            // the closing edge needs an unvisited X-neighbor of vy
            Bits fin = adj_y[vy];
            fin.and_not(visited_x);
            if (fin.none()) return false;
        }
        return true;
    }

    bool dfs_x(int x, int used) {
        if (!tick()) return false;
        int rem = target_edges - used;
        if (rem == 1) {
            if (adj_x[x].test(vy)) {
                path.push_back(vy);
                return true;
            }
            return false;
        }
        if (!guards(true, rem)) return false;
        Bits cand = adj_x[x];
        cand.and_not(visited_y);
        std::vector<std::pair<uint64_t, int>> order;
        cand.for_each([&](int y) {
            uint64_t deg = uint64_t(adj_y[y].count() - adj_y[y].count_and(visited_x));
            order.push_back({(deg << 32) | prio_y[y], y});
        });
        std::sort(order.begin(), order.end());
        for (auto [key, y] : order) {
            visited_y.set(y);
            path.push_back(y);
            if (dfs_y(y, used + 1)) return true;
            path.pop_back();
            visited_y.reset(y);
            if (budget_trip) return false;
        }
        return false;
    }

    bool dfs_y(int y, int used) {
        if (!tick()) return false;
        int rem = target_edges - used;
        if (!guards(false, rem)) return false;
        Bits cand = adj_y[y];
        cand.and_not(visited_x);
        if (rem == 2) cand &= adj_y[vy]; // penultimate X must close to vy
        std::vector<std::pair<uint64_t, int>> order;
        cand.for_each([&](int x) {
            uint64_t deg = uint64_t(adj_x[x].count() - adj_x[x].count_and(visited_y));
            order.push_back({(deg << 32) | prio_x[x], x});
        });
        std::sort(order.begin(), order.end());
        for (auto [key, x] : order) {
            visited_x.set(x);
            path.push_back(x);
            if (dfs_x(x, used + 1)) return true;
            path.pop_back();
            visited_x.reset(x);
            if (budget_trip) return false;
        }
        return false;
    }

    bool run_once(long long cap, Rng* shuffle_rng) {
        node_cap = cap;
        nodes = 0;
        budget_trip = false;
        visited_x.clear();
        visited_y.clear();
        if (shuffle_rng) {
            for (auto& p : prio_x) p = uint32_t(shuffle_rng->next_u64());
            for (auto& p : prio_y) p = uint32_t(shuffle_rng->next_u64());
        } else {
            for (int i = 0; i < n1; ++i) prio_x[i] = uint32_t(i);
            for (int i = 0; i < n2; ++i) prio_y[i] = uint32_t(i);
        }
        visited_x.set(vx);
        visited_y.set(vy); // interior never touches vy
        path.assign(1, vx);
        return dfs_x(vx, 0);
    }
};

} // namespace

VerifyResult verify_path(const GraphView& pair, const std::vector<Vertex>& path, Vertex vx,
                         Vertex vy, int edges) {
    if (int(path.size()) != edges + 1) return {false, "path has wrong number of vertices"};
    if (!(path.front() == vx)) return {false, "path does not start at v'"};
    if (!(path.back() == vy)) return {false, "path does not end at v''"};
    for (size_t i = 0; i < path.size(); ++i) {
        Side want = (i % 2 == 0) ? Side::X : Side::Y;
        if (path[i].side != want) return {false, "path does not alternate sides"};
        bool in = path[i].side == Side::X ? pair.xs().test(path[i].index)
                                          : pair.ys().test(path[i].index);
        if (!in) return {false, "path leaves the pair at " + path[i].str()};
    }
    for (size_t i = 0; i < path.size(); ++i)
        for (size_t j = i + 1; j < path.size(); ++j)
            if (path[i] == path[j]) return {false, "repeated vertex " + path[i].str()};
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const Vertex& a = path[i];
        const Vertex& b = path[i + 1];
        int x = a.side == Side::X ? a.index : b.index;
        int y = a.side == Side::X ? b.index : a.index;
        if (!pair.has_edge(x, y))
            return {false, "missing edge (" + a.str() + "," + b.str() + ")"};
    }
    return {true, ""};
}

PathResult connect_in_pair(const GraphView& pair, Vertex vx, Vertex vy, int l, const Rat& beta,
                           const Rat& eps, uint64_t seed, Budget budget) {
    if (vx.side != Side::X || vy.side != Side::Y)
        throw Error("endpoints must lie on opposite sides (v' in X, v'' in Y)");
    if (!pair.xs().test(vx.index) || !pair.ys().test(vy.index))
        throw Error("endpoint outside the pair");
    const int na = pair.xs().count(), nb = pair.ys().count();
    const int m = std::min(na, nb);
    // lemma range: 1 <= l <= m - 5*eps*m/beta, and a simple path needs l+1
    // fresh vertices per side
    Rat cap_r = Rat(m) - Rat(5) * eps * Rat(m) / beta;
    long long cap = std::min<long long>(cap_r.floor(), m - 1);
    if (l < 1 || l > cap)
        throw Error("l = " + std::to_string(l) + " outside [1, " + std::to_string(cap) + "]");

    PathResult res;
    Rat mb = beta * Rat(m) / Rat(5);
    Rat dx(pair.neighbors_of_x(vx.index).count());
    Rat dy(pair.neighbors_of_y(vy.index).count());
    res.hypotheses_held = dx >= mb && dy >= mb && density(pair, pair.xs(), pair.ys()) >= beta / Rat(4) &&
                          eps < beta / Rat(100);

    PathSearcher s(pair, vx.index, vy.index, 2 * l + 1);
    long long total_cap = budget.max_nodes >= 0 ? budget.max_nodes : 1500000;
    const int restarts = 6;
    long long per = std::max<long long>(total_cap / restarts, 1);
    Rng rng(seed ^ 0x9a7ab1eULL);
    bool exhausted_all = true;
    for (int attempt = 0; attempt < restarts; ++attempt) {
        Rng fork = rng.fork(uint64_t(attempt));
        bool found = s.run_once(per, attempt == 0 ? nullptr : &fork);
        res.nodes += s.nodes;
        if (found) {
            for (size_t i = 0; i < s.path.size(); ++i)
                res.path.push_back({i % 2 == 0 ? Side::X : Side::Y, s.path[i]});
            auto check = verify_path(pair, res.path, vx, vy, 2 * l + 1);
            if (!check.ok) throw Error("internal: found path failed verification: " + check.reason);
            res.ok = true;
            return res;
        }
        if (!s.budget_trip) {
            // complete search: the restart order cannot change the outcome
            res.exhausted = true;
            res.fail_reason = "no path of the requested length exists in the pair";
            return res;
        }
        exhausted_all = false;
    }
    res.exhausted = exhausted_all;
    res.fail_reason = "search budget exhausted";
    return res;
}

WalkPlan walk_plan(const ReducedColoredGraph& h, int color,
                   const ConnectedMatchingCertificate& mstar) {
    if (mstar.matching.edges.empty()) throw Error("empty matching has no walk");
    ColoredBipartiteGraph cg = h.to_cluster_graph();
    GraphView cv = GraphView::color(cg, color);

    // all matching endpoints must live in one component of the color class
    auto comps = components(cv);
    int home = -1;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        bool all = true;
        for (auto [x, y] : mstar.matching.edges)
            if (!comps[ci].xs.test(x) || !comps[ci].ys.test(y)) all = false;
        if (all) {
            home = int(ci);
            break;
        }
    }
    if (home < 0) throw Error("matching is not connected in the reduced color class");
    const Component& comp = comps[home];

    auto neighbors = [&](Vertex u) {
        std::vector<Vertex> out;
        if (u.side == Side::X) {
            Bits nb = cv.neighbors_of_x(u.index);
            nb &= comp.ys;
            nb.for_each([&](int y) { out.push_back({Side::Y, y}); });
        } else {
            Bits nb = cv.neighbors_of_y(u.index);
            nb &= comp.xs;
            nb.for_each([&](int x) { out.push_back({Side::X, x}); });
        }
        return out;
    };

    // grow a tree containing all matching edges: start from the matching as a
    // forest and repeatedly attach the nearest foreign tree with a shortest
    // connecting path (its interior touches no tree, so the union stays a
    // forest)
    std::map<Vertex, std::vector<Vertex>> tree;
    std::map<Vertex, int> forest_id;
    auto add_edge = [&](Vertex a, Vertex b) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    };
    int nf = 0;
    for (auto [x, y] : mstar.matching.edges) {
        Vertex a{Side::X, x}, b{Side::Y, y};
        add_edge(a, b);
        forest_id[a] = forest_id[b] = nf++;
    }
    while (true) {
        std::set<int> ids;
        for (auto& [v, id] : forest_id) ids.insert(id);
        if (ids.size() <= 1) break;
        int root_id = *ids.begin();
        std::map<Vertex, Vertex> parent;
        std::vector<Vertex> q;
        for (auto& [v, id] : forest_id)
            if (id == root_id) q.push_back(v);
        std::sort(q.begin(), q.end());
        std::set<Vertex> seen(q.begin(), q.end());
        bool merged = false;
        for (size_t head = 0; head < q.size() && !merged; ++head) {
            Vertex u = q[head];
            for (Vertex w : neighbors(u)) {
                if (seen.count(w)) continue;
                auto it = forest_id.find(w);
                if (it != forest_id.end()) {
                    // reached another tree: lay down the path u ... w
                    int other = it->second;
                    add_edge(u, w);
                    Vertex cur = u;
                    while (!forest_id.count(cur)) {
                        forest_id[cur] = root_id;
                        cur = parent.at(cur);
                    }
                    for (auto& [v, id] : forest_id)
                        if (id == other) id = root_id;
                    merged = true;
                    break;
                }
                seen.insert(w);
                parent[w] = u;
                // interior candidates carry edges back to their parent only
                // once the path is committed
                add_edge(u, w);
                q.push_back(w);
            }
        }
        if (!merged) throw Error("internal: component BFS failed to merge trees");
        // drop the speculative BFS edges that did not end up on the path
        std::map<Vertex, std::vector<Vertex>> kept;
        for (auto& [v, adj] : tree) {
            if (!forest_id.count(v)) continue;
            for (Vertex w : adj)
                if (forest_id.count(w)) kept[v].push_back(w);
        }
        tree = std::move(kept);
    }

    // Euler tour of the doubled tree, children in ascending order
    Vertex root = tree.begin()->first;
    for (auto& [v, adj] : tree) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end(),
                              [](const Vertex& a, const Vertex& b) { return a == b; }),
                  adj.end());
        if (v < root) root = v;
    }
    std::set<std::pair<Vertex, Vertex>> mset;
    for (auto [x, y] : mstar.matching.edges)
        mset.insert({Vertex{Side::X, x}, Vertex{Side::Y, y}});

    WalkPlan plan;
    plan.color = color;
    std::set<std::pair<Vertex, Vertex>> flagged;
    std::function<void(Vertex, Vertex, bool)> tour = [&](Vertex u, Vertex par, bool has_par) {
        for (Vertex w : tree[u]) {
            if (has_par && w == par) continue;
            bool flag = false;
            auto key = u < w ? std::make_pair(u, w) : std::make_pair(w, u);
            if (mset.count(key) && !flagged.count(key)) {
                flagged.insert(key);
                flag = true;
            }
            plan.matched.push_back(flag ? 1 : 0);
            plan.walk.push_back(w);
            tour(w, u, true);
            plan.matched.push_back(0); // return traversal, never a first pass
            plan.walk.push_back(u);
        }
    };
    plan.walk.push_back(root);
    tour(root, root, false);
    if (!(plan.walk.back() == root)) throw Error("internal: euler tour did not close");
    plan.walk.pop_back();
    if (plan.walk.size() != plan.matched.size())
        throw Error("internal: walk/step length mismatch");
    if (plan.t() % 2 != 0) throw Error("internal: walk has odd length");
    if (int(flagged.size()) != mstar.matching.size())
        throw Error("internal: walk does not cover the matching");
    return plan;
}

namespace {

Bits cluster_of(const ClusterPartition& p, Vertex cluster) {
    return cluster.side == Side::X ? p.clusters_x[cluster.index + 1]
                                   : p.clusters_y[cluster.index + 1];
}

} // namespace

StitchResult stitch_long_cycle(const ColoredBipartiteGraph& g, const ClusterPartition& p,
                               const ReducedColoredGraph& h, const WalkPlan& plan, int target,
                               const StitchParams& params) {
    if (target % 2 != 0 || target < 4) throw Error("target length must be even and >= 4");
    const int t = plan.t();
    const int a = plan.matched_count();
    const int m = p.m();
    const int color = plan.color;
    if (t < 2 || p.k() < 1) throw Error("degenerate walk or partition");
    // the walk must live on reduced edges of its color
    for (int s = 0; s < t; ++s) {
        Vertex va = plan.walk[size_t(s)];
        Vertex vb = plan.walk[size_t((s + 1) % t)];
        if (va.side == vb.side || va.index < 0 || va.index >= h.k || vb.index >= h.k)
            throw Error("walk step " + std::to_string(s) + " is not a cluster pair");
        int i = va.side == Side::X ? va.index : vb.index;
        int j = va.side == Side::X ? vb.index : va.index;
        if (h.color_at(i, j) != color)
            throw Error("walk step " + std::to_string(s) +
                        " is not a reduced edge of color " + std::to_string(color));
    }
    GraphView cview = GraphView::color(g, color);

    Rat cap_r = Rat(m) - Rat(5) * params.eps * Rat(m) / params.beta;
    long long lemma_cap = std::min<long long>(cap_r.floor(), m - 1);
    if (lemma_cap < 1) throw Error("clusters too small for any path expansion");
    long long lo = t + 2LL * a, hi = t + 2LL * a * lemma_cap;
    if (target < lo || target > hi)
        throw Error("target " + std::to_string(target) + " infeasible; achievable interval is [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");

    // anchor selection: v_r in cluster(walk[r]) with >= m/5 color-neighbors in
    // both adjacent clusters, consecutive anchors adjacent whenever the step
    // is not expanded, all anchors distinct
    std::vector<std::vector<int>> cands(t);
    for (int r = 0; r < t; ++r) {
        Vertex cl = plan.walk[r];
        Bits prev = cluster_of(p, plan.walk[(r + t - 1) % t]);
        Bits next = cluster_of(p, plan.walk[(r + 1) % t]);
        Bits own = cluster_of(p, cl);
        own.for_each([&](int v) {
            Bits nb = cl.side == Side::X ? cview.neighbors_of_x(v) : cview.neighbors_of_y(v);
            long long dp = nb.count_and(prev), dn = nb.count_and(next);
            if (5 * dp >= m && 5 * dn >= m) cands[r].push_back(v);
        });
        if (cands[r].empty())
            throw Error("anchor selection failed at walk position " + std::to_string(r) +
                        ": no vertex meets the 1/5 degree floor");
    }
    std::vector<int> anchor(t, -1);
    Bits used_x(g.n1()), used_y(g.n2());
    auto edge_ok = [&](int r, int vr, int vnext) {
        if (plan.matched[r]) return true; // expanded steps need no direct edge
        Vertex cl = plan.walk[r];
        int x = cl.side == Side::X ? vr : vnext;
        int y = cl.side == Side::X ? vnext : vr;
        return g.color_at(x, y) == color;
    };
    long long anchor_nodes = 0;
    const long long anchor_cap = 500000;
    std::function<bool(int)> place = [&](int r) -> bool {
        if (++anchor_nodes > anchor_cap) return false;
        if (r == t) return edge_ok(t - 1, anchor[t - 1], anchor[0]);
        Vertex cl = plan.walk[r];
        Bits& used = cl.side == Side::X ? used_x : used_y;
        for (int v : cands[r]) {
            if (used.test(v)) continue;
            if (r > 0 && !edge_ok(r - 1, anchor[r - 1], v)) continue;
            anchor[r] = v;
            used.set(v);
            if (place(r + 1)) return true;
            used.reset(v);
            anchor[r] = -1;
        }
        return false;
    };
    if (!place(0)) throw Error("anchor selection failed: no consistent assignment of walk anchors");

    // per-step caps after anchors are pinned
    std::vector<int> mpos; // walk positions of matched steps
    for (int r = 0; r < t; ++r)
        if (plan.matched[r]) mpos.push_back(r);
    std::vector<long long> caps(mpos.size());
    std::vector<std::pair<Bits, Bits>> pair_domains(mpos.size());
    for (size_t j = 0; j < mpos.size(); ++j) {
        int r = mpos[j];
        Vertex ca = plan.walk[r], cb = plan.walk[(r + 1) % t];
        Bits ax = cluster_of(p, ca.side == Side::X ? ca : cb); // X-side cluster
        Bits by = cluster_of(p, ca.side == Side::X ? cb : ca);
        int va = anchor[r], vb = anchor[(r + 1) % t];
        int xa = ca.side == Side::X ? va : vb;
        int yb = ca.side == Side::X ? vb : va;
        // other anchors must stay off the interior
        Bits block_x = used_x, block_y = used_y;
        block_x.reset(xa);
        block_y.reset(yb);
        ax.and_not(block_x);
        by.and_not(block_y);
        pair_domains[j] = {ax, by};
        caps[j] = std::min({lemma_cap, (long long)ax.count() - 1, (long long)by.count() - 1});
        if (caps[j] < 1)
            throw Error("cluster pair at step " + std::to_string(r) + " too crowded to expand");
    }

    // greedy largest-first split of target = t + sum 2*l_j
    long long rest = (target - t) / 2;
    std::vector<int> lj(mpos.size(), 0);
    long long cap_total = 0;
    for (auto c : caps) cap_total += c;
    if (rest < (long long)mpos.size() || rest > cap_total)
        throw Error("target " + std::to_string(target) + " infeasible after anchoring; interval [" +
                    std::to_string(t + 2 * (long long)mpos.size()) + ", " +
                    std::to_string(t + 2 * cap_total) + "]");
    for (size_t j = 0; j < mpos.size(); ++j) {
        long long later = (long long)mpos.size() - 1 - (long long)j; // each later step needs >= 1
        long long give = std::min(caps[j], rest - later);
        lj[j] = int(give);
        rest -= give;
    }

    // expand every step and assemble the cycle
    std::vector<Vertex> cycle;
    size_t jnext = 0;
    for (int r = 0; r < t; ++r) {
        Vertex cl = plan.walk[r];
        cycle.push_back({cl.side, anchor[r]});
        if (!plan.matched[r]) continue;
        size_t j = jnext++;
        const auto& [ax, by] = pair_domains[j];
        GraphView pview = cview.restricted(ax, by);
        int va = anchor[r], vb = anchor[(r + 1) % t];
        Vertex evx{Side::X, cl.side == Side::X ? va : vb};
        Vertex evy{Side::Y, cl.side == Side::X ? vb : va};
        auto pr = connect_in_pair(pview, evx, evy, lj[j], params.beta, params.eps,
                                  params.seed + 0x1000 * (uint64_t(j) + 1), params.budget);
        if (!pr.ok)
            throw Error("embedding failed at walk step " + std::to_string(r) + " (l=" +
                        std::to_string(lj[j]) + "): " + pr.fail_reason);
        // interior vertices, oriented from anchor[r] towards anchor[r+1]
        std::vector<Vertex> interior(pr.path.begin() + 1, pr.path.end() - 1);
        if (cl.side == Side::Y) std::reverse(interior.begin(), interior.end());
        cycle.insert(cycle.end(), interior.begin(), interior.end());
    }

    // certificates start on side X
    if (cycle.front().side == Side::Y)
        std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());

    StitchResult out;
    out.t = t;
    out.step_lengths = lj;
    out.certificate.color = color;
    out.certificate.vertices = std::move(cycle);
    auto chk = verify_cycle(g, out.certificate);
    if (!chk.ok) throw Error("internal: stitched cycle failed verification: " + chk.reason);
    if (out.certificate.length() != target)
        throw Error("internal: stitched cycle has wrong length");
    return out;
}

PipelineResult find_long_mono_cycle(const ColoredBipartiteGraph& g, const Rat& alpha1,
                                    const Rat& alpha2, const Rat& xi, PipelineOptions opt) {
    if (g.colors() != 2) throw Error("pipeline needs a 2-colored host");
    if (g.n1() != g.n2()) throw Error("pipeline needs equal sides");
    const int N = g.n1();
    PipelineResult res;

    Rat denom = alpha1 + alpha2 + Rat(8) * xi;
    if (!(denom > Rat(0))) throw Error("alpha and xi must be positive");
    if (opt.min_degree_route) {
        Rat floor_frac = (Rat(7, 8) + Rat(9) * xi) * Rat(N);
        if (!(Rat(min_degree(g)) > floor_frac))
            throw Error("minimum degree below the (7/8 + 9*xi)N floor");
    } else if (!g.complete()) {
        throw Error("pipeline needs a complete host (or the min-degree flag)");
    }

    long long n = opt.explicit_n ? *opt.explicit_n : (Rat(N) / denom).floor();
    if (n < 1 || Rat(N) < denom * Rat(n))
        throw Error("no valid n: need N >= (alpha1+alpha2+8*xi)*n");
    res.n = n;
    res.stages.push_back({"parameters", true,
                          "N=" + std::to_string(N) + " n=" + std::to_string(n)});

    if (opt.clusters < 1 || opt.clusters > N) throw Error("cluster count out of range");
    ClusterPartition part = ClusterPartition::uniform(N, opt.clusters);
    res.k = part.k();
    res.m = part.m();
    res.stages.push_back({"partition", true,
                          "k=" + std::to_string(res.k) + " m=" + std::to_string(res.m)});

    // majority rule with the proof's eps; degree-form with d = xi on the
    // min-degree route
    Rat eps, d;
    Rat beta;
    ReducedRule rule;
    if (opt.min_degree_route) {
        eps = xi * xi * xi;
        d = xi;
        beta = Rat(4) * xi;
        rule = ReducedRule::DegreeFormD;
    } else {
        Rat x7 = xi * xi;
        x7 = x7 * x7 * xi * xi * xi; // xi^7
        eps = x7 / Rat(2);
        d = Rat(0);
        beta = Rat(1);
        rule = ReducedRule::MajorityHalfEps;
    }
    ReducedColoredGraph h = reduced_graph(g, part, eps, d, rule);
    int reduced_edges = 0;
    for (int c : h.edge_color)
        if (c) ++reduced_edges;
    res.stages.push_back({"reduced-graph", true,
                          "edges=" + std::to_string(reduced_edges) + "/" +
                              std::to_string(res.k * res.k)});

    // witness-mode honesty scan; flags only
    for (const auto& pr : check_partition_regularity(g, part, eps, opt.seed)) {
        if (pr.status == RegStatus::Regular) ++res.regular_pairs;
        else if (pr.status == RegStatus::Irregular) ++res.irregular_pairs;
        else ++res.unknown_pairs;
    }
    res.stages.push_back({"regularity", true,
                          "regular=" + std::to_string(res.regular_pairs) +
                              " irregular=" + std::to_string(res.irregular_pairs) +
                              " unknown=" + std::to_string(res.unknown_pairs)});

    ColoredBipartiteGraph cg = h.to_cluster_graph();
    auto cms = best_connected_matchings(cg);
    for (auto& cm : cms) res.saturated_per_color.push_back(cm.saturated);
    res.stages.push_back({"connected-matching", true,
                          "saturated=" + std::to_string(cms[0].saturated) + "," +
                              std::to_string(cms[1].saturated)});

    std::vector<int> order{1, 2};
    std::sort(order.begin(), order.end(), [&](int aa, int bb) {
        if (cms[aa - 1].saturated != cms[bb - 1].saturated)
            return cms[aa - 1].saturated > cms[bb - 1].saturated;
        return aa < bb;
    });

    std::string last_fail;
    for (int f : order) {
        const Rat& af = f == 1 ? alpha1 : alpha2;
        int target = int(2 * (af * Rat(n)).floor());
        if (target < 4) {
            last_fail = "target below 4 for color " + std::to_string(f);
            continue;
        }
        if (cms[f - 1].matching.edges.empty()) {
            last_fail = "color " + std::to_string(f) + " has no connected matching";
            continue;
        }
        try {
            WalkPlan plan = walk_plan(h, f, cms[f - 1]);
            StitchParams sp;
            sp.beta = beta;
            sp.eps = eps;
            sp.seed = opt.seed;
            sp.budget = opt.budget;
            StitchResult st = stitch_long_cycle(g, part, h, plan, target, sp);
            res.success = true;
            res.color = f;
            res.target = target;
            res.certificate = std::move(st.certificate);
            res.step_lengths = std::move(st.step_lengths);
            res.walk_t = st.t;
            // capacity audit: l_max * k >= (1 - 5 eps)(1 - eps) N, the
            // per-step form of "2 a l_max + t >= 2a(1-5eps)(1-eps)N/k + t".
            // eps has a huge denominator, so the cross products need 128 bits.
            {
                Rat cap = Rat(res.m) - Rat(5) * eps * Rat(res.m) / beta;
                long long lmax = std::min<long long>(cap.floor(), res.m - 1);
                __int128 q = eps.den, pnum = eps.num;
                __int128 lhs = (__int128)lmax * res.k * q * q;
                __int128 rhs = (q - 5 * pnum) * (q - pnum) * (__int128)N;
                res.length_chain_holds = lhs >= rhs;
                res.stages.push_back({"length-accounting", res.length_chain_holds,
                                      "a=" + std::to_string(plan.matched_count()) +
                                          " l_max=" + std::to_string(lmax) +
                                          (res.length_chain_holds ? " meets" : " misses") +
                                          " the (1-5eps)(1-eps)N/k bound"});
            }
            res.stages.push_back({"stitch", true,
                                  "color=" + std::to_string(f) + " length=" +
                                      std::to_string(target)});
            return res;
        } catch (const Error& e) {
            last_fail = "color " + std::to_string(f) + ": " + e.what();
            res.stages.push_back({"stitch", false, last_fail});
        }
    }
    res.success = false;
    res.failure_stage = "stitch";
    res.stages.push_back({"result", false, last_fail});
    return res;
}

} // namespace bramsey
