#include "bramsey/regularity.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bramsey/rng.hpp"

namespace bramsey {

void ClusterPartition::validate(const ColoredBipartiteGraph& g) const {
    if (clusters_x.size() != clusters_y.size())
        throw Error("cluster counts differ between sides");
    if (clusters_x.size() < 2) throw Error("partition needs at least one cluster");
    auto check_side = [&](const std::vector<Bits>& cl, int n, const char* side) {
        Bits seen(n);
        long long total = 0;
        for (const auto& c : cl) {
            if (c.size() != n) throw Error(std::string("cluster bitset size mismatch on ") + side);
            if (c.intersects(seen)) throw Error(std::string("overlapping clusters on ") + side);
            seen |= c;
            total += c.count();
        }
        if (total != n) throw Error(std::string("clusters do not cover side ") + side);
    };
    check_side(clusters_x, g.n1(), "X");
    check_side(clusters_y, g.n2(), "Y");
    int m0 = clusters_x[1].count();
    if (m0 < 1) throw Error("cluster size must be >= 1");
    for (size_t i = 1; i < clusters_x.size(); ++i)
        if (clusters_x[i].count() != m0 || clusters_y[i].count() != m0)
            throw Error("clusters must all have the same size");
    if (clusters_x[0].count() != clusters_y[0].count())
        throw Error("exceptional sets must have equal sizes");
}

std::string ClusterPartition::to_text() const {
    std::string out = "clusters " + std::to_string(k()) + " " + std::to_string(m()) + "\n";
    auto emit = [&](const char* tag, const std::vector<Bits>& cl) {
        for (size_t i = 0; i < cl.size(); ++i) {
            out += tag + std::to_string(i);
            cl[i].for_each([&](int v) { out += " " + std::to_string(v); });
            out += "\n";
        }
    };
    emit("X", clusters_x);
    emit("Y", clusters_y);
    return out;
}

ClusterPartition ClusterPartition::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int k, m;
    if (!(in >> magic >> k >> m) || magic != "clusters")
        throw Error("bad partition header (want 'clusters <k> <m>')");
    if (k < 1) throw Error("bad cluster count");
    ClusterPartition p;
    std::vector<std::vector<int>> sets_x(k + 1), sets_y(k + 1);
    std::string tok;
    std::vector<int>* current = nullptr;
    int max_x = -1, max_y = -1;
    std::vector<std::vector<int>>* side = nullptr;
    while (in >> tok) {
        if (tok[0] == 'X' || tok[0] == 'Y') {
            int idx = std::stoi(tok.substr(1));
            if (idx < 0 || idx > k) throw Error("cluster label " + tok + " out of range");
            side = tok[0] == 'X' ? &sets_x : &sets_y;
            current = &(*side)[idx];
        } else {
            if (!current) throw Error("vertex index before any cluster label");
            int v = std::stoi(tok);
            if (v < 0) throw Error("negative vertex index");
            current->push_back(v);
            (side == &sets_x ? max_x : max_y) = std::max(side == &sets_x ? max_x : max_y, v);
        }
    }
    int n1 = max_x + 1, n2 = max_y + 1;
    for (auto& s : sets_x)
        for (int v : s) n1 = std::max(n1, v + 1);
    for (auto& s : sets_y)
        for (int v : s) n2 = std::max(n2, v + 1);
    for (int i = 0; i <= k; ++i) {
        p.clusters_x.push_back(Bits::of(n1, sets_x[i]));
        p.clusters_y.push_back(Bits::of(n2, sets_y[i]));
    }
    return p;
}

ClusterPartition ClusterPartition::uniform(int n, int k) {
    if (k < 1 || k > n) throw Error("cluster count must be in [1, n]");
    int m = n / k;
    ClusterPartition p;
    p.clusters_x.resize(k + 1, Bits(n));
    p.clusters_y.resize(k + 1, Bits(n));
    for (int i = 0; i < n; ++i) {
        int c = i < k * m ? i / m + 1 : 0;
        p.clusters_x[c].set(i);
        p.clusters_y[c].set(i);
    }
    return p;
}

ClusterPartition ClusterPartition::random(int n, int k, uint64_t seed) {
    if (k < 1 || k > n) throw Error("cluster count must be in [1, n]");
    int m = n / k;
    Rng rng(seed);
    std::vector<int> perm_x(n), perm_y(n);
    for (int i = 0; i < n; ++i) perm_x[i] = perm_y[i] = i;
    rng.shuffle(perm_x);
    rng.shuffle(perm_y);
    ClusterPartition p;
    p.clusters_x.resize(k + 1, Bits(n));
    p.clusters_y.resize(k + 1, Bits(n));
    for (int i = 0; i < n; ++i) {
        int c = i < k * m ? i / m + 1 : 0;
        p.clusters_x[c].set(perm_x[i]);
        p.clusters_y[c].set(perm_y[i]);
    }
    return p;
}

Rat density(const GraphView& v, const Bits& a, const Bits& b) {
    long long na = (a & v.xs()).count(), nb = (b & v.ys()).count();
    if (na == 0 || nb == 0) throw Error("density needs nonempty vertex sets");
    long long e = v.count_edges_between(a, b);
    return Rat(e, na * nb);
}

RegularityResult is_eps_regular(const GraphView& v, const Bits& a, const Bits& b, const Rat& eps,
                                bool exact, uint64_t seed) {
    Bits aa = a & v.xs();
    Bits bb = b & v.ys();
    int na = aa.count(), nb = bb.count();
    if (na == 0 || nb == 0) throw Error("regularity check needs nonempty sides");

    RegularityResult res;
    res.base_density = density(v, aa, bb);
    const Rat d0 = res.base_density;

    auto finish_irregular = [&](Bits wa, Bits wb) {
        Rat dw = density(v, wa, wb);
        // a witness is only reported if it genuinely violates the bound
        if (!((dw - d0).abs() > eps)) return false;
        res.status = RegStatus::Irregular;
        res.witness_a = std::move(wa);
        res.witness_b = std::move(wb);
        res.witness_density = dw;
        return true;
    };

    if (exact) {
        if (na > 14 || nb > 14)
            throw Error("exact regularity check is limited to 14 vertices per side");
        std::vector<int> ai = aa.to_vector(), bi = bb.to_vector();
        // neighborhood masks of B-vertices over positions of A
        std::vector<uint32_t> bmask(nb, 0);
        for (int q = 0; q < nb; ++q) {
            Bits nbr = v.neighbors_of_y(bi[q]);
            for (int p = 0; p < na; ++p)
                if (nbr.test(ai[p])) bmask[q] |= (1u << p);
        }
        Rat max_dev(0);
        std::vector<std::pair<int, int>> wpairs(nb); // (count, position)
        for (uint32_t am = 1; am < (1u << na); ++am) {
            int asz = std::popcount(am);
            if (!(Rat(asz) > eps * Rat(na))) continue;
            for (int q = 0; q < nb; ++q)
                wpairs[q] = {std::popcount(bmask[q] & am), q};
            std::sort(wpairs.begin(), wpairs.end());
            // prefix sums of sorted counts give the extreme densities per size
            std::vector<long long> pre(nb + 1, 0);
            for (int q = 0; q < nb; ++q) pre[q + 1] = pre[q] + wpairs[q].first;
            for (int s = 1; s <= nb; ++s) {
                if (!(Rat(s) > eps * Rat(nb))) continue;
                long long lo = pre[s];                 // s smallest
                long long hi = pre[nb] - pre[nb - s];  // s largest
                Rat dlo(lo, (long long)asz * s), dhi(hi, (long long)asz * s);
                Rat dev = std::max((d0 - dlo).abs(), (dhi - d0).abs());
                if (dev > max_dev) max_dev = dev;
                if (dev > eps) {
                    bool use_lo = (d0 - dlo).abs() > eps;
                    Bits wa(v.graph().n1()), wb(v.graph().n2());
                    for (int p = 0; p < na; ++p)
                        if ((am >> p) & 1) wa.set(ai[p]);
                    if (use_lo)
                        for (int q = 0; q < s; ++q) wb.set(bi[wpairs[q].second]);
                    else
                        for (int q = nb - s; q < nb; ++q) wb.set(bi[wpairs[q].second]);
                    if (finish_irregular(std::move(wa), std::move(wb))) return res;
                    throw Error("internal: extreme subset did not re-verify");
                }
            }
        }
        res.status = RegStatus::Regular;
        res.max_deviation = max_dev;
        return res;
    }

    // witness mode: degree outliers first
    {
        Bits low(v.graph().n1()), high(v.graph().n1());
        aa.for_each([&](int x) {
            long long cnt = v.neighbors_of_x(x).count_and(bb);
            Rat dv(cnt, nb);
            if (dv < d0 - eps) low.set(x);
            if (dv > d0 + eps) high.set(x);
        });
        if (Rat(low.count()) > eps * Rat(na) && finish_irregular(low, bb)) return res;
        if (Rat(high.count()) > eps * Rat(na) && finish_irregular(high, bb)) return res;
        Bits lowb(v.graph().n2()), highb(v.graph().n2());
        bb.for_each([&](int y) {
            long long cnt = v.neighbors_of_y(y).count_and(aa);
            Rat dv(cnt, na);
            if (dv < d0 - eps) lowb.set(y);
            if (dv > d0 + eps) highb.set(y);
        });
        if (Rat(lowb.count()) > eps * Rat(nb) && finish_irregular(aa, lowb)) return res;
        if (Rat(highb.count()) > eps * Rat(nb) && finish_irregular(aa, highb)) return res;
    }
    // seeded random-subset probes
    {
        Rng rng(seed ^ 0x5eedULL);
        std::vector<int> ai = aa.to_vector(), bi = bb.to_vector();
        auto pick = [&](const std::vector<int>& pool, int want, int n_side) {
            std::vector<int> idx = pool;
            rng.shuffle(idx);
            idx.resize(want);
            return Bits::of(n_side, idx);
        };
        long long amin = (eps * Rat(na)).floor() + 1;
        long long bmin = (eps * Rat(nb)).floor() + 1;
        std::vector<int> asizes{int(amin), na / 4, na / 2}, bsizes{int(bmin), nb / 4, nb / 2};
        for (int trial = 0; trial < 24; ++trial) {
            int sa = asizes[size_t(trial) % asizes.size()];
            int sb = bsizes[size_t(trial / 3) % bsizes.size()];
            if (sa < amin) sa = int(amin);
            if (sb < bmin) sb = int(bmin);
            if (sa > na || sb > nb) continue;
            Bits wa = pick(ai, sa, v.graph().n1());
            Bits wb = pick(bi, sb, v.graph().n2());
            if (finish_irregular(std::move(wa), std::move(wb))) return res;
        }
    }
    res.status = RegStatus::Unknown;
    return res;
}

Bits typical_vertices(const GraphView& v, const Bits& a, const Bits& b_prime, const Rat& eps,
                      const Rat& d) {
    Bits aa = a & v.xs();
    Bits bb = b_prime & v.ys();
    long long nb = bb.count();
    Bits out(v.graph().n1());
    Rat floor_frac = (d - eps) * Rat(nb);
    aa.for_each([&](int x) {
        long long cnt = v.neighbors_of_x(x).count_and(bb);
        if (Rat(cnt) > floor_frac) out.set(x);
    });
    return out;
}

std::vector<int> ReducedColoredGraph::recheck_colors() const {
    std::vector<int> out(size_t(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const auto& ds = densities_at(i, j);
            int c = 0;
            if (rule == ReducedRule::DegreeFormD) {
                if (ds[1] >= d) c = 2;
                else if (ds[0] >= d) c = 1;
            } else {
                Rat thr = Rat(1, 2) - eps;
                if (ds[0] >= thr) c = 1;
                else if (ds[1] >= thr) c = 2;
            }
            out[size_t(i) * k + j] = c;
        }
    return out;
}

ColoredBipartiteGraph ReducedColoredGraph::to_cluster_graph() const {
    std::vector<EdgeColor> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (color_at(i, j) != 0) edges.push_back({i, j, color_at(i, j)});
    return ColoredBipartiteGraph::build(k, k, 2, edges);
}

ReducedColoredGraph reduced_graph(const ColoredBipartiteGraph& g, const ClusterPartition& p,
                                  const Rat& eps, const Rat& d, ReducedRule rule) {
    if (g.colors() != 2) throw Error("reduced graph construction needs a 2-colored host");
    p.validate(g);
    ReducedColoredGraph h;
    h.k = p.k();
    h.rule = rule;
    h.eps = eps;
    h.d = d;
    h.edge_color.assign(size_t(h.k) * h.k, 0);
    h.dens.assign(size_t(h.k) * h.k, {Rat(0), Rat(0)});
    GraphView v1 = GraphView::color(g, 1), v2 = GraphView::color(g, 2);
    for (int i = 0; i < h.k; ++i)
        for (int j = 0; j < h.k; ++j) {
            const Bits& xi = p.clusters_x[i + 1];
            const Bits& yj = p.clusters_y[j + 1];
            Rat d1 = density(v1, xi, yj);
            Rat d2 = density(v2, xi, yj);
            h.dens[size_t(i) * h.k + j] = {d1, d2};
        }
    h.edge_color = h.recheck_colors();
    return h;
}

std::vector<PairRegularity> check_partition_regularity(const ColoredBipartiteGraph& g,
                                                       const ClusterPartition& p, const Rat& eps,
                                                       uint64_t seed) {
    p.validate(g);
    std::vector<PairRegularity> out;
    bool exact = p.m() <= 14;
    for (int c = 1; c <= g.colors(); ++c) {
        GraphView v = GraphView::color(g, c);
        for (int i = 1; i <= p.k(); ++i)
            for (int j = 1; j <= p.k(); ++j) {
                auto r = is_eps_regular(v, p.clusters_x[i], p.clusters_y[j], eps, exact,
                                        seed + uint64_t(c) * 1000003 + uint64_t(i) * 1009 + j);
                out.push_back({i, j, c, r.status, r.base_density});
            }
    }
    return out;
}

} // namespace bramsey
