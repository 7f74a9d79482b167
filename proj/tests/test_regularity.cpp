#include <doctest.h>

#include "bramsey/constructions.hpp"
#include "bramsey/regularity.hpp"
#include "test_helpers.hpp"

using namespace bramsey;
using testutil::complete;
using testutil::random_graph;

namespace {

ColoredBipartiteGraph diagonal_blocks() {
    // A = A1+A2, B = B1+B2, each of size 5; edges A1xB1 and A2xB2
    std::vector<EdgeColor> es;
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) es.push_back({x, y, 1});
    for (int x = 5; x < 10; ++x)
        for (int y = 5; y < 10; ++y) es.push_back({x, y, 1});
    return ColoredBipartiteGraph::build(10, 10, 1, es);
}

Bits all_bits(int n) {
    Bits b(n);
    b.set_all();
    return b;
}

// unpruned reference: scan every admissible subset pair
bool naive_is_regular(const GraphView& v, const Bits& a, const Bits& b, const Rat& eps) {
    auto ai = a.to_vector();
    auto bi = b.to_vector();
    int na = int(ai.size()), nb = int(bi.size());
    Rat d0 = density(v, a, b);
    for (uint32_t am = 1; am < (1u << na); ++am) {
        int asz = std::popcount(am);
        if (!(Rat(asz) > eps * Rat(na))) continue;
        for (uint32_t bm = 1; bm < (1u << nb); ++bm) {
            int bsz = std::popcount(bm);
            if (!(Rat(bsz) > eps * Rat(nb))) continue;
            long long e = 0;
            for (int p = 0; p < na; ++p)
                if ((am >> p) & 1)
                    for (int q = 0; q < nb; ++q)
                        if ((bm >> q) & 1 && v.has_edge(ai[size_t(p)], bi[size_t(q)])) ++e;
            Rat d(e, (long long)asz * bsz);
            if ((d - d0).abs() > eps) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("rationals: exact parsing, comparison, overflow guard") {
    CHECK(Rat::parse("0.05") == Rat(1, 20));
    CHECK(Rat::parse("1/3") == Rat(1, 3));
    CHECK(Rat::parse("-1.25") == Rat(-5, 4));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK((Rat(1, 3) - Rat(1, 2)).abs() == Rat(1, 6));
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK_THROWS(Rat(1, 0));
    // products that cannot reduce back into 64 bits fail loudly
    Rat tiny(1, 3037000499LL);
    CHECK_THROWS_AS(tiny * tiny * tiny, std::overflow_error);
}

TEST_CASE("density: exact values") {
    auto g = complete(3, 4);
    GraphView v = GraphView::color(g, 1);
    CHECK(density(v, all_bits(3), all_bits(4)) == Rat(1));

    auto e = ColoredBipartiteGraph::build(3, 3, 1, {});
    CHECK(density(GraphView::color(e, 1), all_bits(3), all_bits(3)) == Rat(0));

    auto g2 = ColoredBipartiteGraph::build(2, 2, 1, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}});
    CHECK(density(GraphView::color(g2, 1), all_bits(2), all_bits(2)) == Rat(3, 4));

    CHECK_THROWS_AS(density(v, Bits(3), all_bits(4)), Error);
}

TEST_CASE("exact regularity: complete and empty pairs are regular") {
    auto g = complete(6, 6);
    auto r = is_eps_regular(GraphView::color(g, 1), all_bits(6), all_bits(6), Rat(1, 100), true);
    CHECK(r.status == RegStatus::Regular);
    CHECK(*r.max_deviation == Rat(0));

    auto e = ColoredBipartiteGraph::build(5, 5, 1, {});
    auto re = is_eps_regular(GraphView::color(e, 1), all_bits(5), all_bits(5), Rat(1, 100), true);
    CHECK(re.status == RegStatus::Regular);
}

TEST_CASE("exact regularity: diagonal blocks are irregular with a verified witness") {
    auto g = diagonal_blocks();
    GraphView v = GraphView::color(g, 1);
    auto r = is_eps_regular(v, all_bits(10), all_bits(10), Rat(1, 4), true);
    REQUIRE(r.status == RegStatus::Irregular);
    Rat dw = density(v, r.witness_a, r.witness_b);
    CHECK(dw == r.witness_density);
    CHECK((dw - r.base_density).abs() > Rat(1, 4));
    // witness sets clear the size floors
    CHECK(Rat(r.witness_a.count()) > Rat(1, 4) * Rat(10));
    CHECK(Rat(r.witness_b.count()) > Rat(1, 4) * Rat(10));
}

TEST_CASE("exact regularity matches the unpruned reference") {
    for (uint64_t seed = 0; seed < 36; ++seed) {
        int n = 4 + int(seed % 3);
        auto g = random_graph(n, n, 20 + (seed * 9) % 70, seed * 313 + 11);
        GraphView v = GraphView::color(g, 1);
        for (Rat eps : {Rat(1, 10), Rat(1, 4), Rat(1, 2)}) {
            auto r = is_eps_regular(v, all_bits(n), all_bits(n), eps, true);
            bool naive = naive_is_regular(v, all_bits(n), all_bits(n), eps);
            CHECK((r.status == RegStatus::Regular) == naive);
            if (r.status == RegStatus::Irregular)
                CHECK((density(v, r.witness_a, r.witness_b) - r.base_density).abs() > eps);
        }
    }
}

TEST_CASE("exact regularity rejects oversized sides") {
    auto g = complete(15, 15);
    CHECK_THROWS_AS(
        is_eps_regular(GraphView::color(g, 1), all_bits(15), all_bits(15), Rat(1, 4), true),
        Error);
}

TEST_CASE("witness mode never claims regular and verifies its witnesses") {
    auto g = diagonal_blocks();
    GraphView v = GraphView::color(g, 1);
    auto r = is_eps_regular(v, all_bits(10), all_bits(10), Rat(1, 4), false);
    REQUIRE(r.status == RegStatus::Irregular);
    CHECK((density(v, r.witness_a, r.witness_b) - r.base_density).abs() > Rat(1, 4));

    auto k = complete(10, 10);
    auto rk =
        is_eps_regular(GraphView::color(k, 1), all_bits(10), all_bits(10), Rat(1, 4), false);
    CHECK(rk.status == RegStatus::Unknown); // never a false Irregular

    for (uint64_t seed = 0; seed < 30; ++seed) {
        auto rg = random_graph(20, 20, 50, seed * 7 + 1);
        GraphView rv = GraphView::color(rg, 1);
        auto rr = is_eps_regular(rv, all_bits(20), all_bits(20), Rat(1, 20), false, seed);
        if (rr.status == RegStatus::Irregular)
            CHECK((density(rv, rr.witness_a, rr.witness_b) - rr.base_density).abs() > Rat(1, 20));
    }
}

TEST_CASE("typical vertices") {
    auto g = complete(6, 6);
    GraphView v = GraphView::color(g, 1);
    CHECK(typical_vertices(v, all_bits(6), all_bits(6), Rat(1, 10), Rat(1)).count() == 6);

    auto e = ColoredBipartiteGraph::build(5, 5, 1, {});
    CHECK(typical_vertices(GraphView::color(e, 1), all_bits(5), all_bits(5), Rat(1, 10),
                           Rat(1, 2))
              .count() == 0);

    auto d = diagonal_blocks();
    Bits b1(10);
    for (int y = 0; y < 5; ++y) b1.set(y);
    Bits tv = typical_vertices(GraphView::color(d, 1), all_bits(10), b1, Rat(1, 4), Rat(1, 2));
    CHECK(tv.count() == 5);
    for (int x = 0; x < 5; ++x) CHECK(tv.test(x));
}

TEST_CASE("strictly regular pairs leave few atypical vertices") {
    // near-complete pairs are strictly regular at this scale; on them the
    // complement of the typical set stays within eps|A| for every admissible
    // target set
    int asserted = 0;
    const int n = 12;
    const Rat eps(1, 3);
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Rng gen(seed * 101 + 4);
        std::vector<EdgeColor> es;
        int skipped = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (skipped < 3 && gen.chance(2, 100)) {
                    ++skipped;
                    continue;
                }
                es.push_back({x, y, 1});
            }
        auto g = ColoredBipartiteGraph::build(n, n, 1, es);
        GraphView v = GraphView::color(g, 1);
        auto r = is_eps_regular(v, all_bits(n), all_bits(n), eps, true);
        REQUIRE(r.status == RegStatus::Regular);
        if (!(*r.max_deviation < eps)) continue;
        Rat d0 = r.base_density;
        Rng rng(seed);
        for (int trial = 0; trial < 5; ++trial) {
            int bsz = int((eps * Rat(n)).floor()) + 1 + int(rng.next_below(uint64_t(n / 2)));
            std::vector<int> pool;
            for (int y = 0; y < n; ++y) pool.push_back(y);
            rng.shuffle(pool);
            pool.resize(size_t(std::min(bsz, n)));
            Bits bp = Bits::of(n, pool);
            Bits tv = typical_vertices(v, all_bits(n), bp, eps, d0);
            CHECK(Rat(n - tv.count()) <= eps * Rat(n));
        }
        ++asserted;
    }
    CHECK(asserted > 0);
}

TEST_CASE("cluster partitions: structure, io, validation") {
    auto g = random_complete_coloring(10, 2, 0);
    auto p = ClusterPartition::uniform(10, 3);
    p.validate(g);
    CHECK(p.k() == 3);
    CHECK(p.m() == 3);
    CHECK(p.clusters_x[0].count() == 1); // leftover vertex

    auto text = p.to_text();
    auto p2 = ClusterPartition::from_text(text);
    CHECK(p2.to_text() == text);
    p2.validate(g);

    auto pr = ClusterPartition::random(10, 3, 5);
    pr.validate(g);
    CHECK(pr.to_text() != p.to_text()); // shuffled layout

    // overlapping clusters rejected
    auto bad = p;
    bad.clusters_x[1] = bad.clusters_x[2];
    CHECK_THROWS_AS(bad.validate(g), Error);
    // unequal exceptional sets rejected
    auto bad2 = ClusterPartition::uniform(10, 3);
    bad2.clusters_y[0].reset(bad2.clusters_y[0].first());
    CHECK_THROWS_AS(bad2.validate(g), Error);
}

TEST_CASE("reduced graph: both rules and the stored-density audit") {
    // all one color
    std::vector<EdgeColor> blue_es, red_es;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            blue_es.push_back({x, y, 2});
            red_es.push_back({x, y, 1});
        }
    auto blue = ColoredBipartiteGraph::build(4, 4, 2, blue_es);
    auto red = ColoredBipartiteGraph::build(4, 4, 2, red_es);
    auto p = ClusterPartition::uniform(4, 2);

    auto hb = reduced_graph(blue, p, Rat(0), Rat(1, 2), ReducedRule::DegreeFormD);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(hb.color_at(i, j) == 2);

    auto hr = reduced_graph(red, p, Rat(0), Rat(1, 2), ReducedRule::DegreeFormD);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(hr.color_at(i, j) == 1);

    // exact half-half tie goes to color 1 under the majority rule
    std::vector<EdgeColor> tie_es;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) tie_es.push_back({x, y, y < 2 ? 1 : 2});
    auto tie = ColoredBipartiteGraph::build(4, 4, 2, tie_es);
    auto ht = reduced_graph(tie, ClusterPartition::uniform(4, 1), Rat(1, 100), Rat(0),
                            ReducedRule::MajorityHalfEps);
    CHECK(ht.color_at(0, 0) == 1);

    // audit: stored densities reproduce the coloring bit-exactly
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_complete_coloring(12, 2, seed);
        auto pp = ClusterPartition::uniform(12, 3);
        auto h = reduced_graph(g, pp, Rat(1, 50), Rat(1, 10), ReducedRule::MajorityHalfEps);
        CHECK(h.recheck_colors() == h.edge_color);
        auto h2 = reduced_graph(g, pp, Rat(1, 50), Rat(1, 10), ReducedRule::DegreeFormD);
        CHECK(h2.recheck_colors() == h2.edge_color);
    }

    auto mono = ColoredBipartiteGraph::build(4, 4, 1, red_es);
    CHECK_THROWS_AS(reduced_graph(mono, p, Rat(0), Rat(1, 2), ReducedRule::DegreeFormD), Error);
}

TEST_CASE("partition regularity sweep runs in exact mode on small clusters") {
    auto g = random_complete_coloring(12, 2, 3);
    auto p = ClusterPartition::uniform(12, 3);
    auto rep = check_partition_regularity(g, p, Rat(1, 4), 0);
    CHECK(rep.size() == 2u * 3 * 3);
    for (const auto& pr : rep) CHECK(pr.status != RegStatus::Unknown); // m=4: exact mode
}
