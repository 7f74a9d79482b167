#ifndef BRAMSEY_REGULARITY_HPP
#define BRAMSEY_REGULARITY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bramsey/graph.hpp"
#include "bramsey/rational.hpp"

namespace bramsey {

// Equal-size clusters per side plus (possibly empty) exceptional sets.
// clusters_x[0] / clusters_y[0] are the exceptional sets; 1..k the clusters.
struct ClusterPartition {
    std::vector<Bits> clusters_x, clusters_y;

    int k() const { return int(clusters_x.size()) - 1; }
    int m() const { return clusters_x.size() > 1 ? clusters_x[1].count() : 0; }

    // structural invariants: disjoint, covering, equal m, |X_0| == |Y_0|
    void validate(const ColoredBipartiteGraph& g) const;

    // `clusters <k> <m>` header, then one labelled line per set:
    // X0..Xk then Y0..Yk, ascending vertex indices. Bit-exact round trip.
    std::string to_text() const;
    static ClusterPartition from_text(const std::string& text);

    // first k*m vertices chopped in index order, remainder exceptional
    static ClusterPartition uniform(int n, int k);
    // same shape over a seeded shuffle of the vertices
    static ClusterPartition random(int n, int k, uint64_t seed);
};

// exact edge density e(A,B) / (|A||B|)
Rat density(const GraphView& v, const Bits& a, const Bits& b);

enum class RegStatus { Regular, Irregular, Unknown };

struct RegularityResult {
    RegStatus status = RegStatus::Unknown;
    // verified witness pair when Irregular
    Bits witness_a, witness_b;
    Rat witness_density;
    Rat base_density;
    // exact mode: largest |d(A,B) - d(A',B')| over admissible subset pairs
    std::optional<Rat> max_deviation;
};

// Exact mode enumerates every A' x B' with |A'| > eps|A|, |B'| > eps|B|
// (sides capped at 14); witness mode runs degree-outlier and seeded
// random-subset probes and never claims Regular. Irregular results always
// carry a witness that re-verifies through density().
RegularityResult is_eps_regular(const GraphView& v, const Bits& a, const Bits& b, const Rat& eps,
                                bool exact, uint64_t seed = 0);

// vertices of A with more than (d - eps)|B'| neighbors in B'
Bits typical_vertices(const GraphView& v, const Bits& a, const Bits& b_prime, const Rat& eps,
                      const Rat& d);

enum class ReducedRule { DegreeFormD, MajorityHalfEps };

// Cluster-level 2-colored graph. cluster_graph vertex i (0-based) stands for
// cluster i+1 of the partition; edges carry the rule's color choice and the
// per-pair color densities are kept for audit.
struct ReducedColoredGraph {
    int k = 0;
    ReducedRule rule = ReducedRule::MajorityHalfEps;
    Rat eps, d;
    std::vector<int> edge_color;          // k*k, 0 = none
    std::vector<std::array<Rat, 2>> dens; // k*k, densities of colors 1,2

    int color_at(int i, int j) const { return edge_color[size_t(i) * k + j]; }
    const std::array<Rat, 2>& densities_at(int i, int j) const {
        return dens[size_t(i) * k + j];
    }

    // recomputes the rule from the stored densities; must reproduce
    // edge_color exactly
    std::vector<int> recheck_colors() const;

    ColoredBipartiteGraph to_cluster_graph() const;
};

// rule degree-form-d: color 2 wherever its density >= d, else color 1 if its
// density >= d. rule majority-half-eps: lexicographically first color with
// e_f >= (1/2 - eps) m^2.
ReducedColoredGraph reduced_graph(const ColoredBipartiteGraph& g, const ClusterPartition& p,
                                  const Rat& eps, const Rat& d, ReducedRule rule);

// Witness/exact sweep over all cluster pairs and both colors; summary for
// reports and the pipeline's honesty flags.
struct PairRegularity {
    int i = 0, j = 0, color = 0;
    RegStatus status = RegStatus::Unknown;
    Rat density;
};

std::vector<PairRegularity> check_partition_regularity(const ColoredBipartiteGraph& g,
                                                       const ClusterPartition& p, const Rat& eps,
                                                       uint64_t seed = 0);

} // namespace bramsey

#endif
