#ifndef BRAMSEY_CONSTRUCTIONS_HPP
#define BRAMSEY_CONSTRUCTIONS_HPP

#include <vector>

#include "bramsey/graph.hpp"

namespace bramsey {

// Color ids used by h_tilde and by the 2-colored experiments.
inline constexpr int kRed = 1;
inline constexpr int kBlue = 2;

// Complete r-coloring of K_{N,N}, N = sum(lengths) - r, in which edge
// (u_s, v_t) gets color k exactly when the 1-based column t falls in the
// k-th window; window k has width lengths[k-1] - 1, so the windows tile
// [1..N] and color class k is K_{N, lengths[k-1]-1}. Class k therefore has
// no cycle of length 2*lengths[k-1]. Requires every length >= 2.
ColoredBipartiteGraph lower_bound_coloring(const std::vector<int>& lengths);

// 2-colored graph on parts of size N = 4n split into blocks U_1..U_4 and
// V_1..V_4 of size n each:
//
//   U_1 blue V_1+V_2   U_1 red V_4
//   U_2 red  V_1+V_3   U_2 blue V_2
//   U_3 red  V_2       U_3 blue V_3   (U_3 minus u) blue V_4   u red V_4
//   U_4 red  V_3 + (V_1 minus v)      U_4 blue V_4 + v
//
// with u = first vertex of U_3 and v = first vertex of V_1. Unlisted block
// pairs are absent, which makes every degree exactly 3n = (3/4)N. At n = 1
// neither color class contains a C_4. For n >= 2 the table is implemented
// as written even though the red blocks U_2/U_4 x V_1/V_3 close a cycle of
// complete blocks, so a red C_{4n} exists there; the acceptance suite
// documents this with verified certificates.
ColoredBipartiteGraph h_tilde(int n);

// Complete K_{n,n} with independent uniform colors 1..r; the seeded host for
// the random experiments.
ColoredBipartiteGraph random_complete_coloring(int n, int r, uint64_t seed);

} // namespace bramsey

#endif
