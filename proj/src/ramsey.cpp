#include "bramsey/ramsey.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <sstream>
#include <thread>

#include "bramsey/constructions.hpp"

namespace bramsey {

namespace {

void validate_lengths(const std::vector<int>& lengths) {
    if (lengths.empty() || lengths.size() > 3)
        throw Error("supported color counts are 1..3");
    for (int L : lengths)
        if (L < 4 || L % 2 != 0 || L > 64)
            throw Error("forbidden cycle lengths must be even, >= 4 and <= 64");
}

// Color permutations mapping each color to one forbidding the same length.
std::vector<std::vector<int>> color_symmetries(const std::vector<int>& lengths) {
    const int r = int(lengths.size());
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < r; ++i)
            if (lengths[size_t(perm[size_t(i)])] != lengths[size_t(i)]) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Backtracking over complete colorings in row-major cell order. Symmetry
// handling: all prunes reject assignments whose filled prefix is provably
// not the lex-least member of its orbit under row perms x column perms x
// color-class perms, so exhaustion ("no good coloring") is preserved.
struct Solver {
    int N, r;
    std::vector<int> lengths;
    std::vector<uint8_t> cell;
    std::vector<uint64_t> row_mask, col_mask; // [color-1][index]
    std::vector<std::vector<int>> color_perms;
    std::vector<uint8_t> first_cell_allowed;
    std::vector<uint8_t> fixed_prefix; // parallel mode: subtree selector

    long long nodes = 0;
    Budget budget;
    std::chrono::steady_clock::time_point t0;
    bool tripped = false;

    std::vector<uint8_t> cursor;
    int cursor_pos = -1;
    bool resume_active = false;

    bool found = false;
    std::vector<uint8_t> good;

    Solver(int N_, std::vector<int> lens, Budget b)
        : N(N_), r(int(lens.size())), lengths(std::move(lens)), budget(b) {
        cell.assign(size_t(N) * N, 0);
        row_mask.assign(size_t(r) * N, 0);
        col_mask.assign(size_t(r) * N, 0);
        color_perms = color_symmetries(lengths);
        first_cell_allowed.assign(size_t(r) + 1, 0);
        for (int c = 1; c <= r; ++c) {
            int rep = c;
            for (int c2 = 1; c2 < c; ++c2)
                if (lengths[size_t(c2 - 1)] == lengths[size_t(c - 1)]) {
                    rep = c2;
                    break;
                }
            first_cell_allowed[size_t(c)] = uint8_t(rep == c);
        }
        t0 = std::chrono::steady_clock::now();
    }

    uint64_t& rmask(int c, int i) { return row_mask[size_t(c - 1) * N + i]; }
    uint64_t& cmask(int c, int j) { return col_mask[size_t(c - 1) * N + j]; }

    bool budget_ok() {
        if (budget.max_nodes >= 0 && nodes > budget.max_nodes) return false;
        if (budget.max_ms >= 0 && (nodes & 0x3ff) == 0) {
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            if (ms > budget.max_ms) return false;
        }
        return true;
    }

    // path of exactly `edges` edges in color c from the current endpoint to
    // row i0; i0 may only appear as the final vertex. The cell (i,j) under
    // test has not been added to the masks yet, so the path cannot use it.
    bool path_exists(int c, int i0, int edges, uint64_t vis_rows, uint64_t vis_cols, int at,
                     bool at_row) {
        if (at_row) { // edges even >= 2 here
            uint64_t cand = rmask(c, at) & ~vis_cols;
            while (cand) {
                int j = std::countr_zero(cand);
                cand &= cand - 1;
                if (path_exists(c, i0, edges - 1, vis_rows, vis_cols | (uint64_t{1} << j), j,
                                false))
                    return true;
            }
        } else {
            if (edges == 1) return (cmask(c, at) >> i0) & 1;
            uint64_t cand = cmask(c, at) & ~vis_rows;
            while (cand) {
                int i = std::countr_zero(cand);
                cand &= cand - 1;
                if (path_exists(c, i0, edges - 1, vis_rows | (uint64_t{1} << i), vis_cols, i,
                                true))
                    return true;
            }
        }
        return false;
    }

    // would assigning color c at (i,j) close a monochromatic cycle of the
    // exact forbidden length?
    bool creates_forbidden(int c, int i, int j) {
        int L = lengths[size_t(c - 1)];
        if (L > 2 * N) return false;
        return path_exists(c, i, L - 1, uint64_t{1} << i, uint64_t{1} << j, j, false);
    }

    // completed-row sweep: every permutation of the filled rows, combined
    // with a color-class permutation and the optimal column order (columns
    // sorted as vectors), must not produce a smaller prefix
    bool canonical_at_row_boundary(int i) {
        const int rows = i + 1;
        if (rows > 7) return true; // cap the factorial sweep; cheap rules still apply
        std::vector<int> perm(rows);
        for (int k = 0; k < rows; ++k) perm[k] = k;
        std::vector<std::array<uint8_t, 8>> cols(static_cast<size_t>(N));
        do {
            for (const auto& cp : color_perms) {
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < rows; ++k) {
                        uint8_t v = cell[size_t(perm[size_t(k)]) * N + j];
                        cols[size_t(j)][size_t(k)] = uint8_t(cp[size_t(v - 1)] + 1);
                    }
                std::sort(cols.begin(), cols.end(),
                          [&](const std::array<uint8_t, 8>& a, const std::array<uint8_t, 8>& b) {
                              for (int k = 0; k < rows; ++k)
                                  if (a[size_t(k)] != b[size_t(k)])
                                      return a[size_t(k)] < b[size_t(k)];
                              return false;
                          });
                int cmp = 0;
                for (int k = 0; k < rows && cmp == 0; ++k)
                    for (int j = 0; j < N; ++j) {
                        uint8_t image = cols[size_t(j)][size_t(k)];
                        uint8_t cur = cell[size_t(k) * N + j];
                        if (image != cur) {
                            cmp = image < cur ? -1 : 1;
                            break;
                        }
                    }
                if (cmp < 0) return false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    }

    // row_free: the current row has already strictly exceeded the previous
    // row at an earlier column. col_eq[j]: columns j-1 and j agree on all
    // completed rows.
    bool search(int pos, const std::vector<uint8_t>& col_eq, bool row_free) {
        if (pos == N * N) {
            found = true;
            good = cell;
            return true;
        }
        ++nodes;
        if (!budget_ok()) {
            tripped = true;
            cursor_pos = pos;
            cursor.assign(cell.begin(), cell.begin() + pos);
            return false;
        }
        const int i = pos / N, j = pos % N;
        const bool on_path = resume_active && pos < cursor_pos;
        const int from = on_path ? cursor[size_t(pos)] : 1;

        for (int c = from; c <= r; ++c) {
            if (!fixed_prefix.empty() && pos < int(fixed_prefix.size()) &&
                c != fixed_prefix[size_t(pos)])
                continue;
            if (pos == 0 && !first_cell_allowed[size_t(c)]) continue;
            bool eq_prev = false;
            if (i > 0 && !row_free) {
                uint8_t up = cell[size_t(i - 1) * N + j];
                if (c < up) continue; // adjacent row swap would win
                eq_prev = (c == up);
            }
            if (j > 0 && col_eq[size_t(j)] && c < cell[size_t(i) * N + j - 1])
                continue; // adjacent column swap would win
            if (creates_forbidden(c, i, j)) continue;

            cell[size_t(pos)] = uint8_t(c);
            rmask(c, i) |= uint64_t{1} << j;
            cmask(c, j) |= uint64_t{1} << i;

            bool ok = false;
            if (j == N - 1) {
                if (canonical_at_row_boundary(i)) {
                    std::vector<uint8_t> next_eq(col_eq);
                    for (int q = 1; q < N; ++q)
                        next_eq[size_t(q)] = uint8_t(next_eq[size_t(q)] &&
                                                     cell[size_t(i) * N + q - 1] ==
                                                         cell[size_t(i) * N + q]);
                    ok = search(pos + 1, next_eq, false);
                }
            } else {
                bool next_free = row_free || (i > 0 && !eq_prev);
                ok = search(pos + 1, col_eq, i == 0 ? true : next_free);
            }

            cell[size_t(pos)] = 0;
            rmask(c, i) &= ~(uint64_t{1} << j);
            cmask(c, j) &= ~(uint64_t{1} << i);
            if (ok) return true;
            if (tripped) return false;
            if (on_path && c == from) resume_active = false; // cursor branch done
        }
        return false;
    }

    bool run(const std::string& resume) {
        cursor.clear();
        cursor_pos = -1;
        resume_active = false;
        if (!resume.empty()) {
            std::istringstream in(resume);
            int pos, v;
            if (!(in >> pos) || pos < 0 || pos > N * N) throw Error("bad resume state");
            cursor_pos = pos;
            while (in >> v) {
                if (v < 1 || v > r) throw Error("bad resume color");
                cursor.push_back(uint8_t(v));
            }
            if (int(cursor.size()) != cursor_pos) throw Error("bad resume state length");
            resume_active = cursor_pos > 0;
        }
        std::vector<uint8_t> col_eq(size_t(N), 1);
        return search(0, col_eq, true);
    }

    std::string serialize_cursor() const {
        std::ostringstream out;
        out << cursor_pos;
        for (int p = 0; p < cursor_pos; ++p) out << " " << int(cursor[size_t(p)]);
        return out.str();
    }
};

ColoredBipartiteGraph graph_from_cells(int N, int r, const std::vector<uint8_t>& cells) {
    std::vector<EdgeColor> edges;
    edges.reserve(size_t(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) edges.push_back({i, j, cells[size_t(i) * N + j]});
    return ColoredBipartiteGraph::build(N, N, r, edges);
}

void verify_good_coloring(const ColoredBipartiteGraph& g, const std::vector<int>& lengths) {
    if (!g.complete()) throw Error("internal: good coloring is not complete");
    for (int c = 1; c <= int(lengths.size()); ++c) {
        int L = lengths[size_t(c - 1)];
        if (L > 2 * std::min(g.n1(), g.n2())) continue; // cannot fit
        auto res = find_cycle_of_length(GraphView::color(g, c), L);
        if (res.outcome != SearchOutcome::Absent)
            throw Error("internal: good coloring re-verification failed for color " +
                        std::to_string(c));
    }
}

} // namespace

RamseyVerdict decide_arrowing(int N, const std::vector<int>& lengths, Budget budget,
                              const std::string& resume_state, int jobs) {
    validate_lengths(lengths);
    if (N < 1 || N > 64) throw Error("N out of range [1,64]");
    if (jobs < 1) throw Error("jobs must be >= 1");
    if (jobs > 1 && !resume_state.empty())
        throw Error("resume is only supported with jobs = 1");

    auto t_start = std::chrono::steady_clock::now();
    RamseyVerdict v;
    v.N = N;
    v.lengths = lengths;

    if (jobs == 1 || N < 2) {
        Solver s(N, lengths, budget);
        bool ok = s.run(resume_state);
        v.nodes_explored = s.nodes;
        if (ok) {
            v.outcome = RamseyOutcome::GoodColoring;
            v.good_coloring = graph_from_cells(N, int(lengths.size()), s.good);
            verify_good_coloring(*v.good_coloring, lengths);
        } else if (s.tripped) {
            v.outcome = RamseyOutcome::BudgetExhausted;
            v.resume_state = s.serialize_cursor();
        } else {
            v.outcome = RamseyOutcome::AllColoringsHit;
        }
    } else {
        // fixed two-cell prefixes partition the tree; tasks run independently
        // and merge in prefix order, which keeps the reported coloring
        // identical to the sequential one
        const int r = int(lengths.size());
        std::vector<std::vector<uint8_t>> prefixes;
        for (int c0 = 1; c0 <= r; ++c0)
            for (int c1 = c0; c1 <= r; ++c1) // column rule pre-applied on row 0
                prefixes.push_back({uint8_t(c0), uint8_t(c1)});
        struct Task {
            std::vector<uint8_t> prefix;
            bool found = false, tripped = false;
            long long nodes = 0;
            std::vector<uint8_t> good;
        };
        std::vector<Task> tasks(prefixes.size());
        for (size_t q = 0; q < prefixes.size(); ++q) tasks[q].prefix = prefixes[q];
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t idx = next.fetch_add(1);
                if (idx >= tasks.size()) break;
                Task& t = tasks[idx];
                Solver s(N, lengths, budget);
                s.fixed_prefix = t.prefix;
                bool ok = s.run("");
                t.nodes = s.nodes;
                t.found = ok;
                t.tripped = s.tripped;
                if (ok) t.good = s.good;
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();

        bool any_trip = false;
        const Task* winner = nullptr;
        for (const auto& t : tasks) {
            v.nodes_explored += t.nodes;
            if (t.found && !winner) winner = &t;
            if (t.tripped) any_trip = true;
        }
        if (winner) {
            v.outcome = RamseyOutcome::GoodColoring;
            v.good_coloring = graph_from_cells(N, int(lengths.size()), winner->good);
            verify_good_coloring(*v.good_coloring, lengths);
        } else if (any_trip) {
            v.outcome = RamseyOutcome::BudgetExhausted;
        } else {
            v.outcome = RamseyOutcome::AllColoringsHit;
        }
    }
    v.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
            .count();
    return v;
}

BramseyResult ramsey_value(const std::vector<int>& lengths, int n_max, Budget budget, int jobs) {
    validate_lengths(lengths);
    BramseyResult res;
    res.lengths = lengths;
    long long lb = 1 - (long long)lengths.size();
    for (int L : lengths) lb += L / 2;
    if (lb < 1) lb = 1;
    if (n_max < lb) throw Error("n_max below the construction lower bound");

    std::optional<ColoredBipartiteGraph> last_good;
    for (int N = int(lb); N <= n_max; ++N) {
        RamseyVerdict v = decide_arrowing(N, lengths, budget, "", jobs);
        res.nodes_explored += v.nodes_explored;
        res.scan.push_back({N, int(v.outcome)});
        if (v.outcome == RamseyOutcome::GoodColoring) {
            last_good = std::move(v.good_coloring);
            continue;
        }
        if (v.outcome == RamseyOutcome::AllColoringsHit) {
            res.value = N;
            res.lo = N;
            res.hi = N;
            if (!last_good && N == lb) {
                // one below the scan start, the windowed construction itself
                // is the certificate
                std::vector<int> halves;
                for (int L : lengths) halves.push_back(L / 2);
                last_good = lower_bound_coloring(halves);
                verify_good_coloring(*last_good, lengths);
            }
            res.certificate = std::move(last_good);
            return res;
        }
        res.lo = N; // budget exhausted here: the value is at least N
        res.hi.reset();
        if (!last_good && N == lb) {
            std::vector<int> halves;
            for (int L : lengths) halves.push_back(L / 2);
            last_good = lower_bound_coloring(halves);
            verify_good_coloring(*last_good, lengths);
        }
        res.certificate = std::move(last_good);
        return res;
    }
    res.lo = n_max + 1;
    res.hi.reset();
    res.certificate = std::move(last_good);
    return res;
}

} // namespace bramsey
