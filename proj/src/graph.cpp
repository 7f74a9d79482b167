#include "bramsey/graph.hpp"

#include <fstream>
#include <sstream>

namespace bramsey {

Vertex Vertex::parse(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
        throw Error("bad vertex id '" + s + "' (want x<i> or y<i>)");
    for (size_t i = 1; i < s.size(); ++i)
        if (!isdigit((unsigned char)s[i])) throw Error("bad vertex id '" + s + "'");
    return Vertex{s[0] == 'x' ? Side::X : Side::Y, std::stoi(s.substr(1))};
}

ColoredBipartiteGraph ColoredBipartiteGraph::build(int n1, int n2, int r,
                                                   const std::vector<EdgeColor>& assignment) {
    if (n1 < 1 || n2 < 1) throw Error("side sizes must be >= 1");
    if (n1 > kMaxSide || n2 > kMaxSide) throw Error("side size above desk-scale cap");
    if (r < 1 || r > kMaxColors) throw Error("color count out of range [1,15]");
    ColoredBipartiteGraph g;
    g.n1_ = n1;
    g.n2_ = n2;
    g.r_ = r;
    g.color_.assign(size_t(n1) * n2, 0);
    std::vector<uint8_t> seen(size_t(n1) * n2, 0);
    for (const auto& e : assignment) {
        if (e.x < 0 || e.x >= n1 || e.y < 0 || e.y >= n2)
            throw Error("edge (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                        ") out of range");
        if (e.color < 0 || e.color > r)
            throw Error("color " + std::to_string(e.color) + " at (" + std::to_string(e.x) +
                        "," + std::to_string(e.y) + ") out of range [0," + std::to_string(r) + "]");
        size_t idx = size_t(e.x) * n2 + e.y;
        if (seen[idx])
            throw Error("duplicate pair (" + std::to_string(e.x) + "," + std::to_string(e.y) + ")");
        seen[idx] = 1;
        g.color_[idx] = uint8_t(e.color);
    }
    g.finalize();
    return g;
}

void ColoredBipartiteGraph::finalize() {
    rows_.assign(r_, std::vector<Bits>(n1_, Bits(n2_)));
    cols_.assign(r_, std::vector<Bits>(n2_, Bits(n1_)));
    rows_any_.assign(n1_, Bits(n2_));
    cols_any_.assign(n2_, Bits(n1_));
    edge_count_.assign(r_, 0);
    complete_ = true;
    for (int x = 0; x < n1_; ++x) {
        for (int y = 0; y < n2_; ++y) {
            int c = color_[size_t(x) * n2_ + y];
            if (c == 0) {
                complete_ = false;
                continue;
            }
            rows_[c - 1][x].set(y);
            cols_[c - 1][y].set(x);
            rows_any_[x].set(y);
            cols_any_[y].set(x);
            ++edge_count_[c - 1];
        }
    }
}

long long ColoredBipartiteGraph::edge_count_total() const {
    long long t = 0;
    for (auto c : edge_count_) t += c;
    return t;
}

std::string ColoredBipartiteGraph::to_text() const {
    std::string out = "bcg " + std::to_string(n1_) + " " + std::to_string(n2_) + " " +
                      std::to_string(r_) + "\n";
    for (int x = 0; x < n1_; ++x) {
        for (int y = 0; y < n2_; ++y) {
            if (y) out += ' ';
            out += std::to_string(color_at(x, y));
        }
        out += '\n';
    }
    return out;
}

ColoredBipartiteGraph ColoredBipartiteGraph::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int n1, n2, r;
    if (!(in >> magic >> n1 >> n2 >> r) || magic != "bcg")
        throw Error("bad graph header (want 'bcg <n1> <n2> <r>')");
    if (n1 < 1 || n2 < 1 || n1 > kMaxSide || n2 > kMaxSide) throw Error("bad graph dimensions");
    if (r < 1 || r > kMaxColors) throw Error("bad color count");
    ColoredBipartiteGraph g;
    g.n1_ = n1;
    g.n2_ = n2;
    g.r_ = r;
    g.color_.assign(size_t(n1) * n2, 0);
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y) {
            int c;
            if (!(in >> c)) throw Error("truncated graph body at row " + std::to_string(x));
            if (c < 0 || c > r)
                throw Error("color " + std::to_string(c) + " out of range at (" +
                            std::to_string(x) + "," + std::to_string(y) + ")");
            g.color_[size_t(x) * n2 + y] = uint8_t(c);
        }
    int extra;
    if (in >> extra) throw Error("trailing data after graph body");
    g.finalize();
    return g;
}

ColoredBipartiteGraph ColoredBipartiteGraph::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

void ColoredBipartiteGraph::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << to_text();
}

GraphView GraphView::whole(const ColoredBipartiteGraph& g) {
    uint32_t mask = 0;
    for (int c = 1; c <= g.colors(); ++c) mask |= (1u << c);
    Bits xs(g.n1()), ys(g.n2());
    xs.set_all();
    ys.set_all();
    return GraphView(g, mask, std::move(xs), std::move(ys));
}

GraphView GraphView::color(const ColoredBipartiteGraph& g, int c) {
    if (c < 1 || c > g.colors()) throw Error("color " + std::to_string(c) + " out of range");
    Bits xs(g.n1()), ys(g.n2());
    xs.set_all();
    ys.set_all();
    return GraphView(g, 1u << c, std::move(xs), std::move(ys));
}

GraphView GraphView::colors(const ColoredBipartiteGraph& g, const std::vector<int>& cs) {
    uint32_t mask = 0;
    for (int c : cs) {
        if (c < 1 || c > g.colors()) throw Error("color " + std::to_string(c) + " out of range");
        mask |= (1u << c);
    }
    Bits xs(g.n1()), ys(g.n2());
    xs.set_all();
    ys.set_all();
    return GraphView(g, mask, std::move(xs), std::move(ys));
}

int GraphView::single_color() const {
    int found = 0;
    for (int c = 1; c <= g_->colors(); ++c) {
        if ((color_mask_ >> c) & 1) {
            if (found) return 0;
            found = c;
        }
    }
    return found;
}

Bits GraphView::neighbors_of_x(int x) const {
    Bits out(g_->n2());
    if (!xs_.test(x)) return out;
    for (int c = 1; c <= g_->colors(); ++c)
        if ((color_mask_ >> c) & 1) out |= g_->row(c, x);
    out &= ys_;
    return out;
}

Bits GraphView::neighbors_of_y(int y) const {
    Bits out(g_->n1());
    if (!ys_.test(y)) return out;
    for (int c = 1; c <= g_->colors(); ++c)
        if ((color_mask_ >> c) & 1) out |= g_->col(c, y);
    out &= xs_;
    return out;
}

long long GraphView::count_edges() const {
    return count_edges_between(xs_, ys_);
}

long long GraphView::count_edges_between(const Bits& a, const Bits& b) const {
    long long total = 0;
    Bits bb = b & ys_;
    Bits aa = a & xs_;
    aa.for_each([&](int x) {
        for (int c = 1; c <= g_->colors(); ++c)
            if ((color_mask_ >> c) & 1) total += g_->row(c, x).count_and(bb);
    });
    return total;
}

std::vector<Component> components(const GraphView& v) {
    const int n1 = v.graph().n1(), n2 = v.graph().n2();
    Bits seen_x(n1), seen_y(n2);
    std::vector<Component> out;
    for (int x0 = v.xs().first(); x0 != -1; x0 = v.xs().next(x0 + 1)) {
        if (seen_x.test(x0)) continue;
        Bits nb = v.neighbors_of_x(x0);
        if (nb.none()) continue; // isolated vertices are not components
        Component comp{Bits(n1), Bits(n2)};
        std::vector<Vertex> stack{{Side::X, x0}};
        comp.xs.set(x0);
        seen_x.set(x0);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            if (u.side == Side::X) {
                v.neighbors_of_x(u.index).for_each([&](int y) {
                    if (!seen_y.test(y)) {
                        seen_y.set(y);
                        comp.ys.set(y);
                        stack.push_back({Side::Y, y});
                    }
                });
            } else {
                v.neighbors_of_y(u.index).for_each([&](int x) {
                    if (!seen_x.test(x)) {
                        seen_x.set(x);
                        comp.xs.set(x);
                        stack.push_back({Side::X, x});
                    }
                });
            }
        }
        out.push_back(std::move(comp));
    }
    // discovery order is already by smallest X index
    return out;
}

int min_degree(const GraphView& v) {
    int best = -1;
    v.xs().for_each([&](int x) {
        int d = v.degree_x(x);
        if (best < 0 || d < best) best = d;
    });
    v.ys().for_each([&](int y) {
        int d = v.degree_y(y);
        if (best < 0 || d < best) best = d;
    });
    return best < 0 ? 0 : best;
}

int min_degree(const ColoredBipartiteGraph& g) {
    return min_degree(GraphView::whole(g));
}

} // namespace bramsey
