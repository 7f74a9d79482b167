#ifndef BRAMSEY_GRAPH_HPP
#define BRAMSEY_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bramsey/bits.hpp"

namespace bramsey {

// All rejections surface as this type; the C boundary maps it to error codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Side : uint8_t { X = 0, Y = 1 };

// Side-tagged 0-based vertex id; the naming every certificate uses.
struct Vertex {
    Side side;
    int index;

    bool operator==(const Vertex& o) const { return side == o.side && index == o.index; }
    bool operator<(const Vertex& o) const {
        if (side != o.side) return side < o.side;
        return index < o.index;
    }
    std::string str() const {
        return (side == Side::X ? "x" : "y") + std::to_string(index);
    }
    static Vertex parse(const std::string& s);
};

struct EdgeColor {
    int x;
    int y;
    int color; // 1..r
};

// r-edge-colored bipartite graph on parts X (n1 vertices) and Y (n2).
// Dense storage: one color id per pair, color 0 meaning "absent", plus
// per-color neighborhood masks on both sides. Immutable after construction.
class ColoredBipartiteGraph {
public:
    static constexpr int kMaxSide = 1 << 14;
    static constexpr int kMaxColors = 15;

    // Unlisted pairs are absent. Rejects out-of-range indices/colors and
    // duplicate pairs, naming the offending entry.
    static ColoredBipartiteGraph build(int n1, int n2, int r,
                                       const std::vector<EdgeColor>& assignment);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int colors() const { return r_; }
    bool complete() const { return complete_; }

    int color_at(int x, int y) const { return color_[size_t(x) * n2_ + y]; }
    bool has_edge(int x, int y) const { return color_at(x, y) != 0; }

    // neighborhood of x in color c (c in 1..r), as a mask over Y
    const Bits& row(int c, int x) const { return rows_[c - 1][x]; }
    // neighborhood of y in color c, as a mask over X
    const Bits& col(int c, int y) const { return cols_[c - 1][y]; }
    const Bits& row_any(int x) const { return rows_any_[x]; }
    const Bits& col_any(int y) const { return cols_any_[y]; }

    long long edge_count(int c) const { return edge_count_[c - 1]; }
    long long edge_count_total() const;

    // `bcg <n1> <n2> <r>` header + n1 rows of n2 color ids. Bit-exact round trip.
    std::string to_text() const;
    static ColoredBipartiteGraph from_text(const std::string& text);
    static ColoredBipartiteGraph load(const std::string& path);
    void save(const std::string& path) const;

private:
    ColoredBipartiteGraph() = default;
    void finalize(); // derive masks, counts, complete flag from color_

    int n1_ = 0, n2_ = 0, r_ = 0;
    bool complete_ = false;
    std::vector<uint8_t> color_;                // n1*n2, row-major
    std::vector<std::vector<Bits>> rows_, cols_; // [color-1][vertex]
    std::vector<Bits> rows_any_, cols_any_;
    std::vector<long long> edge_count_;
};

// Read-only restriction of a graph: a subset of colors and a subset of
// vertices per side. Edges of the view are exactly the parent edges whose
// color passes the filter and whose endpoints pass both vertex filters.
class GraphView {
public:
    GraphView(const ColoredBipartiteGraph& g, uint32_t color_mask, Bits xs, Bits ys)
        : g_(&g), color_mask_(color_mask), xs_(std::move(xs)), ys_(std::move(ys)) {}

    static GraphView whole(const ColoredBipartiteGraph& g);
    static GraphView color(const ColoredBipartiteGraph& g, int c);
    static GraphView colors(const ColoredBipartiteGraph& g, const std::vector<int>& cs);

    GraphView restricted(const Bits& xs, const Bits& ys) const {
        return GraphView(*g_, color_mask_, xs_ & xs, ys_ & ys);
    }

    const ColoredBipartiteGraph& graph() const { return *g_; }
    uint32_t color_mask() const { return color_mask_; }
    const Bits& xs() const { return xs_; }
    const Bits& ys() const { return ys_; }

    // single admitted color, or 0 when the filter admits several
    int single_color() const;

    bool has_edge(int x, int y) const {
        if (!xs_.test(x) || !ys_.test(y)) return false;
        int c = g_->color_at(x, y);
        return c != 0 && (color_mask_ >> c) & 1;
    }

    // admissible neighborhoods (zero mask for filtered-out vertices)
    Bits neighbors_of_x(int x) const;
    Bits neighbors_of_y(int y) const;

    int degree_x(int x) const { return neighbors_of_x(x).count(); }
    int degree_y(int y) const { return neighbors_of_y(y).count(); }

    long long count_edges() const;
    long long count_edges_between(const Bits& a, const Bits& b) const;

private:
    const ColoredBipartiteGraph* g_;
    uint32_t color_mask_;
    Bits xs_, ys_;
};

struct Component {
    Bits xs, ys;
    int min_vertex_x() const { return xs.first(); }
    int size() const { return xs.count() + ys.count(); }
};

// Connected components of the non-isolated vertices of the view, ordered by
// smallest contained X index.
std::vector<Component> components(const GraphView& v);

int min_degree(const ColoredBipartiteGraph& g);
int min_degree(const GraphView& v);

} // namespace bramsey

#endif
