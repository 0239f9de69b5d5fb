#ifndef CIM_INTERVALS_HPP
#define CIM_INTERVALS_HPP

#include <optional>
#include <vector>

#include "cim/collection.hpp"

namespace cim {

enum class Orientation { Horizontal, Vertical };

// A maximal set of V(C)-cells in one row (horizontal) or column (vertical),
// pairwise connected by edges of the collection in that line.
struct Interval {
    Orientation orientation;
    std::vector<Cell> cells; // sorted

    bool contains(const Cell& c) const {
        return std::binary_search(cells.begin(), cells.end(), c);
    }

    auto operator<=>(const Interval&) const = default;
};

// Maximal vertical and horizontal intervals; every cell of V(C) lies in
// exactly one interval per orientation.
struct IntervalDecomposition {
    std::vector<Interval> vertical;
    std::vector<Interval> horizontal;
};

IntervalDecomposition interval_decomposition(const MinorCollection& c);

// Bipartite graph on the maximal intervals: h-node i adjacent to v-node j
// iff the intervals share a cell of V(C); the shared cell labels the edge.
class IntervalGraph {
public:
    explicit IntervalGraph(const MinorCollection& c);

    int h_count() const { return static_cast<int>(horizontal_.size()); }
    int v_count() const { return static_cast<int>(vertical_.size()); }
    const std::vector<Interval>& h_nodes() const { return horizontal_; }
    const std::vector<Interval>& v_nodes() const { return vertical_; }

    bool adjacent(int h, int v) const { return label_[h][v].has_value(); }
    Cell label(int h, int v) const { return *label_[h][v]; }
    int edge_count() const { return edges_; }

    const std::vector<int>& h_neighbors(int h) const { return hAdj_[h]; }
    const std::vector<int>& v_neighbors(int v) const { return vAdj_[v]; }

    // Index of the h-interval (row) or v-interval (column) containing c.
    int h_node_of(const Cell& c) const;
    int v_node_of(const Cell& c) const;

    std::string h_name(int h) const { return "h" + std::to_string(h + 1); }
    std::string v_name(int v) const { return "v" + std::to_string(v + 1); }

private:
    std::vector<Interval> horizontal_;
    std::vector<Interval> vertical_;
    std::vector<std::vector<std::optional<Cell>>> label_;
    std::vector<std::vector<int>> hAdj_, vAdj_;
    int edges_ = 0;
};

} // namespace cim

#endif
