#include "cim/intervals.hpp"

#include <map>
#include <numeric>

namespace cim {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<Interval> components(const MinorCollection& c, Orientation o) {
    const auto& cells = c.cells();
    std::map<Cell, int> idx;
    for (std::size_t i = 0; i < cells.size(); ++i) idx[cells[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(cells.size()));
    for (const auto& d : c.minors()) {
        for (auto [u, v] : d.edges()) {
            bool vertical = u.col == v.col;
            if ((o == Orientation::Vertical) == vertical) uf.unite(idx[u], idx[v]);
        }
    }
    std::map<int, Interval> byRoot;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto& iv = byRoot[uf.find(static_cast<int>(i))];
        iv.orientation = o;
        iv.cells.push_back(cells[i]);
    }
    std::vector<Interval> out;
    for (auto& [root, iv] : byRoot) {
        std::sort(iv.cells.begin(), iv.cells.end());
        out.push_back(std::move(iv));
    }
    // Canonical listing: vertical intervals by (col, first row), horizontal
    // by (row, first col).
    std::sort(out.begin(), out.end(), [o](const Interval& a, const Interval& b) {
        if (o == Orientation::Vertical) {
            if (a.cells.front().col != b.cells.front().col) return a.cells.front().col < b.cells.front().col;
            return a.cells.front().row < b.cells.front().row;
        }
        if (a.cells.front().row != b.cells.front().row) return a.cells.front().row < b.cells.front().row;
        return a.cells.front().col < b.cells.front().col;
    });
    return out;
}

} // namespace

IntervalDecomposition interval_decomposition(const MinorCollection& c) {
    return {components(c, Orientation::Vertical), components(c, Orientation::Horizontal)};
}

IntervalGraph::IntervalGraph(const MinorCollection& c) {
    auto dec = interval_decomposition(c);
    vertical_ = std::move(dec.vertical);
    horizontal_ = std::move(dec.horizontal);
    label_.assign(horizontal_.size(), std::vector<std::optional<Cell>>(vertical_.size()));
    hAdj_.assign(horizontal_.size(), {});
    vAdj_.assign(vertical_.size(), {});
    for (const auto& cell : c.cells()) {
        int h = h_node_of(cell);
        int v = v_node_of(cell);
        label_[h][v] = cell;
    }
    for (int h = 0; h < h_count(); ++h)
        for (int v = 0; v < v_count(); ++v)
            if (label_[h][v]) {
                hAdj_[h].push_back(v);
                vAdj_[v].push_back(h);
                ++edges_;
            }
}

int IntervalGraph::h_node_of(const Cell& c) const {
    for (std::size_t i = 0; i < horizontal_.size(); ++i)
        if (horizontal_[i].contains(c)) return static_cast<int>(i);
    fail(ErrorKind::Precondition, "cell " + c.name() + " not in any horizontal interval");
}

int IntervalGraph::v_node_of(const Cell& c) const {
    for (std::size_t i = 0; i < vertical_.size(); ++i)
        if (vertical_[i].contains(c)) return static_cast<int>(i);
    fail(ErrorKind::Precondition, "cell " + c.name() + " not in any vertical interval");
}

} // namespace cim
