#ifndef CIM_COLLECTION_HPP
#define CIM_COLLECTION_HPP

#include <array>
#include <set>
#include <string>
#include <vector>

#include "cim/cell.hpp"
#include "cim/config.hpp"
#include "cim/ideal.hpp"

namespace cim {

// A 2-minor [a1,a2|b1,b2] of the grid, a1<a2 and b1<b2.
struct Minor {
    int a1, a2, b1, b2;

    auto operator<=>(const Minor&) const = default;

    bool corner_interval() const { return b1 == 1; }
    bool corner() const { return a1 == 1 && b1 == 1; }

    std::array<Cell, 4> vertices() const {
        return {Cell{a1, b1}, Cell{a1, b2}, Cell{a2, b1}, Cell{a2, b2}};
    }

    // The four axis-parallel vertex pairs: two horizontal, two vertical.
    std::array<std::pair<Cell, Cell>, 4> edges() const {
        return {{{Cell{a1, b1}, Cell{a1, b2}},
                 {Cell{a2, b1}, Cell{a2, b2}},
                 {Cell{a1, b1}, Cell{a2, b1}},
                 {Cell{a1, b2}, Cell{a2, b2}}}};
    }

    std::string str() const {
        return "[" + std::to_string(a1) + "," + std::to_string(a2) + "|" +
               std::to_string(b1) + "," + std::to_string(b2) + "]";
    }
};

class MinorCollection {
public:
    MinorCollection() = default;
    MinorCollection(int m, int n, std::vector<Minor> minors, bool corner_interval_only = true);

    int rows() const { return m_; }
    int cols() const { return n_; }
    const std::vector<Minor>& minors() const { return minors_; }
    bool empty() const { return minors_.empty(); }
    int size() const { return static_cast<int>(minors_.size()); }

    const std::vector<Cell>& cells() const { return cells_; } // V(C), row-major
    bool has_cell(const Cell& c) const { return cellSet_.count(c) > 0; }

    std::set<std::pair<Cell, Cell>> edge_set() const; // E(C), normalized pairs

    bool all_corner_interval() const;
    bool all_corner() const;

    // Minors whose vertex sets avoid every cell of u.
    MinorCollection restrict_away(const std::vector<Cell>& u) const;

    // The set of all corner minors [1,i|1,j] of an m x n grid.
    static MinorCollection full_corner(int m, int n);
    // The set of all corner-interval minors [i,j|1,k].
    static MinorCollection full_corner_interval(int m, int n);

private:
    int m_ = 0, n_ = 0;
    std::vector<Minor> minors_;
    std::vector<Cell> cells_;
    std::set<Cell> cellSet_;
};

// Canonical JSON input {"m": int, "n": int, "minors": [[a1,a2,b1,b2], ...]},
// order-insensitive, with optional "cornerIntervalOnly" (default true).
MinorCollection parse_collection(const std::string& json_text);
MinorCollection parse_collection_file(const std::string& path);
std::string collection_to_json(const MinorCollection& c);

// Ambient ring on the cells of V(C).
RingPtr ring_of(const MinorCollection& c);

// f_delta = x_{a1 b1} x_{a2 b2} - x_{a1 b2} x_{a2 b1}
Polynomial minor_binomial(const Minor& d, const Ring& ring);

// The binomial ideal with one generator per minor.
Ideal ideal_of(const MinorCollection& c, RingPtr ring);

} // namespace cim

#endif
