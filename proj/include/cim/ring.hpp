#ifndef CIM_RING_HPP
#define CIM_RING_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cim/cell.hpp"
#include "cim/config.hpp"

namespace cim {

// Ambient polynomial ring: one variable per cell, in row-major order,
// optionally followed by auxiliary variables (elimination tags).
// Rings are immutable; polynomials hold a shared handle to theirs.
class Ring {
public:
    Ring() = default;

    explicit Ring(std::vector<Cell> cells, std::vector<std::string> aux = {})
        : cells_(std::move(cells)), aux_(std::move(aux)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        for (std::size_t i = 0; i < cells_.size(); ++i) index_[cells_[i]] = static_cast<int>(i);
    }

    static Ring grid(int rows, int cols) {
        std::vector<Cell> cells;
        cells.reserve(static_cast<std::size_t>(rows) * cols);
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j) cells.push_back({i, j});
        return Ring(std::move(cells));
    }

    int size() const { return static_cast<int>(cells_.size() + aux_.size()); }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    int aux_count() const { return static_cast<int>(aux_.size()); }

    const std::vector<Cell>& cells() const { return cells_; }

    bool has_cell(const Cell& c) const { return index_.count(c) > 0; }

    int index_of(const Cell& c) const {
        auto it = index_.find(c);
        if (it == index_.end()) fail(ErrorKind::Validation, "cell " + c.name() + " not in ring");
        return it->second;
    }

    // Aux variables sit after the cells.
    int aux_index(int k) const { return cell_count() + k; }

    bool is_aux(int var) const { return var >= cell_count(); }

    std::string var_name(int var) const {
        if (var < cell_count()) return cells_[var].name();
        return aux_[var - cell_count()];
    }

    Cell cell_at(int var) const { return cells_.at(var); }

    // Same ring up to the variable list.
    bool same_vars(const Ring& other) const {
        return cells_ == other.cells_ && aux_ == other.aux_;
    }

    Ring with_aux(std::vector<std::string> names) const {
        Ring r(cells_);
        r.aux_ = std::move(names);
        return r;
    }

private:
    std::vector<Cell> cells_;
    std::vector<std::string> aux_;
    std::map<Cell, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Ring r) { return std::make_shared<const Ring>(std::move(r)); }

} // namespace cim

#endif
