#ifndef CIM_CELL_HPP
#define CIM_CELL_HPP

#include <compare>
#include <string>

namespace cim {

// A grid position x_{row,col}, 1-based. Row-major order throughout.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;

    std::string name() const {
        return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
    }
};

} // namespace cim

#endif
