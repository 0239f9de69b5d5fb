#ifndef CIM_FIBERS_HPP
#define CIM_FIBERS_HPP

#include <map>
#include <string>
#include <vector>

#include "cim/collection.hpp"

namespace cim {

// Nonnegative integer table supported on V(C).
class ContingencyTable {
public:
    ContingencyTable() = default;
    explicit ContingencyTable(std::map<Cell, long> values);

    const std::map<Cell, long>& values() const { return values_; }
    long at(const Cell& c) const {
        auto it = values_.find(c);
        return it == values_.end() ? 0 : it->second;
    }
    long total() const;

    std::map<int, long> row_margins() const;
    std::map<int, long> col_margins() const;

    bool operator==(const ContingencyTable& o) const { return values_ == o.values_; }
    auto operator<=>(const ContingencyTable& o) const { return values_ <=> o.values_; }

    std::string str() const;

private:
    std::map<Cell, long> values_; // zero entries not stored
};

// One integer move vector per minor: +1 at (a1,b1),(a2,b2), -1 at
// (a1,b2),(a2,b1). Zero row and column margins by construction.
struct Move {
    Minor minor;
    std::map<Cell, int> delta;
};

struct MoveBasis {
    std::vector<Move> moves;
};

MoveBasis move_basis(const MinorCollection& c);

enum class FiberVerdict { Connected, Disconnected, Unknown };

struct FiberResult {
    FiberVerdict verdict = FiberVerdict::Unknown;
    // Signed 1-based minor indices (negative = reverse move) from u to v.
    std::vector<int> witness;
    long explored = 0;
    std::string reason;
};

// Breadth-first walk over nonnegative tables from u; "unknown" only when
// the state cap was hit before the component was exhausted.
FiberResult fiber_connected(const ContingencyTable& u, const ContingencyTable& v, const MoveBasis& b,
                            long cap);

struct CertifyResult {
    bool certified = false;
    bool margins_equal = false;
    bool weights_ok = false;       // every nonempty minimal-prime support carries >= 2 on both tables
    bool toric_member = false;     // x^u - x^v lies in the variable-free minimal prime
    bool supports_on_cycle = false; // literal support condition, recorded for reference
    std::string reason;
};

// Sufficient-condition certificate for connectivity on corner collections;
// "certified" must imply fiber_connected = connected.
CertifyResult certify_connectivity(const ContingencyTable& u, const ContingencyTable& v,
                                   const MinorCollection& c, const Caps& caps = {});

// JSON object {"cells": [[i, j, value], ...]}.
ContingencyTable parse_table(const std::string& json_text, const MinorCollection& c);
// File with {"u": {...}, "v": {...}}, both tables in the cells format.
std::pair<ContingencyTable, ContingencyTable> parse_table_pair_file(const std::string& path,
                                                                    const MinorCollection& c);

// x^u - x^v in the ambient ring of the collection.
Polynomial table_difference_binomial(const ContingencyTable& u, const ContingencyTable& v,
                                     const Ring& ring);

} // namespace cim

#endif
