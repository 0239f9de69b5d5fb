#ifndef CIM_PRIMES_HPP
#define CIM_PRIMES_HPP

#include <optional>
#include <vector>

#include "cim/cycles.hpp"
#include "cim/groebner.hpp"

namespace cim {

// A cell subset meeting each minor either trivially or in a full edge.
struct AdmissibleSet {
    std::vector<Cell> cells; // sorted

    bool empty() const { return cells.empty(); }
    bool contains(const Cell& c) const {
        return std::binary_search(cells.begin(), cells.end(), c);
    }
    bool subset_of(const AdmissibleSet& o) const {
        return std::includes(o.cells.begin(), o.cells.end(), cells.begin(), cells.end());
    }
    auto operator<=>(const AdmissibleSet&) const = default;
};

bool is_admissible(const MinorCollection& c, const std::vector<Cell>& cells);

// All admissible subsets of V(C), including the empty set and V(C).
std::vector<AdmissibleSet> enumerate_admissible(const MinorCollection& c, const Caps& caps = {});

// P_W = (variables of W) + toric ideal of the minors avoiding W.
struct PrimeComponent {
    AdmissibleSet w;
    MinorCollection restricted; // minors avoiding W
    Ideal ideal;                // in the ambient ring of the base collection

    bool variable_free() const { return w.empty(); }
    bool variables_only() const { return restricted.empty(); }
};

PrimeComponent prime_component(const MinorCollection& c, const AdmissibleSet& w, RingPtr ring,
                               const Caps& caps = {});

// Exact containment P_W subseteq P_V by generator membership.
bool contains_component(const PrimeComponent& inner, const PrimeComponent& outer, const Caps& caps = {});

// Combinatorial containment criterion (subset of variables plus the
// cycle-vertex condition), used as a consistency cross-check.
bool contains_component_combinatorial(const MinorCollection& c, const PrimeComponent& inner,
                                      const PrimeComponent& outer, const Caps& caps = {});

struct MinimalPrimesOptions {
    bool corner_shortcut = true; // prune nonempty candidates without the corner cell
};

// The minimal elements of {P_W : W admissible}; always includes P_empty.
std::vector<PrimeComponent> minimal_primes(const MinorCollection& c, RingPtr ring,
                                           const Caps& caps = {},
                                           MinimalPrimesOptions opts = {});

// For corner collections: radical iff deleting the two intervals through
// the corner cell leaves an acyclic interval graph.
bool is_radical_corner(const MinorCollection& c, const Caps& caps = {});

// A witnessing cycle avoiding both corner intervals, when one exists.
std::optional<Cycle> nonradical_witness_cycle(const MinorCollection& c, const Caps& caps = {});

// I(C) plus x11*f_sigma over cycles avoiding both corner intervals; equals
// the intersection of all minimal primes for corner collections.
Ideal radical_witness(const MinorCollection& c, RingPtr ring, const Caps& caps = {});

struct IdentityCheck {
    std::string identity;
    int degree = -1;   // -1 for non-graded (elimination route) checks
    long left_dim = -1;
    long right_dim = -1;
    bool pass = false;
    std::string note;
};

struct DecompositionReport {
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

// Degree-by-degree verification of the corner decomposition identities:
// (i)   I(C) = (intersection of minimal primes) meet (intersection of
//       I(C)+P_W^2 over nonempty W),
// (ii)  the latter intersection equals I(C) + (x11^2),
// (iii) the intersection of the nonempty-W primes equals (x11) plus the
//       antidiagonal monomials of the minors.
// Graded slices decide each degree <= max_degree; elimination-based
// intersections are attempted where the bases complete under caps.
DecompositionReport decomposition_check(const MinorCollection& c, int max_degree, const Caps& caps = {});

} // namespace cim

#endif
