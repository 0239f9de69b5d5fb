#ifndef CIM_GROEBNER_HPP
#define CIM_GROEBNER_HPP

#include <vector>

#include "cim/ideal.hpp"
#include "cim/term_order.hpp"

namespace cim {

// Reduced Groebner basis of an ideal under a fixed order. Elements are
// monic, interreduced, and sorted descending by leading term.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(TermOrder order, std::vector<Polynomial> elements, Ideal source)
        : order_(std::move(order)), elements_(std::move(elements)), source_(std::move(source)) {}

    const TermOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    const Ideal& source() const { return source_; }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> lts;
        lts.reserve(elements_.size());
        for (const auto& g : elements_) lts.push_back(g.leading_term(order_).first);
        return lts;
    }

    bool contains(const Polynomial& p) const;

private:
    TermOrder order_;
    std::vector<Polynomial> elements_;
    Ideal source_;
};

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order, const Caps& caps = {});

// Remainder of full division by the basis: no monomial of the result lies
// in the initial ideal, and p minus the result lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Division by an arbitrary generating set (no completeness guarantee).
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& gens, const TermOrder& order);

bool is_groebner_basis(const std::vector<Polynomial>& gens, const TermOrder& order, const Caps& caps = {});

bool membership(const Polynomial& p, const Ideal& ideal, const Caps& caps = {});

// ideal : x_v^infinity
Ideal saturate_by_variable(const Ideal& ideal, int v, const Caps& caps = {});

// ideal : (product of all cell variables)^infinity
Ideal saturate_all_cells(const Ideal& ideal, const Caps& caps = {});

// Intersection via a single elimination tag t: (t*I, (1-t)*J) with t
// eliminated.
Ideal intersect(const Ideal& a, const Ideal& b, const Caps& caps = {});

// Mutual membership of generators; both ideals must be homogeneous.
bool ideal_equals(const Ideal& a, const Ideal& b, const Caps& caps = {});

} // namespace cim

#endif
