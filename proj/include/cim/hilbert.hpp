#ifndef CIM_HILBERT_HPP
#define CIM_HILBERT_HPP

#include "cim/groebner.hpp"
#include "cim/unipoly.hpp"

namespace cim {

// Hilbert series data of a graded quotient S/I: the numerator over
// (1-z)^N with N the ambient variable count, plus the Krull dimension and
// the numerator renormalized over (1-z)^dim.
struct HilbertData {
    UniPoly numerator;          // over (1 - z)^ambient_vars
    int ambient_vars = 0;
    int krull_dim = 0;
    UniPoly reduced_numerator;  // over (1 - z)^krull_dim

    // Hilbert function H(S/I, d) from the numerator.
    Integer value(int d) const;
};

// Numerator of S/I for a monomial ideal, by the colon/sum pivot recursion
// num(S/I) = num(S/(I + x)) + z * num(S/(I : x)).
HilbertData hilbert_monomial_quotient(const Ideal& monomial_ideal, const Caps& caps = {});

// Numerator of S/I for a homogeneous ideal via its initial ideal.
HilbertData hilbert_binomial_quotient(const Ideal& ideal, const TermOrder& order, const Caps& caps = {});

// Height of a monomial ideal = size of a minimum vertex cover of the
// generator supports.
int monomial_ideal_height(const std::vector<Monomial>& gens, int nvars);

// Quotient numerator of the star edge ideal K_{1,m} in its m+1 variables:
// z(1-z)^m + (1-z).
UniPoly star_quotient_numerator(int m);

// Split of the corner-interval quotient numerator along the first column:
// lhs  = numerator of S/I(C) for C all corner-interval minors of m x n;
// rhs  = sum over t < m of the 2-minor quotient numerator of rows t..m
//        times z(1-z)^{n(t-1)}, plus the tail z(1-z)^{(m-1)(n-1)} + (1-z)^m;
// rhs_adjusted uses the tail z(1-z)^{n(m-1)} + (1-z)^m, which is what the
// column-pivot exact sequences actually produce.
struct HilbertSplitReport {
    int m = 0, n = 0;
    UniPoly lhs;
    UniPoly rhs;
    UniPoly rhs_adjusted;
    bool matches = false;
    bool matches_adjusted = false;
    bool discrepancy() const { return !matches; }
};

HilbertSplitReport corner_interval_hilbert_split(int m, int n, const Caps& caps = {});

// All 2-minors of the rows r..m, columns s..n submatrix, as an ideal in
// the submatrix's own ring.
Ideal all_two_minors(int m, int n, int r, int s);

} // namespace cim

#endif
