#ifndef CIM_SLICE_HPP
#define CIM_SLICE_HPP

#include <map>
#include <vector>

#include "cim/ideal.hpp"

namespace cim {

// Sparse row over a fixed monomial basis, entries exact rationals.
using SparseRow = std::map<int, Rational>;

// Row space in reduced row-echelon form; supports exact membership,
// sums and intersections. Used as the degree-truncated linear-algebra
// oracle for homogeneous ideals.
class RowSpace {
public:
    explicit RowSpace(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduce r against the pivots; returns the residue.
    SparseRow reduce(SparseRow r) const;

    // Insert after reduction; returns true if the dimension grew.
    bool insert(SparseRow r);

    bool contains(const SparseRow& r) const { return reduce(r).empty(); }

    bool contains_space(const RowSpace& other) const;

    // Back-substitute once so rows are in reduced row-echelon form.
    void canonicalize();

    const std::map<int, SparseRow>& rows() const { return rows_; }

    static RowSpace sum(const RowSpace& a, const RowSpace& b);
    static RowSpace meet(const RowSpace& a, const RowSpace& b);

private:
    int width_;
    std::map<int, SparseRow> rows_; // pivot column -> normalized row
};

// All monomials of total degree d, in canonical (exponent-vector) order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int d, long memory_cap = 200'000);

// Degree-d slice of a homogeneous ideal: the row space spanned by
// m * g over generators g and monomials m of complementary degree.
class GradedSlice {
public:
    GradedSlice(const Ideal& ideal, int degree, const Caps& caps = {});

    int degree() const { return degree_; }
    int dim() const { return space_.dim(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const RowSpace& space() const { return space_; }

    // Membership of a degree-d homogeneous polynomial in the span.
    bool contains(const Polynomial& p) const;

    SparseRow row_of(const Polynomial& p) const;

private:
    int degree_;
    std::vector<Monomial> basis_;
    std::map<Monomial, int> index_;
    RowSpace space_;
};

} // namespace cim

#endif
