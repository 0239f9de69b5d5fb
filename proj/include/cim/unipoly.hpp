#ifndef CIM_UNIPOLY_HPP
#define CIM_UNIPOLY_HPP

#include <string>
#include <vector>

#include "cim/rational.hpp"

namespace cim {

// Univariate polynomial in z with exact integer coefficients.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.push_back(Integer(c));
        trim();
    }
    explicit UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly({1}); }
    static UniPoly z(int power = 1) {
        std::vector<Integer> c(power + 1, 0);
        c[power] = 1;
        return UniPoly(std::move(c));
    }

    // (1 - z)^k
    static UniPoly one_minus_z_pow(int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Integer(0);
    }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Integer& c) const;

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return coeffs_ != o.coeffs_; }

    // Exact division by (1 - z)^k; fails if not divisible.
    UniPoly divide_one_minus_z(int k) const;

    // Multiplicity of the root z = 1.
    int order_at_one() const;

    Integer eval_at_one() const;

    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Integer> coeffs_;
};

} // namespace cim

#endif
