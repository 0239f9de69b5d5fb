#include "cim/unipoly.hpp"

#include "cim/config.hpp"

namespace cim {

UniPoly UniPoly::one_minus_z_pow(int k) {
    UniPoly p = one();
    UniPoly base({1, -1});
    for (int i = 0; i < k; ++i) p = p * base;
    return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Integer> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Integer& k) const {
    std::vector<Integer> c = coeffs_;
    for (auto& x : c) x *= k;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::divide_one_minus_z(int k) const {
    UniPoly cur = *this;
    for (int step = 0; step < k; ++step) {
        if (cur.is_zero()) continue;
        // Synthetic division by (1 - z): remainder is the value at 1.
        if (cur.eval_at_one() != 0)
            fail(ErrorKind::Precondition, "polynomial not divisible by (1 - z)");
        // p = (1 - z) q: q_i = p_i + q_{i-1}.
        std::vector<Integer> q(cur.coeffs_.size() - 1, 0);
        Integer prev = 0;
        for (std::size_t i = 0; i + 1 < cur.coeffs_.size(); ++i) {
            q[i] = cur.coeffs_[i] + prev;
            prev = q[i];
        }
        cur = UniPoly(std::move(q));
    }
    return cur;
}

int UniPoly::order_at_one() const {
    if (is_zero()) return -1;
    UniPoly cur = *this;
    int ord = 0;
    while (cur.eval_at_one() == 0) {
        cur = cur.divide_one_minus_z(1);
        ++ord;
    }
    return ord;
}

Integer UniPoly::eval_at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Integer a = coeffs_[i];
        if (s.empty()) {
            if (i == 0) s += a.get_str();
            else {
                if (a == -1) s += "-";
                else if (a != 1) s += a.get_str() + "*";
            }
        } else if (a > 0) {
            s += " + ";
            if (i > 0 && a != 1) s += a.get_str() + "*";
            else if (i == 0) s += a.get_str();
        } else {
            s += " - ";
            Integer b = -a;
            if (i > 0 && b != 1) s += b.get_str() + "*";
            else if (i == 0) s += b.get_str();
        }
        if (i == 1) s += "z";
        else if (i > 1) s += "z^" + std::to_string(i);
    }
    return s;
}

} // namespace cim
