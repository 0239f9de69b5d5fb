#ifndef CIM_POLYNOMIAL_HPP
#define CIM_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cim/config.hpp"
#include "cim/monomial.hpp"
#include "cim/rational.hpp"
#include "cim/term_order.hpp"

namespace cim {

// Sparse polynomial with exact rational coefficients. Terms are kept in a
// canonical (order-independent) map; no zero coefficients are stored.
// Immutable value semantics: every operation returns a fresh polynomial.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    static Polynomial variable(const Ring& r, int v) {
        return term(Monomial::var(r, v), 1);
    }

    static Polynomial constant(const Ring& r, const Rational& c) {
        return term(Monomial::unit(r), c);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    // Pure difference of two monomials with coefficients +1/-1.
    bool pure_difference() const {
        if (terms_.size() != 2) return false;
        auto it = terms_.begin();
        const Rational& a = it->second;
        const Rational& b = std::next(it)->second;
        return (a == 1 && b == -1) || (a == -1 && b == 1);
    }

    bool is_monomial() const { return terms_.size() == 1; }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    Polynomial mul_term(const Monomial& m, const Rational& c) const {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [mm, cc] : terms_) r.terms_[mm * m] = cc * c;
        return r;
    }

    Polynomial operator*(const Rational& c) const {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
        return r;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }
    bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

    // Equal up to a global unit (sign or any nonzero rational multiple).
    bool proportional(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        if (terms_.empty()) return true;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        if (a->first != b->first) return false;
        Rational ratio = b->second / a->second;
        for (; a != terms_.end(); ++a, ++b) {
            if (a->first != b->first || a->second * ratio != b->second) return false;
        }
        return true;
    }

    std::pair<Monomial, Rational> leading_term(const TermOrder& o) const {
        if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (o.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    const Rational& coeff(const Monomial& m) const {
        static const Rational z = 0;
        auto it = terms_.find(m);
        return it == terms_.end() ? z : it->second;
    }

    // Terms rendered in descending order of `o`.
    std::string str(const Ring& r, const TermOrder& o) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, Rational>*> v;
        for (const auto& t : terms_) v.push_back(&t);
        std::sort(v.begin(), v.end(), [&](auto* a, auto* b) { return o.greater(a->first, b->first); });
        std::string s;
        for (auto* t : v) {
            const Rational& c = t->second;
            std::string cs = c.get_str();
            if (s.empty()) {
                if (cs == "1" && !t->first.is_unit()) { }
                else if (cs == "-1" && !t->first.is_unit()) s += "-";
                else { s += cs; if (!t->first.is_unit()) s += "*"; }
            } else if (c > 0) {
                s += " + ";
                if (cs != "1" || t->first.is_unit()) { s += cs; if (!t->first.is_unit()) s += "*"; }
            } else {
                s += " - ";
                std::string mcs = Rational(-c).get_str();
                if (mcs != "1" || t->first.is_unit()) { s += mcs; if (!t->first.is_unit()) s += "*"; }
            }
            if (!t->first.is_unit()) s += t->first.str(r);
        }
        return s;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    Terms terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace cim

#endif
