#ifndef CIM_MONOMIAL_HPP
#define CIM_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cim/ring.hpp"

namespace cim {

// Exponent vector over a fixed ring. Dense: rings here are small.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    static Monomial unit(const Ring& r) { return Monomial(r.size()); }

    static Monomial var(const Ring& r, int index, int e = 1) {
        Monomial m(r.size());
        m.exps_[index] = e;
        return m;
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exp(int v) const { return exps_[v]; }
    const std::vector<int>& exps() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
        return m;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // this / o; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= o.exps_[i];
        return m;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::max(m.exps_[i], o.exps_[i]);
        return m;
    }

    Monomial gcd(const Monomial& o) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::min(m.exps_[i], o.exps_[i]);
        return m;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    int exp_max_of(int v) const { return exps_[v]; }

    Monomial without_var(int v) const {
        Monomial m = *this;
        m.exps_[v] = 0;
        return m;
    }

    // Order-independent canonical comparison (container key).
    auto operator<=>(const Monomial& o) const = default;

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (int e : exps_) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }

    std::string str(const Ring& r) const {
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += r.var_name(static_cast<int>(i));
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    std::vector<int> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace cim

#endif
