#ifndef CIM_IDEAL_HPP
#define CIM_IDEAL_HPP

#include <vector>

#include "cim/polynomial.hpp"
#include "cim/ring.hpp"

namespace cim {

// A finitely generated ideal in an explicit ambient ring. Generators are
// kept nonzero and deduplicated; the zero ideal has none.
class Ideal {
public:
    Ideal() = default;

    Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            gens_.push_back(std::move(g));
        }
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool homogeneous() const {
        for (const auto& g : gens_)
            if (!g.homogeneous()) return false;
        return true;
    }

    int max_gen_degree() const {
        int d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    Ideal plus(const Ideal& o) const {
        std::vector<Polynomial> gens = gens_;
        gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
        return Ideal(ring_, std::move(gens));
    }

    Ideal plus(const Polynomial& p) const {
        std::vector<Polynomial> gens = gens_;
        gens.push_back(p);
        return Ideal(ring_, std::move(gens));
    }

    // Generator-wise t-th power (products of t generators, deduped).
    Ideal power(int t) const {
        if (t <= 1) return *this;
        Ideal prev = power(t - 1);
        std::vector<Polynomial> gens;
        for (const auto& a : prev.gens())
            for (const auto& b : gens_) gens.push_back(a * b);
        return Ideal(ring_, std::move(gens));
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

} // namespace cim

#endif
