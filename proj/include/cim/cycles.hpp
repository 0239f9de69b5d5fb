#ifndef CIM_CYCLES_HPP
#define CIM_CYCLES_HPP

#include <vector>

#include "cim/intervals.hpp"

namespace cim {

// An even closed walk h[0], v[0], h[1], v[1], ..., h[r-1], v[r-1], h[0]
// through distinct interval nodes, r >= 2. Canonical form: h[0] is the
// least h-index on the cycle and v[0] < v[r-1].
struct Cycle {
    std::vector<int> h;
    std::vector<int> v;
    bool chordless = false;

    int length() const { return static_cast<int>(h.size()) * 2; }
    auto operator<=>(const Cycle&) const = default;

    bool meets_h(int node) const { return std::find(h.begin(), h.end(), node) != h.end(); }
    bool meets_v(int node) const { return std::find(v.begin(), v.end(), node) != v.end(); }
};

// All cycles of length <= max_len (in vertices; even, >= 4), each once up
// to rotation and reflection, with chordless flags.
std::vector<Cycle> enumerate_cycles(const IntervalGraph& g, int max_len, const Caps& caps = {});

std::vector<Cycle> enumerate_chordless_cycles(const IntervalGraph& g, int max_len, const Caps& caps = {});

// Largest possible cycle length in the bipartite interval graph.
int default_cycle_cap(const IntervalGraph& g);

// f_sigma: the difference of the two alternating edge-label products.
Polynomial cycle_binomial(const Cycle& sigma, const IntervalGraph& g, const Ring& ring);

struct ToricIdeal {
    Ideal ideal;
    bool complete = true; // false if the cycle cap truncated enumeration
};

// The toric ideal of the interval graph's edge ring, generated by the
// binomials of chordless cycles (chords split cycles, so these generate).
ToricIdeal toric_ideal(const MinorCollection& c, RingPtr ring, int max_len = -1, const Caps& caps = {});

// Dimension of the degree-d piece of the kernel of the edge-ring map
// x_cell -> h*v, by counting distinct monomial images. Oracle for the
// toric generators.
int toric_kernel_dimension(const MinorCollection& c, const Ring& ring, int d, const Caps& caps = {});

} // namespace cim

#endif
