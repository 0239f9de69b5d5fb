#include "cim/cycles.hpp"

#include <set>

#include "cim/slice.hpp"

namespace cim {

int default_cycle_cap(const IntervalGraph& g) {
    return 2 * std::min(g.h_count(), g.v_count());
}

std::vector<Cycle> enumerate_cycles(const IntervalGraph& g, int max_len, const Caps& caps) {
    if (max_len < 4 || max_len % 2 != 0)
        fail(ErrorKind::Precondition, "cycle length bound must be even and >= 4");
    std::vector<Cycle> out;
    int H = g.h_count();
    std::vector<bool> usedH(H, false);
    std::vector<bool> usedV(g.v_count(), false);
    std::vector<int> hPath, vPath;

    // Paths rooted at the least h-node of the cycle; other h-nodes must be
    // larger, and the reflection is fixed by v-first < v-last.
    auto record = [&]() {
        if (static_cast<int>(hPath.size()) < 2) return;
        if (vPath.front() > vPath.back()) return;
        Cycle c;
        c.h = hPath;
        c.v = vPath;
        out.push_back(std::move(c));
        if (static_cast<long>(out.size()) > caps.cycle_cap)
            fail(ErrorKind::ResourceCap, "cycle count exceeds cap");
    };

    std::function<void(int, int)> extend = [&](int root, int lastV) {
        // Path so far: root, vPath[0], hPath[1], ..., hPath[k], vPath[k]=lastV.
        if (g.adjacent(root, lastV)) record();
        if (static_cast<int>(hPath.size()) * 2 >= max_len) return;
        for (int h : g.v_neighbors(lastV)) {
            if (h <= root || usedH[h]) continue;
            usedH[h] = true;
            hPath.push_back(h);
            for (int v : g.h_neighbors(h)) {
                if (usedV[v]) continue;
                usedV[v] = true;
                vPath.push_back(v);
                extend(root, v);
                vPath.pop_back();
                usedV[v] = false;
            }
            hPath.pop_back();
            usedH[h] = false;
        }
    };

    for (int s = 0; s < H; ++s) {
        usedH[s] = true;
        hPath.push_back(s);
        for (int v : g.h_neighbors(s)) {
            usedV[v] = true;
            vPath.push_back(v);
            extend(s, v);
            vPath.pop_back();
            usedV[v] = false;
        }
        hPath.pop_back();
        usedH[s] = false;
    }

    for (auto& c : out) {
        int r = static_cast<int>(c.h.size());
        bool chord = false;
        for (int a = 0; a < r && !chord; ++a) {
            for (int b = 0; b < r && !chord; ++b) {
                // Consecutive pairs on the cycle are (h[b], v[b]) and (h[b+1], v[b]).
                if (a == b || a == (b + 1) % r) continue;
                if (g.adjacent(c.h[a], c.v[b])) chord = true;
            }
        }
        c.chordless = !chord;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cycle> enumerate_chordless_cycles(const IntervalGraph& g, int max_len, const Caps& caps) {
    std::vector<Cycle> all = enumerate_cycles(g, max_len, caps);
    std::vector<Cycle> out;
    for (auto& c : all)
        if (c.chordless) out.push_back(std::move(c));
    return out;
}

Polynomial cycle_binomial(const Cycle& sigma, const IntervalGraph& g, const Ring& ring) {
    int r = static_cast<int>(sigma.h.size());
    Monomial first = Monomial::unit(ring);
    Monomial second = Monomial::unit(ring);
    for (int k = 0; k < r; ++k) {
        first = first * Monomial::var(ring, ring.index_of(g.label(sigma.h[k], sigma.v[k])));
        second = second * Monomial::var(ring, ring.index_of(g.label(sigma.h[(k + 1) % r], sigma.v[k])));
    }
    return Polynomial::term(first, 1) - Polynomial::term(second, 1);
}

ToricIdeal toric_ideal(const MinorCollection& c, RingPtr ring, int max_len, const Caps& caps) {
    IntervalGraph g(c);
    if (c.empty()) return {Ideal(std::move(ring), {}), true};
    int bound = default_cycle_cap(g);
    bool complete = true;
    if (max_len > 0 && max_len < bound) {
        bound = std::max(4, max_len - max_len % 2);
        complete = false;
    }
    std::vector<Polynomial> gens;
    for (const auto& sigma : enumerate_chordless_cycles(g, bound, caps))
        gens.push_back(cycle_binomial(sigma, g, *ring));
    return {Ideal(std::move(ring), std::move(gens)), complete};
}

int toric_kernel_dimension(const MinorCollection& c, const Ring& ring, int d, const Caps& caps) {
    IntervalGraph g(c);
    int H = g.h_count();
    std::vector<int> hOf(ring.cell_count()), vOf(ring.cell_count());
    for (int i = 0; i < ring.cell_count(); ++i) {
        hOf[i] = g.h_node_of(ring.cell_at(i));
        vOf[i] = g.v_node_of(ring.cell_at(i));
    }
    std::set<std::vector<int>> images;
    auto all = monomials_of_degree(ring, d, caps.memory_cap);
    for (const auto& m : all) {
        std::vector<int> img(H + g.v_count(), 0);
        for (int i = 0; i < ring.cell_count(); ++i) {
            img[hOf[i]] += m.exp(i);
            img[H + vOf[i]] += m.exp(i);
        }
        images.insert(std::move(img));
    }
    return static_cast<int>(all.size() - images.size());
}

} // namespace cim
