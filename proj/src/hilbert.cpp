#include "cim/hilbert.hpp"

#include <algorithm>
#include <functional>

namespace cim {

namespace {

// Minimal generating set: drop monomials divisible by another generator.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree() || (a.degree() == b.degree() && a < b);
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

UniPoly numerator_rec(std::vector<Monomial> gens, long& budget) {
    if (--budget < 0) fail(ErrorKind::ResourceCap, "Hilbert recursion exceeded cap");
    if (gens.empty()) return UniPoly::one();
    for (const auto& g : gens)
        if (g.is_unit()) return UniPoly::zero();

    // Pairwise coprime generators: product of (1 - z^deg).
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        UniPoly p = UniPoly::one();
        for (const auto& g : gens) p = p * (UniPoly::one() - UniPoly::z(g.degree()));
        return p;
    }

    // Pivot on the most frequent variable among generator supports.
    int nvars = gens.front().nvars();
    std::vector<int> freq(nvars, 0);
    for (const auto& g : gens)
        for (int v = 0; v < nvars; ++v)
            if (g.exp(v) > 0) ++freq[v];
    int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    // I + (x): generators not divisible by x survive, plus x itself.
    std::vector<Monomial> plus;
    for (const auto& g : gens)
        if (g.exp(pivot) == 0) plus.push_back(g);
    {
        std::vector<int> e(nvars, 0);
        e[pivot] = 1;
        plus.push_back(Monomial(std::move(e)));
    }

    // I : x: divide each generator by x once where possible.
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
        if (g.exp(pivot) > 0) {
            std::vector<int> e = g.exps();
            e[pivot] -= 1;
            colon.push_back(Monomial(std::move(e)));
        } else {
            colon.push_back(g);
        }
    }

    UniPoly a = numerator_rec(minimalize(std::move(plus)), budget);
    UniPoly b = numerator_rec(minimalize(std::move(colon)), budget);
    return a + UniPoly::z(1) * b;
}

} // namespace

int monomial_ideal_height(const std::vector<Monomial>& gens, int nvars) {
    std::vector<Monomial> mins = minimalize(gens);
    if (mins.empty()) return 0;
    for (const auto& g : mins)
        if (g.is_unit()) return nvars; // unit ideal: height of the whole ring by convention
    // Minimum hitting set over supports, branch and bound.
    int best = nvars;
    std::function<void(std::size_t, std::vector<bool>&, int)> rec = [&](std::size_t i,
                                                                        std::vector<bool>& chosen,
                                                                        int count) {
        if (count >= best) return;
        while (i < mins.size()) {
            bool hit = false;
            for (int v = 0; v < nvars && !hit; ++v)
                if (mins[i].exp(v) > 0 && chosen[v]) hit = true;
            if (!hit) break;
            ++i;
        }
        if (i == mins.size()) {
            best = std::min(best, count);
            return;
        }
        for (int v = 0; v < nvars; ++v) {
            if (mins[i].exp(v) == 0) continue;
            chosen[v] = true;
            rec(i + 1, chosen, count + 1);
            chosen[v] = false;
        }
    };
    std::vector<bool> chosen(nvars, false);
    rec(0, chosen, 0);
    return best;
}

Integer HilbertData::value(int d) const {
    // H(d) = sum_k num_k * C(N - 1 + d - k, N - 1)
    Integer s = 0;
    for (int k = 0; k <= numerator.degree(); ++k) {
        if (k > d) break;
        Integer c = numerator.coeff(k);
        if (c == 0) continue;
        Integer binom = 1;
        for (int i = 1; i <= ambient_vars - 1; ++i) {
            binom *= (d - k + i);
            binom /= i;
        }
        if (ambient_vars == 0) binom = (d == k) ? 1 : 0;
        s += c * binom;
    }
    return s;
}

HilbertData hilbert_monomial_quotient(const Ideal& monomial_ideal, const Caps& caps) {
    std::vector<Monomial> gens;
    for (const auto& g : monomial_ideal.gens()) {
        if (!g.is_monomial())
            fail(ErrorKind::Precondition, "generators must be monomials");
        gens.push_back(g.terms().begin()->first);
    }
    int n = monomial_ideal.ring()->size();
    long budget = caps.hilbert_cap;
    HilbertData h;
    h.ambient_vars = n;
    h.numerator = numerator_rec(minimalize(gens), budget);
    int height = monomial_ideal_height(gens, n);
    h.krull_dim = n - height;
    h.reduced_numerator = h.numerator.divide_one_minus_z(n - h.krull_dim);
    return h;
}

HilbertData hilbert_binomial_quotient(const Ideal& ideal, const TermOrder& order, const Caps& caps) {
    if (!ideal.homogeneous()) fail(ErrorKind::Precondition, "ideal must be homogeneous");
    GroebnerBasis gb = buchberger(ideal, order, caps);
    std::vector<Polynomial> lts;
    for (const auto& m : gb.leading_monomials()) lts.push_back(Polynomial::term(m, 1));
    return hilbert_monomial_quotient(Ideal(ideal.ring(), std::move(lts)), caps);
}

UniPoly star_quotient_numerator(int m) {
    return UniPoly::z(1) * UniPoly::one_minus_z_pow(m) + UniPoly::one_minus_z_pow(1);
}

Ideal all_two_minors(int m, int n, int r, int s) {
    std::vector<Cell> cells;
    for (int i = r; i <= m; ++i)
        for (int j = s; j <= n; ++j) cells.push_back({i, j});
    RingPtr ring = make_ring(Ring(std::move(cells)));
    std::vector<Polynomial> gens;
    for (int i = r; i <= m; ++i)
        for (int k = i + 1; k <= m; ++k)
            for (int j = s; j <= n; ++j)
                for (int l = j + 1; l <= n; ++l)
                    gens.push_back(minor_binomial({i, k, j, l}, *ring));
    return Ideal(std::move(ring), std::move(gens));
}

HilbertSplitReport corner_interval_hilbert_split(int m, int n, const Caps& caps) {
    if (m < 2 || n < 2) fail(ErrorKind::Precondition, "grid must be at least 2 x 2");
    HilbertSplitReport rep;
    rep.m = m;
    rep.n = n;

    MinorCollection c = MinorCollection::full_corner_interval(m, n);
    RingPtr ring = ring_of(c);
    Ideal ic = ideal_of(c, ring);
    rep.lhs = hilbert_binomial_quotient(ic, TermOrder::grevlex(*ring), caps).numerator;

    UniPoly sum = UniPoly::zero();
    for (int t = 1; t <= m - 1; ++t) {
        Ideal minors = all_two_minors(m, n, t, 1);
        UniPoly hp = hilbert_binomial_quotient(minors, TermOrder::grevlex(*minors.ring()), caps).numerator;
        sum = sum + hp * UniPoly::z(1) * UniPoly::one_minus_z_pow(n * (t - 1));
    }
    UniPoly common = sum + UniPoly::one_minus_z_pow(m);
    rep.rhs = common + UniPoly::z(1) * UniPoly::one_minus_z_pow((m - 1) * (n - 1));
    rep.rhs_adjusted = common + UniPoly::z(1) * UniPoly::one_minus_z_pow(n * (m - 1));
    rep.matches = rep.lhs == rep.rhs;
    rep.matches_adjusted = rep.lhs == rep.rhs_adjusted;
    return rep;
}

} // namespace cim
