#include "cim/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace cim {

namespace {

struct LeadEntry {
    Monomial lm;
    Rational lc;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& o) {
    auto [lmf, lcf] = f.leading_term(o);
    auto [lmg, lcg] = g.leading_term(o);
    Monomial l = lmf.lcm(lmg);
    return f.mul_term(l / lmf, Rational(1) / lcf) - g.mul_term(l / lmg, Rational(1) / lcg);
}

Polynomial divide_full(const Polynomial& p, const std::vector<Polynomial>& gens,
                       const std::vector<LeadEntry>& leads, const TermOrder& o) {
    Polynomial rem;
    Polynomial h = p;
    while (!h.is_zero()) {
        auto [lm, lc] = h.leading_term(o);
        bool reduced = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (leads[i].lm.divides(lm)) {
                h = h - gens[i].mul_term(lm / leads[i].lm, lc / leads[i].lc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            h = h - Polynomial::term(lm, lc);
        }
    }
    return rem;
}

std::vector<LeadEntry> leads_of(const std::vector<Polynomial>& gens, const TermOrder& o) {
    std::vector<LeadEntry> leads;
    leads.reserve(gens.size());
    for (const auto& g : gens) {
        auto [lm, lc] = g.leading_term(o);
        leads.push_back({lm, lc});
    }
    return leads;
}

// Pair queue keyed by (lcm degree, lcm, indices) for the normal strategy
// with deterministic tie-breaks.
using PairKey = std::tuple<int, Monomial, std::size_t, std::size_t>;

PairKey pair_key(std::size_t i, std::size_t j, const std::vector<LeadEntry>& leads) {
    Monomial l = leads[i].lm.lcm(leads[j].lm);
    return {l.degree(), l, i, j};
}

} // namespace

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order, const Caps& caps) {
    std::vector<Polynomial> g = ideal.gens();
    std::vector<LeadEntry> leads = leads_of(g, order);

    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) queue.insert(pair_key(i, j, leads));

    long processed = 0;
    while (!queue.empty()) {
        auto it = queue.begin();
        auto [deg, l, i, j] = *it;
        queue.erase(it);
        done.insert({i, j});
        if (++processed > caps.pair_cap)
            fail(ErrorKind::ResourceCap, "pair queue exceeded cap");
        if (deg > caps.degree_cap)
            fail(ErrorKind::ResourceCap, "S-pair degree " + std::to_string(deg) + " exceeds cap");

        // Coprime leading terms reduce to zero.
        if (leads[i].lm.coprime(leads[j].lm)) continue;
        // Chain criterion: some k with lt(k) | lcm(i,j) and both pairs done.
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!leads[k].lm.divides(l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(g[i], g[j], order);
        Polynomial r = divide_full(s, g, leads, order);
        if (r.is_zero()) continue;
        auto [lm, lc] = r.leading_term(order);
        r = r * (Rational(1) / lc);
        std::size_t idx = g.size();
        g.push_back(r);
        leads.push_back({lm, Rational(1)});
        for (std::size_t k = 0; k < idx; ++k) queue.insert(pair_key(k, idx, leads));
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<Polynomial> minimal;
    std::vector<LeadEntry> minLeads;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!leads[j].lm.divides(leads[i].lm)) continue;
            if (leads[i].lm == leads[j].lm && i < j) continue; // keep the first of equals
            redundant = true;
        }
        if (!redundant) {
            minimal.push_back(g[i] * (Rational(1) / leads[i].lc));
            minLeads.push_back({leads[i].lm, Rational(1)});
        }
    }

    // Tail-reduce each element against the others.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<LeadEntry> otherLeads;
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j == i) continue;
                others.push_back(minimal[j]);
                otherLeads.push_back(minLeads[j]);
            }
            Polynomial r = divide_full(minimal[i], others, otherLeads, order);
            if (r != minimal[i]) {
                auto [lm, lc] = r.leading_term(order);
                minimal[i] = r * (Rational(1) / lc);
                minLeads[i] = {lm, Rational(1)};
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_term(order).first, b.leading_term(order).first);
    });
    return GroebnerBasis(order, std::move(minimal), ideal);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    return divide_full(p, gb.elements(), leads_of(gb.elements(), gb.order()), gb.order());
}

Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& gens, const TermOrder& order) {
    return divide_full(p, gens, leads_of(gens, order), order);
}

bool GroebnerBasis::contains(const Polynomial& p) const {
    return normal_form(p, *this).is_zero();
}

bool is_groebner_basis(const std::vector<Polynomial>& gens, const TermOrder& order, const Caps& caps) {
    auto leads = leads_of(gens, order);
    long processed = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (leads[i].lm.coprime(leads[j].lm)) continue;
            if (++processed > caps.pair_cap) fail(ErrorKind::ResourceCap, "pair count exceeded cap");
            Polynomial s = s_polynomial(gens[i], gens[j], order);
            if (!divide_full(s, gens, leads, order).is_zero()) return false;
        }
    }
    return true;
}

bool membership(const Polynomial& p, const Ideal& ideal, const Caps& caps) {
    if (p.is_zero()) return true;
    if (ideal.is_zero()) return false;
    GroebnerBasis gb = buchberger(ideal, TermOrder::grevlex(*ideal.ring()), caps);
    return gb.contains(p);
}

Ideal saturate_by_variable(const Ideal& ideal, int v, const Caps& caps) {
    if (ideal.is_zero()) return ideal;
    // Reduced grevlex basis with x_v revlex-smallest: dividing each element
    // by its x_v content generates the saturation (the ideal is homogeneous).
    GroebnerBasis gb = buchberger(ideal, TermOrder::grevlex_smallest(*ideal.ring(), v), caps);
    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements()) {
        int k = -1;
        for (const auto& [m, c] : g.terms()) {
            int e = m.exp(v);
            k = (k < 0) ? e : std::min(k, e);
        }
        if (k <= 0) {
            gens.push_back(g);
            continue;
        }
        Monomial dv = Monomial::var(*ideal.ring(), v, k);
        Polynomial h;
        for (const auto& [m, c] : g.terms()) h.add_term(m / dv, c);
        gens.push_back(h);
    }
    return Ideal(ideal.ring(), std::move(gens));
}

Ideal saturate_all_cells(const Ideal& ideal, const Caps& caps) {
    Ideal cur = ideal;
    for (int v = 0; v < ideal.ring()->cell_count(); ++v) cur = saturate_by_variable(cur, v, caps);
    return cur;
}

Ideal intersect(const Ideal& a, const Ideal& b, const Caps& caps) {
    if (!a.ring()->same_vars(*b.ring())) fail(ErrorKind::Precondition, "intersect: ambient rings differ");
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    RingPtr ext = make_ring(a.ring()->with_aux({"t"}));
    int tVar = ext->aux_index(0);
    auto extend = [&](const Polynomial& p) {
        Polynomial q;
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> e = m.exps();
            e.push_back(0);
            q.add_term(Monomial(std::move(e)), c);
        }
        return q;
    };
    Polynomial t = Polynomial::variable(*ext, tVar);
    Polynomial oneMinusT = Polynomial::constant(*ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(t * extend(f));
    for (const auto& g : b.gens()) gens.push_back(oneMinusT * extend(g));
    TermOrder elim = TermOrder::eliminate_aux(*ext, TermOrder::grevlex(*ext));
    Caps relaxed = caps;
    relaxed.degree_cap = caps.degree_cap + 1; // the tag adds one degree
    GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), elim, relaxed);
    std::vector<Polynomial> result;
    for (const auto& g : gb.elements()) {
        bool hasT = false;
        for (const auto& [m, c] : g.terms())
            if (m.exp(tVar) > 0) { hasT = true; break; }
        if (hasT) continue;
        Polynomial p;
        for (const auto& [m, c] : g.terms()) {
            std::vector<int> e = m.exps();
            e.pop_back();
            p.add_term(Monomial(std::move(e)), c);
        }
        result.push_back(p);
    }
    return Ideal(a.ring(), std::move(result));
}

bool ideal_equals(const Ideal& a, const Ideal& b, const Caps& caps) {
    if (!a.homogeneous() || !b.homogeneous())
        fail(ErrorKind::Precondition, "ideal_equals requires homogeneous ideals");
    if (!a.ring()->same_vars(*b.ring())) fail(ErrorKind::Precondition, "ideal_equals: ambient rings differ");
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return false;
    GroebnerBasis ga = buchberger(a, TermOrder::grevlex(*a.ring()), caps);
    GroebnerBasis gbb = buchberger(b, TermOrder::grevlex(*b.ring()), caps);
    for (const auto& f : a.gens())
        if (!gbb.contains(f)) return false;
    for (const auto& g : b.gens())
        if (!ga.contains(g)) return false;
    return true;
}

} // namespace cim
