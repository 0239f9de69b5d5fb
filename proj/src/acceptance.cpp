#include "cim/acceptance.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "cim/betti.hpp"
#include "cim/cycles.hpp"
#include "cim/fibers.hpp"
#include "cim/hilbert.hpp"
#include "cim/primes.hpp"
#include "cim/random.hpp"
#include "cim/slice.hpp"

namespace cim {

std::string sample_collection_json() {
    return R"({"m":4,"n":4,"minors":[[1,2,1,2],[2,3,1,3],[1,3,1,4],[3,4,1,2]]})";
}

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }

    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

MinorCollection random_corner_interval_collection(Rng& rng, int max_cells) {
    for (;;) {
        int m = 2 + rng.below(3);
        int n = 2 + rng.below(3);
        int count = 1 + rng.below(4);
        std::set<Minor> ms;
        for (int i = 0; i < count; ++i) {
            int a1 = 1 + rng.below(m - 1);
            int a2 = a1 + 1 + rng.below(m - a1);
            int b2 = 2 + rng.below(n - 1);
            ms.insert({a1, a2, 1, b2});
        }
        MinorCollection c(m, n, std::vector<Minor>(ms.begin(), ms.end()));
        if (static_cast<int>(c.cells().size()) <= max_cells) return c;
    }
}

MinorCollection random_corner_collection(Rng& rng, int m, int n) {
    for (;;) {
        std::vector<Minor> all = MinorCollection::full_corner(m, n).minors();
        std::vector<Minor> chosen;
        for (const auto& d : all)
            if (rng.coin()) chosen.push_back(d);
        if (!chosen.empty()) return MinorCollection(m, n, std::move(chosen));
    }
}

ContingencyTable random_table(Rng& rng, const MinorCollection& c, int lo, int hi) {
    std::map<Cell, long> vals;
    for (const auto& cell : c.cells()) vals[cell] = lo + rng.below(hi - lo + 1);
    return ContingencyTable(std::move(vals));
}

// Margin-preserving scramble by arbitrary 2-minor moves supported on V(C).
ContingencyTable scramble(Rng& rng, const MinorCollection& c, const ContingencyTable& start, int steps) {
    std::vector<Minor> moves;
    for (int i = 1; i <= c.rows(); ++i)
        for (int k = i + 1; k <= c.rows(); ++k)
            for (int j = 1; j <= c.cols(); ++j)
                for (int l = j + 1; l <= c.cols(); ++l) {
                    Minor d{i, k, j, l};
                    bool ok = true;
                    for (const auto& v : d.vertices())
                        if (!c.has_cell(v)) { ok = false; break; }
                    if (ok) moves.push_back(d);
                }
    ContingencyTable cur = start;
    if (moves.empty()) return cur;
    for (int s = 0; s < steps; ++s) {
        const Minor& d = moves[rng.below(static_cast<int>(moves.size()))];
        int sign = rng.coin() ? 1 : -1;
        std::map<Cell, long> vals = cur.values();
        vals[{d.a1, d.b1}] += sign;
        vals[{d.a2, d.b2}] += sign;
        vals[{d.a1, d.b2}] -= sign;
        vals[{d.a2, d.b1}] -= sign;
        bool ok = true;
        for (const auto& [cell, v] : vals)
            if (v < 0) { ok = false; break; }
        if (ok) cur = ContingencyTable(std::move(vals));
    }
    return cur;
}

// In-fiber walk using only the collection's own moves.
ContingencyTable walk(Rng& rng, const MoveBasis& basis, const ContingencyTable& start, int steps) {
    ContingencyTable cur = start;
    for (int s = 0; s < steps && !basis.moves.empty(); ++s) {
        const Move& mv = basis.moves[rng.below(static_cast<int>(basis.moves.size()))];
        int sign = rng.coin() ? 1 : -1;
        std::map<Cell, long> vals = cur.values();
        bool ok = true;
        for (const auto& [cell, d] : mv.delta) {
            vals[cell] += sign * d;
            if (vals[cell] < 0) ok = false;
        }
        if (ok) cur = ContingencyTable(std::move(vals));
    }
    return cur;
}

// ---- criteria ----

Check sample_reproduction(const Caps& caps) {
    Check ck;
    MinorCollection c = parse_collection(sample_collection_json());
    RingPtr ring = ring_of(c);
    Ideal ic = ideal_of(c, ring);
    ck.require(ic.gens().size() == 4, "expected 4 generators");

    auto binom = [&](Cell p, Cell q, Cell r, Cell s) {
        return Polynomial::term(Monomial::var(*ring, ring->index_of(p)) *
                                    Monomial::var(*ring, ring->index_of(q)),
                                1) -
               Polynomial::term(Monomial::var(*ring, ring->index_of(r)) *
                                    Monomial::var(*ring, ring->index_of(s)),
                                1);
    };
    std::vector<Polynomial> expected = {
        binom({1, 2}, {2, 1}, {1, 1}, {2, 2}),
        binom({2, 3}, {3, 1}, {2, 1}, {3, 3}),
        binom({1, 4}, {3, 1}, {1, 1}, {3, 4}),
        binom({3, 2}, {4, 1}, {3, 1}, {4, 2}),
    };
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : ic.gens())
            if (g.proportional(e)) { found = true; break; }
        ck.require(found, "missing generator " + e.str(*ring, TermOrder::grevlex(*ring)));
    }

    auto dec = interval_decomposition(c);
    ck.require(dec.vertical.size() == 5, "expected 5 vertical intervals, got " +
                                             std::to_string(dec.vertical.size()));
    ck.require(dec.horizontal.size() == 4, "expected 4 horizontal intervals, got " +
                                               std::to_string(dec.horizontal.size()));

    ToricIdeal toric = toric_ideal(c, ring, -1, caps);
    ck.require(toric.complete, "cycle enumeration truncated");
    Polynomial extra = binom({1, 2}, {2, 3}, {1, 4}, {2, 2});
    // x12*x23*x34 - x14*x22*x33
    extra = Polynomial::term(Monomial::var(*ring, ring->index_of({1, 2})) *
                                 Monomial::var(*ring, ring->index_of({2, 3})) *
                                 Monomial::var(*ring, ring->index_of({3, 4})),
                             1) -
            Polynomial::term(Monomial::var(*ring, ring->index_of({1, 4})) *
                                 Monomial::var(*ring, ring->index_of({2, 2})) *
                                 Monomial::var(*ring, ring->index_of({3, 3})),
                             1);
    ck.require(ideal_equals(toric.ideal, ic.plus(extra), caps),
               "toric ideal differs from the binomial ideal plus the 6-cycle binomial");
    return ck;
}

Check saturation_identity(const Caps& caps) {
    Check ck;
    std::vector<MinorCollection> suite;
    suite.push_back(parse_collection(sample_collection_json()));
    Rng rng(20240811);
    for (int i = 0; i < 10; ++i) suite.push_back(random_corner_interval_collection(rng, 12));
    int k = 0;
    for (const auto& c : suite) {
        RingPtr ring = ring_of(c);
        Ideal sat = saturate_all_cells(ideal_of(c, ring), caps);
        Ideal jc = toric_ideal(c, ring, -1, caps).ideal;
        ck.require(ideal_equals(sat, jc, caps),
                   "saturation mismatch on suite collection " + std::to_string(k));
        ++k;
    }
    ck.note(std::to_string(k) + " collections checked");
    return ck;
}

Check prime_component_example(const Caps& caps) {
    Check ck;
    MinorCollection c = parse_collection(sample_collection_json());
    RingPtr ring = ring_of(c);
    AdmissibleSet w{{Cell{1, 2}, Cell{2, 2}}};
    PrimeComponent p = prime_component(c, w, ring, caps);
    auto var = [&](int i, int j) { return Polynomial::variable(*ring, ring->index_of({i, j})); };
    auto mono2 = [&](Cell a, Cell b) {
        return Polynomial::term(
            Monomial::var(*ring, ring->index_of(a)) * Monomial::var(*ring, ring->index_of(b)), 1);
    };
    std::vector<Polynomial> expected = {
        var(1, 2),
        var(2, 2),
        mono2({2, 3}, {3, 1}) - mono2({2, 1}, {3, 3}),
        mono2({1, 4}, {3, 1}) - mono2({1, 1}, {3, 4}),
        mono2({3, 2}, {4, 1}) - mono2({3, 1}, {4, 2}),
    };
    ck.require(p.ideal.gens().size() == expected.size(),
               "expected 5 generators, got " + std::to_string(p.ideal.gens().size()));
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : p.ideal.gens())
            if (g.proportional(e)) { found = true; break; }
        ck.require(found, "missing generator " + e.str(*ring, TermOrder::grevlex(*ring)));
    }
    return ck;
}

Check variable_primes_contain_corner(const Caps& caps) {
    Check ck;
    for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 4}}) {
        MinorCollection c = MinorCollection::full_corner(m, n);
        RingPtr ring = ring_of(c);
        MinimalPrimesOptions opts;
        opts.corner_shortcut = false; // the claim must hold without pruning
        auto mins = minimal_primes(c, ring, caps, opts);
        int nonempty = 0;
        for (const auto& p : mins) {
            if (p.w.empty()) continue;
            ++nonempty;
            ck.require(p.w.contains({1, 1}),
                       "component without the corner cell on " + std::to_string(m) + "x" + std::to_string(n));
            ck.require(p.variables_only(),
                       "nonempty component not generated by variables on " + std::to_string(m) + "x" +
                           std::to_string(n));
        }
        ck.require(nonempty > 0, "no nonempty minimal components found");
        ck.note(std::to_string(m) + "x" + std::to_string(n) + ": " + std::to_string(mins.size()) +
                " minimal primes, " + std::to_string(nonempty) + " with variables");
    }
    return ck;
}

Check radicality(const Caps& caps) {
    Check ck;
    for (int n = 2; n <= 5; ++n) {
        MinorCollection c = MinorCollection::full_corner(2, n);
        ck.require(is_radical_corner(c, caps), "full 2x" + std::to_string(n) + " should be radical");
    }
    for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 3}, std::pair{4, 4}}) {
        MinorCollection c = MinorCollection::full_corner(m, n);
        ck.require(!is_radical_corner(c, caps),
                   "full " + std::to_string(m) + "x" + std::to_string(n) + " should not be radical");
    }

    // Graph verdict vs the ideal-theoretic witness on every small input.
    std::vector<MinorCollection> suite;
    for (int n = 2; n <= 5; ++n) suite.push_back(MinorCollection::full_corner(2, n));
    suite.push_back(MinorCollection::full_corner(3, 3));
    suite.push_back(MinorCollection::full_corner(3, 4));
    suite.push_back(MinorCollection::full_corner(4, 3));
    suite.push_back(MinorCollection(3, 3, {{1, 2, 1, 2}}));
    Rng rng(1530);
    while (suite.size() < 14) {
        MinorCollection c = random_corner_collection(rng, 2 + rng.below(2), 2 + rng.below(2));
        if (static_cast<int>(c.cells().size()) <= 12) suite.push_back(c);
    }
    int idx = 0;
    for (const auto& c : suite) {
        if (static_cast<int>(c.cells().size()) > 12) continue;
        RingPtr ring = ring_of(c);
        bool graph = is_radical_corner(c, caps);
        bool alg = ideal_equals(radical_witness(c, ring, caps), ideal_of(c, ring), caps);
        ck.require(graph == alg, "verdict mismatch on suite input " + std::to_string(idx));
        ++idx;
    }
    ck.note(std::to_string(idx) + " witness cross-checks");
    return ck;
}

Check decomposition_identities(const Caps& caps) {
    Check ck;
    MinorCollection c = MinorCollection::full_corner(3, 3);
    DecompositionReport rep = decomposition_check(c, 6, caps);
    int failed = 0;
    for (const auto& chk : rep.checks)
        if (!chk.pass) ++failed;
    ck.require(rep.all_pass, std::to_string(failed) + " identity checks failed");
    ck.note(std::to_string(rep.checks.size()) + " identity/degree checks");
    return ck;
}

Check cycle_membership_dichotomy(const Caps& caps) {
    Check ck;
    MinorCollection c = MinorCollection::full_corner(3, 3);
    RingPtr ring = ring_of(c);
    Ideal ic = ideal_of(c, ring);
    GroebnerBasis gb = buchberger(ic, TermOrder::grevlex(*ring), caps);
    IntervalGraph g(c);
    int h1 = g.h_node_of({1, 1});
    int v1 = g.v_node_of({1, 1});
    auto cycles = enumerate_cycles(g, default_cycle_cap(g), caps);
    ck.require(cycles.size() == 15, "expected 15 cycles in the complete 3+3 interval graph, got " +
                                        std::to_string(cycles.size()));
    Polynomial x11 = Polynomial::variable(*ring, ring->index_of({1, 1}));
    int avoided = 0;
    for (const auto& sigma : cycles) {
        Polynomial f = cycle_binomial(sigma, g, *ring);
        bool meets = sigma.meets_h(h1) || sigma.meets_v(v1);
        bool member = gb.contains(x11 * f);
        ck.require(member == meets, "first-power membership disagrees with the interval condition");
        ck.require(gb.contains(x11 * x11 * f), "second power should always lie in the ideal");
        if (!meets) ++avoided;
    }
    ck.require(avoided == 1, "expected exactly one cycle avoiding both corner intervals");
    return ck;
}

Check corner_interval_basis(const Caps& caps) {
    Check ck;
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
        MinorCollection c = MinorCollection::full_corner_interval(m, n);
        RingPtr ring = ring_of(c);
        TermOrder order = TermOrder::grevlex(*ring);

        // The stated basis: the minors plus x_{r1} times the 2-minors of
        // the lower-right submatrices starting at column 2.
        std::vector<Polynomial> basis;
        for (const auto& d : c.minors()) basis.push_back(minor_binomial(d, *ring));
        for (int r = 1; r <= m - 1; ++r) {
            Polynomial xr1 = Polynomial::variable(*ring, ring->index_of({r, 1}));
            for (int i = r; i <= m; ++i)
                for (int k = i + 1; k <= m; ++k)
                    for (int j = 2; j <= n; ++j)
                        for (int l = j + 1; l <= n; ++l)
                            basis.push_back(xr1 * minor_binomial({i, k, j, l}, *ring));
        }
        ck.require(is_groebner_basis(basis, order, caps),
                   "stated basis fails the S-pair test on " + std::to_string(m) + "x" + std::to_string(n));

        // Initial ideal: antidiagonals x_{j1}x_{ik} plus the cubes
        // x_{r1}x_{il}x_{kj}.
        std::vector<Monomial> expected;
        for (int i = 1; i <= m; ++i)
            for (int jj = i + 1; jj <= m; ++jj)
                for (int k = 2; k <= n; ++k)
                    expected.push_back(Monomial::var(*ring, ring->index_of({jj, 1})) *
                                       Monomial::var(*ring, ring->index_of({i, k})));
        for (int r = 1; r <= m - 1; ++r)
            for (int i = r; i <= m; ++i)
                for (int k = i + 1; k <= m; ++k)
                    for (int j = 2; j <= n; ++j)
                        for (int l = j + 1; l <= n; ++l)
                            expected.push_back(Monomial::var(*ring, ring->index_of({r, 1})) *
                                               Monomial::var(*ring, ring->index_of({i, l})) *
                                               Monomial::var(*ring, ring->index_of({k, j})));

        GroebnerBasis gb = buchberger(ideal_of(c, ring), order, caps);
        std::vector<Monomial> lts = gb.leading_monomials();
        auto in_ideal = [](const Monomial& mm, const std::vector<Monomial>& gens) {
            for (const auto& g : gens)
                if (g.divides(mm)) return true;
            return false;
        };
        bool match = true;
        for (const auto& lt : lts)
            if (!in_ideal(lt, expected)) match = false;
        for (const auto& e : expected)
            if (!in_ideal(e, lts)) match = false;
        ck.require(match, "initial ideal differs from the stated description on " + std::to_string(m) +
                              "x" + std::to_string(n));
    }
    return ck;
}

Check hilbert_split(const Caps& caps) {
    Check ck;
    int verbatim = 0, adjusted = 0;
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            HilbertSplitReport rep = corner_interval_hilbert_split(m, n, caps);
            if (rep.matches) ++verbatim;
            if (rep.matches_adjusted) ++adjusted;
            ck.require(rep.matches || rep.matches_adjusted,
                       "neither form of the split identity holds at " + std::to_string(m) + "x" +
                           std::to_string(n));
        }
    if (verbatim < 9)
        ck.note("stated tail exponent (m-1)(n-1) fails " + std::to_string(9 - verbatim) +
                "/9 cases: statement/proof index discrepancy; the exact-sequence tail n(m-1) holds " +
                std::to_string(adjusted) + "/9");
    return ck;
}

Check star_numerator(const Caps& caps) {
    Check ck;
    for (int m = 1; m <= 8; ++m) {
        std::vector<Cell> cells;
        for (int j = 1; j <= m + 1; ++j) cells.push_back({1, j});
        RingPtr ring = make_ring(Ring(std::move(cells)));
        std::vector<Polynomial> gens;
        for (int j = 2; j <= m + 1; ++j)
            gens.push_back(Polynomial::term(Monomial::var(*ring, ring->index_of({1, 1})) *
                                                Monomial::var(*ring, ring->index_of({1, j})),
                                            1));
        HilbertData h = hilbert_monomial_quotient(Ideal(ring, std::move(gens)), caps);
        ck.require(h.numerator == star_quotient_numerator(m),
                   "star quotient numerator wrong at m = " + std::to_string(m));
    }
    return ck;
}

Check regularity_values(const Caps& caps) {
    Check ck;
    {
        MinorCollection c = MinorCollection::full_corner(3, 3);
        RingPtr ring = ring_of(c);
        RegularityResult r = regularity_of(ideal_of(c, ring), TermOrder::grevlex(*ring), caps);
        ck.require(r.certified, "corner regularity not certified");
        ck.require(r.regularity == 3,
                   "corner 3x3 regularity = " + std::to_string(r.regularity) + ", expected 3");
    }
    {
        Ideal minors = all_two_minors(3, 3, 1, 1);
        RegularityResult r = regularity_of(minors, TermOrder::grevlex(*minors.ring()), caps);
        ck.require(r.certified, "2-minor regularity not certified");
        ck.require(r.regularity == 2,
                   "2-minor 3x3 regularity = " + std::to_string(r.regularity) + ", expected 2");
    }
    return ck;
}

Check betti_monotonicity(const Caps& caps) {
    Check ck;
    {
        MinorCollection c = parse_collection(sample_collection_json());
        auto dec = interval_decomposition(c);
        // The row-4 interval {x41, x42}.
        const Interval* h = nullptr;
        for (const auto& iv : dec.horizontal)
            if (iv.cells.front().row == 4) h = &iv;
        ck.require(h != nullptr, "row-4 interval not found");
        if (h) {
            BettiCompareReport rep = betti_interval_removal_compare(c, *h, 1, 3, 6, 3, caps);
            ck.require(rep.all_ok, "entrywise comparison fails at t = 1");
            ck.note("t=1 window: " + std::to_string(rep.entries.size()) + " entries");
        }
    }
    {
        MinorCollection c(3, 3, {{1, 2, 1, 2}, {2, 3, 1, 3}});
        auto dec = interval_decomposition(c);
        const Interval* h = nullptr;
        for (const auto& iv : dec.horizontal)
            if (iv.cells.front().row == 1) h = &iv;
        ck.require(h != nullptr, "row-1 interval not found");
        if (h) {
            BettiCompareReport rep = betti_interval_removal_compare(c, *h, 2, 2, 8, 4, caps);
            ck.require(rep.all_ok, "entrywise comparison fails at t = 2");
            ck.note("t=2 window: " + std::to_string(rep.entries.size()) + " entries");
        }
    }
    return ck;
}

Check fiber_ideal_equivalence(const Caps& caps) {
    Check ck;
    Rng rng(777001);
    int instances = 0, connectedSeen = 0, disconnectedSeen = 0, attempts = 0;
    while (instances < 20 && attempts < 400) {
        ++attempts;
        MinorCollection c = random_corner_interval_collection(rng, 9);
        if (c.cells().empty()) continue;
        RingPtr ring = ring_of(c);
        Ideal ic = ideal_of(c, ring);
        GroebnerBasis gb = buchberger(ic, TermOrder::grevlex(*ring), caps);
        MoveBasis basis = move_basis(c);
        ContingencyTable u = random_table(rng, c, 0, 2);
        ContingencyTable v = rng.coin() ? scramble(rng, c, u, 4) : walk(rng, basis, u, 4);
        FiberResult fr = fiber_connected(u, v, basis, 100000);
        if (fr.verdict == FiberVerdict::Unknown) continue;
        bool member = gb.contains(table_difference_binomial(u, v, *ring));
        bool connected = fr.verdict == FiberVerdict::Connected;
        ck.require(connected == member, "walk verdict disagrees with ideal membership");
        (connected ? connectedSeen : disconnectedSeen)++;
        ++instances;
    }
    ck.require(instances == 20, "could not assemble 20 decidable instances");
    ck.require(connectedSeen > 0 && disconnectedSeen > 0, "instances are one-sided");
    ck.note(std::to_string(connectedSeen) + " connected / " + std::to_string(disconnectedSeen) +
            " disconnected");
    return ck;
}

Check certificate_soundness(const Caps& caps) {
    Check ck;
    Rng rng(424242);
    int trials = 0, certified = 0;
    while (trials < 200) {
        MinorCollection c = (trials % 3 == 0) ? MinorCollection::full_corner(3, 3)
                                              : random_corner_collection(rng, 2 + rng.below(2), 3);
        MoveBasis basis = move_basis(c);
        ContingencyTable u = rng.coin() ? random_table(rng, c, 1, 3) : random_table(rng, c, 0, 2);
        ContingencyTable v = rng.coin() ? walk(rng, basis, u, 3) : scramble(rng, c, u, 3);
        CertifyResult cr = certify_connectivity(u, v, c, caps);
        ++trials;
        if (!cr.certified) continue;
        ++certified;
        FiberResult fr = fiber_connected(u, v, basis, caps.bfs_cap);
        ck.require(fr.verdict == FiberVerdict::Connected,
                   "certified pair not connected (trial " + std::to_string(trials) + ")");
    }
    ck.require(certified >= 20, "too few certified instances to be meaningful: " +
                                    std::to_string(certified));
    ck.note(std::to_string(certified) + "/200 certified, all confirmed by walk");
    return ck;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const Caps& caps, std::ostream* log) {
    using Clock = std::chrono::steady_clock;
    std::vector<std::pair<std::string, std::function<Check(const Caps&)>>> criteria = {
        {"sample collection: generators, intervals, toric ideal", sample_reproduction},
        {"saturation by all variables equals the toric ideal", saturation_identity},
        {"worked prime component matches", prime_component_example},
        {"nonempty minimal primes contain the corner cell, variables only", variable_primes_contain_corner},
        {"radicality criterion and witness agreement", radicality},
        {"corner decomposition identities through degree 6", decomposition_identities},
        {"corner-cycle membership dichotomy and second powers", cycle_membership_dichotomy},
        {"corner-interval basis and its initial ideal", corner_interval_basis},
        {"first-column split of the quotient numerator", hilbert_split},
        {"star edge ideal quotient numerator", star_numerator},
        {"regularity of the corner and 2-minor quotients", regularity_values},
        {"Betti monotonicity under interval removal", betti_monotonicity},
        {"fiber walk agrees with ideal membership", fiber_ideal_equivalence},
        {"connectivity certificate soundness", certificate_soundness},
    };

    std::vector<CriterionResult> results;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        CriterionResult res;
        res.id = static_cast<int>(k) + 1;
        res.name = criteria[k].first;
        auto t0 = Clock::now();
        try {
            Check ck = criteria[k].second(caps);
            res.pass = ck.pass;
            res.detail = ck.detail.str();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (log) {
            (*log) << (res.pass ? "PASS" : "FAIL") << "  " << res.id << ". " << res.name;
            if (!res.detail.empty()) (*log) << "  [" << res.detail << "]";
            (*log) << "  (" << res.seconds << "s)" << std::endl;
        }
        results.push_back(std::move(res));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace cim
