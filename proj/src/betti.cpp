#include "cim/betti.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "cim/slice.hpp"

namespace cim {

std::string BettiTable::triangle() const {
    if (entries.empty()) return "(zero)\n";
    int pd = projective_dimension();
    int reg = regularity();
    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= pd; ++i) os << "\t" << i;
    os << "\n";
    for (int r = 0; r <= reg; ++r) {
        os << r << ":";
        for (int i = 0; i <= pd; ++i) {
            long v = at(i, i + r);
            os << "\t" << (v ? std::to_string(v) : ".");
        }
        os << "\n";
    }
    return os.str();
}

std::string BettiTable::json() const {
    nlohmann::json doc;
    auto arr = nlohmann::json::array();
    for (const auto& [ij, v] : entries) arr.push_back({ij.first, ij.second, v});
    doc["entries"] = arr;
    doc["projectiveDimension"] = projective_dimension();
    doc["regularity"] = regularity();
    doc["complete"] = complete;
    return doc.dump();
}

namespace {

// ---- monomial route: reduced homology of generator-support complexes ----

// Rank over Q of the boundary map from size-t subsets to size-(t-1)
// subsets of a simplicial complex given as a face set (bitmasks).
struct FaceComplex {
    // faces[t] = sorted masks with t bits among the allowed ones
    std::vector<std::vector<unsigned>> faces;

    long rank_boundary(int t) const {
        if (t <= 0 || t >= static_cast<int>(faces.size()) || faces[t].empty()) return 0;
        const auto& src = faces[t];
        const auto& dst = faces[t - 1];
        std::map<unsigned, int> dstIdx;
        for (std::size_t i = 0; i < dst.size(); ++i) dstIdx[dst[i]] = static_cast<int>(i);
        RowSpace space(static_cast<int>(dst.size()));
        for (unsigned f : src) {
            SparseRow row;
            int sign = 1;
            for (int v = 0; v < 32; ++v) {
                if (!(f & (1u << v))) continue;
                unsigned sub = f & ~(1u << v);
                row[dstIdx.at(sub)] = sign;
                sign = -sign;
            }
            space.insert(std::move(row));
        }
        return space.dim();
    }
};

std::vector<Monomial> minimal_monomial_gens(const Ideal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) {
        if (!g.is_monomial()) fail(ErrorKind::Precondition, "generators must be monomials");
        gens.push_back(g.terms().begin()->first);
    }
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree() || (a.degree() == b.degree() && a < b);
    });
    std::vector<Monomial> mins;
    for (const auto& g : gens) {
        bool red = false;
        for (const auto& h : mins)
            if (h.divides(g)) { red = true; break; }
        if (!red) mins.push_back(g);
    }
    return mins;
}

} // namespace

BettiTable betti_monomial(const Ideal& monomial_ideal, const Caps& caps) {
    BettiTable table;
    table.complete = true;
    std::vector<Monomial> gens = minimal_monomial_gens(monomial_ideal);
    table.entries[{0, 0}] = 1;
    if (gens.empty()) return table;
    if (static_cast<int>(gens.size()) > 16)
        fail(ErrorKind::MemoryCap, "too many monomial generators for the support-complex route");

    // Join-closure of the generators under lcm.
    std::set<Monomial> lattice(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Monomial> current(lattice.begin(), lattice.end());
        for (const auto& a : current)
            for (const auto& g : gens) {
                Monomial l = a.lcm(g);
                if (lattice.insert(l).second) grew = true;
            }
    }

    int nvars = gens.front().nvars();
    for (const auto& a : lattice) {
        // Vertices: variables present in a. Face T iff x^a / x^T lies in
        // the ideal.
        std::vector<int> vars;
        for (int v = 0; v < nvars; ++v)
            if (a.exp(v) > 0) vars.push_back(v);
        if (static_cast<int>(vars.size()) > 30)
            fail(ErrorKind::MemoryCap, "support too large for the face enumeration");
        FaceComplex K;
        K.faces.assign(vars.size() + 2, {});
        for (unsigned s = 0; s < (1u << vars.size()); ++s) {
            std::vector<int> e = a.exps();
            for (std::size_t p = 0; p < vars.size(); ++p)
                if (s & (1u << p)) e[vars[p]] -= 1;
            Monomial rest(std::move(e));
            bool inIdeal = false;
            for (const auto& g : gens)
                if (g.divides(rest)) { inIdeal = true; break; }
            if (!inIdeal) continue;
            unsigned packed = 0;
            int bits = 0;
            for (std::size_t p = 0; p < vars.size(); ++p)
                if (s & (1u << p)) {
                    packed |= 1u << p;
                    ++bits;
                }
            K.faces[bits].push_back(packed);
        }
        for (auto& level : K.faces) std::sort(level.begin(), level.end());

        int j = a.degree();
        std::vector<long> ranks(vars.size() + 2, 0);
        for (int t = 0; t < static_cast<int>(K.faces.size()); ++t) ranks[t] = K.rank_boundary(t);
        for (int i = 1; i <= static_cast<int>(vars.size()) + 1; ++i) {
            int t = i - 1; // faces of size i-1 carry homological degree i-2
            long count = (t < static_cast<int>(K.faces.size())) ? static_cast<long>(K.faces[t].size()) : 0;
            long rUp = (t + 1 < static_cast<int>(ranks.size())) ? ranks[t + 1] : 0;
            long beta = count - ranks[t] - rUp;
            if (beta > 0) table.entries[{i, j}] += beta;
        }
    }
    for (const auto& [ij, v] : table.entries) {
        table.max_hom = std::max(table.max_hom, ij.first);
        table.max_deg = std::max(table.max_deg, ij.second);
    }
    return table;
}

namespace {

// ---- Koszul route ----

struct LayerElement {
    unsigned mask; // subset of variables
    int mono;      // index into the std-monomial list of this layer's degree
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

int popcount_below(unsigned mask, int k) {
    return __builtin_popcount(mask & ((1u << k) - 1));
}

} // namespace

BettiTable betti_koszul(const Ideal& ideal, const TermOrder& order, int max_hom, int max_deg,
                        int max_shift, const Caps& caps) {
    BettiTable table;
    table.max_hom = max_hom;
    table.max_deg = max_deg;
    table.max_shift = max_shift;

    const Ring& ring = *ideal.ring();
    int N = ring.size();
    if (N > 22) fail(ErrorKind::MemoryCap, "too many variables for the Koszul route");
    int effShift = (max_shift < 0) ? max_deg : max_shift;

    if (ideal.is_zero()) {
        table.entries[{0, 0}] = 1;
        table.complete = true;
        return table;
    }

    GroebnerBasis gb = buchberger(ideal, order, caps);
    std::vector<Monomial> lts = gb.leading_monomials();

    auto is_std = [&](const Monomial& m) {
        for (const auto& lt : lts)
            if (lt.divides(m)) return false;
        return true;
    };

    // Standard monomials per degree s, plus index maps.
    int maxS = std::min(effShift + 1, max_deg);
    std::vector<std::vector<Monomial>> stdMon(maxS + 1);
    std::vector<std::map<Monomial, int>> stdIdx(maxS + 1);
    for (int s = 0; s <= maxS; ++s) {
        for (const auto& m : monomials_of_degree(ring, s, caps.memory_cap))
            if (is_std(m)) {
                stdIdx[s][m] = static_cast<int>(stdMon[s].size());
                stdMon[s].push_back(m);
            }
    }

    // Memoized normal forms of x_k * b.
    std::unordered_map<Monomial, Polynomial, MonomialHash> nfCache;
    auto nf = [&](const Monomial& m) -> const Polynomial& {
        auto it = nfCache.find(m);
        if (it != nfCache.end()) return it->second;
        Polynomial p = normal_form(Polynomial::term(m, 1), gb);
        return nfCache.emplace(m, std::move(p)).first->second;
    };

    // Subsets of [N] by size, shared across degrees.
    std::vector<std::vector<unsigned>> subsets(std::min(max_hom + 1, N) + 1);
    for (unsigned s = 0; s < (1u << N); ++s) {
        int b = __builtin_popcount(s);
        if (b < static_cast<int>(subsets.size())) subsets[b].push_back(s);
    }

    for (int j = 0; j <= max_deg; ++j) {
        int iMax = std::min({max_hom + 1, j, N});
        int iMin = std::max(0, j - (effShift + 1));
        if (iMin > iMax) continue;

        // Enumerate layer elements and give them global ids.
        std::vector<std::vector<LayerElement>> layer(iMax + 1);
        std::vector<long> offset(iMax + 2, 0);
        for (int i = iMin; i <= iMax; ++i) {
            int s = j - i;
            if (s > maxS) continue;
            const auto& monos = stdMon[s];
            if (monos.empty()) continue;
            for (unsigned mask : subsets[i])
                for (int mi = 0; mi < static_cast<int>(monos.size()); ++mi)
                    layer[i].push_back({mask, mi});
        }
        for (int i = 0; i <= iMax; ++i) offset[i + 1] = offset[i] + static_cast<long>(layer[i].size());
        long total = offset[iMax + 1];
        if (total == 0) continue;
        if (total > caps.memory_cap * 10L)
            fail(ErrorKind::MemoryCap, "Koszul layer too large");
        std::vector<int> layerOf(total);
        for (int i = iMin; i <= iMax; ++i)
            for (long id = offset[i]; id < offset[i + 1]; ++id) layerOf[id] = i;

        // Image supports: for each source element, the target ids and
        // rational coefficients of its boundary.
        std::vector<std::vector<std::pair<long, Rational>>> images(total);
        UnionFind uf(static_cast<int>(total));
        for (int i = std::max(iMin + 1, 1); i <= iMax; ++i) {
            if (layer[i].empty() || (j - i + 1) > maxS) continue;
            const auto& tgtIdx = stdIdx[j - i + 1];
            // Target layout: elements were pushed mask-major, monomial-minor.
            long base = offset[i - 1];
            long width = static_cast<long>(stdMon[j - i + 1].size());
            std::map<unsigned, long> maskPos;
            {
                long pos = 0;
                for (unsigned mask : subsets[i - 1]) {
                    maskPos[mask] = pos;
                    pos += width;
                }
            }
            for (long idx = offset[i]; idx < offset[i + 1]; ++idx) {
                const LayerElement& el = layer[i][idx - offset[i]];
                const Monomial& b = stdMon[j - i][el.mono];
                auto& img = images[idx];
                for (int k = 0; k < N; ++k) {
                    if (!(el.mask & (1u << k))) continue;
                    int sign = (popcount_below(el.mask, k) % 2 == 0) ? 1 : -1;
                    const Polynomial& p = nf(Monomial::var(ring, k) * b);
                    unsigned sub = el.mask & ~(1u << k);
                    for (const auto& [m, c] : p.terms()) {
                        long tgt = base + maskPos.at(sub) + tgtIdx.at(m);
                        img.emplace_back(tgt, c * sign);
                        uf.unite(static_cast<int>(idx), static_cast<int>(tgt));
                    }
                }
                // Merge duplicate targets.
                std::sort(img.begin(), img.end(),
                          [](const auto& a, const auto& b2) { return a.first < b2.first; });
                std::vector<std::pair<long, Rational>> merged;
                for (auto& [t, c] : img) {
                    if (!merged.empty() && merged.back().first == t)
                        merged.back().second += c;
                    else
                        merged.emplace_back(t, c);
                }
                merged.erase(std::remove_if(merged.begin(), merged.end(),
                                            [](const auto& e) { return e.second == 0; }),
                             merged.end());
                img = std::move(merged);
            }
        }

        // Group elements by component.
        std::map<int, std::vector<long>> components;
        for (long id = 0; id < total; ++id) components[uf.find(static_cast<int>(id))].push_back(id);

        std::map<int, long> dims;      // per homological degree at this j
        std::map<int, long> rankSums;  // rank of the boundary leaving degree i

        for (auto& [root, ids] : components) {
            // Local target indexing per homological layer.
            std::map<long, int> local;
            std::map<int, int> layerCount;
            for (long id : ids) local[id] = layerCount[layerOf[id]]++;
            for (auto& [i, cnt] : layerCount) dims[i] += cnt;
            // Rank per layer boundary.
            for (int i = std::max(iMin + 1, 1); i <= iMax; ++i) {
                int below = layerCount.count(i - 1) ? layerCount[i - 1] : 0;
                if (!layerCount.count(i) || below == 0) continue;
                RowSpace space(below);
                for (long id : ids) {
                    if (layerOf[id] != i || images[id].empty()) continue;
                    SparseRow row;
                    for (const auto& [tgt, c] : images[id]) row[local.at(tgt)] = c;
                    space.insert(std::move(row));
                }
                rankSums[i] += space.dim();
            }
        }

        for (int i = iMin; i <= std::min(max_hom, iMax); ++i) {
            if (j - i > effShift) continue;
            long beta = (dims.count(i) ? dims[i] : 0) - (rankSums.count(i) ? rankSums[i] : 0) -
                        (rankSums.count(i + 1) ? rankSums[i + 1] : 0);
            if (beta != 0) table.entries[{i, j}] = beta;
        }
    }
    return table;
}

RegularityResult regularity_of(const Ideal& ideal, const TermOrder& order, const Caps& caps) {
    RegularityResult res;
    bool allMonomial = true;
    for (const auto& g : ideal.gens())
        if (!g.is_monomial()) { allMonomial = false; break; }
    if (allMonomial) {
        res.table = betti_monomial(ideal, caps);
        res.regularity = res.table.regularity();
        res.certified = true;
        return res;
    }
    if (!ideal.homogeneous()) fail(ErrorKind::Precondition, "regularity requires a homogeneous ideal");

    GroebnerBasis gb = buchberger(ideal, order, caps);
    std::vector<Polynomial> lts;
    for (const auto& m : gb.leading_monomials()) lts.push_back(Polynomial::term(m, 1));
    res.initial_table = betti_monomial(Ideal(ideal.ring(), std::move(lts)), caps);

    // Upper semicontinuity closes the window: beta_{i,j}(S/I) vanishes
    // wherever beta_{i,j}(S/in I) does, so the initial ideal's projective
    // dimension and regularity bound the search.
    int pdBound = res.initial_table.projective_dimension();
    int regBound = res.initial_table.regularity();
    res.table = betti_koszul(ideal, order, pdBound, pdBound + regBound, regBound, caps);
    res.table.complete = true;
    res.regularity = res.table.regularity();
    res.certified = true;
    return res;
}

BettiCompareReport betti_interval_removal_compare(const MinorCollection& c, const Interval& h, int t,
                                                  int max_hom, int max_deg, int max_shift,
                                                  const Caps& caps) {
    BettiCompareReport rep;
    rep.reduced = c.restrict_away(h.cells);

    RingPtr fullRing = ring_of(c);
    Ideal full = ideal_of(c, fullRing).power(t);
    RingPtr redRing = ring_of(rep.reduced);
    Ideal red = ideal_of(rep.reduced, redRing).power(t);

    rep.original_table = betti_koszul(full, TermOrder::grevlex(*fullRing), max_hom, max_deg, max_shift, caps);
    rep.removed_table = betti_koszul(red, TermOrder::grevlex(*redRing), max_hom, max_deg, max_shift, caps);

    std::set<std::pair<int, int>> keys;
    for (const auto& [ij, v] : rep.original_table.entries) keys.insert(ij);
    for (const auto& [ij, v] : rep.removed_table.entries) keys.insert(ij);
    for (const auto& ij : keys) {
        long orig = rep.original_table.at(ij.first, ij.second);
        long rem = rep.removed_table.at(ij.first, ij.second);
        bool ok = rem <= orig;
        rep.entries.push_back({ij.first, ij.second, rem, orig, ok});
        if (!ok) rep.all_ok = false;
    }
    return rep;
}

} // namespace cim
