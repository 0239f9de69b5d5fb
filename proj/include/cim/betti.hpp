#ifndef CIM_BETTI_HPP
#define CIM_BETTI_HPP

#include <map>

#include "cim/collection.hpp"
#include "cim/groebner.hpp"
#include "cim/intervals.hpp"

namespace cim {

// Graded Betti numbers beta_{i,j}(S/I) over the ambient ring.
struct BettiTable {
    std::map<std::pair<int, int>, long> entries; // (i, j) -> beta, nonzero only
    int max_hom = 0;   // homological window actually computed
    int max_deg = 0;   // internal-degree window actually computed
    int max_shift = -1; // j - i window (-1: not shift-limited)
    bool complete = false; // window certified to cover the whole resolution

    long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    int projective_dimension() const {
        int p = 0;
        for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
        return p;
    }

    int regularity() const {
        int r = 0;
        for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
        return r;
    }

    std::string triangle() const; // Macaulay-style text rendering
    std::string json() const;
};

// Minimal Betti numbers of a monomial quotient, from the reduced homology
// of the generator-support complexes at the lcm multidegrees. Complete.
BettiTable betti_monomial(const Ideal& monomial_ideal, const Caps& caps = {});

// Betti numbers of S/I from Koszul homology with exact rational ranks,
// truncated at the given windows. max_shift < 0 means no j-i limit.
BettiTable betti_koszul(const Ideal& ideal, const TermOrder& order, int max_hom, int max_deg,
                        int max_shift = -1, const Caps& caps = {});

struct RegularityResult {
    int regularity = 0;
    bool certified = false;
    BettiTable table;         // of S/I
    BettiTable initial_table; // of S/in(I), when the detour was taken
};

// Castelnuovo-Mumford regularity of S/I. For non-monomial ideals the
// window is closed off by the initial-ideal bound (semicontinuity), so the
// result carries a complete certificate.
RegularityResult regularity_of(const Ideal& ideal, const TermOrder& order, const Caps& caps = {});

struct BettiCompareEntry {
    int i, j;
    long removed;  // beta for the reduced collection
    long original; // beta for the full collection
    bool ok;       // removed <= original
};

struct BettiCompareReport {
    MinorCollection reduced;
    std::vector<BettiCompareEntry> entries;
    bool all_ok = true;
    BettiTable removed_table;
    BettiTable original_table;
};

// Remove every minor meeting the given maximal horizontal interval, raise
// both ideals to the t-th power, and compare Betti tables entrywise on a
// common window.
BettiCompareReport betti_interval_removal_compare(const MinorCollection& c, const Interval& h, int t,
                                                  int max_hom, int max_deg, int max_shift = -1,
                                                  const Caps& caps = {});

} // namespace cim

#endif
