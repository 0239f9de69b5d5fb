#ifndef CIM_TERM_ORDER_HPP
#define CIM_TERM_ORDER_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "cim/monomial.hpp"
#include "cim/ring.hpp"

namespace cim {

enum class OrderKind {
    Lex,      // first difference at the most significant variable decides
    GrevLex,  // total degree, then reverse-lexicographic tie-break
};

// A monomial order over a fixed ring: a comparator kind, a significance
// permutation of the variables, and an optional leading elimination block
// (block variables are compared first, by degree then grevlex, so any
// polynomial whose leading term avoids the block avoids it entirely).
class TermOrder {
public:
    TermOrder() = default;

    // `ascending` lists variable indices from least to most significant.
    TermOrder(OrderKind kind, std::vector<int> ascending, std::vector<bool> block = {})
        : kind_(kind), ascending_(std::move(ascending)), block_(std::move(block)) {
        if (block_.empty()) block_.assign(ascending_.size(), false);
        has_block_ = std::any_of(block_.begin(), block_.end(), [](bool b) { return b; });
    }

    // Graded revlex with the ring's row-major variable list ascending,
    // x[1,1] least significant. This is the column-anchored order used for
    // the corner-interval Groebner bases here.
    static TermOrder grevlex(const Ring& r) {
        std::vector<int> asc(r.size());
        for (int i = 0; i < r.size(); ++i) asc[i] = i;
        return TermOrder(OrderKind::GrevLex, std::move(asc));
    }

    // Lex with x[1,1] most significant ("diagonal" order: the diagonal of a
    // 2-minor leads).
    static TermOrder lex(const Ring& r) {
        std::vector<int> asc(r.size());
        for (int i = 0; i < r.size(); ++i) asc[i] = r.size() - 1 - i;
        return TermOrder(OrderKind::Lex, std::move(asc));
    }

    // Graded revlex in which variable v is the revlex-smallest; used for
    // saturation by v.
    static TermOrder grevlex_smallest(const Ring& r, int v) {
        std::vector<int> asc;
        asc.push_back(v);
        for (int i = 0; i < r.size(); ++i)
            if (i != v) asc.push_back(i);
        return TermOrder(OrderKind::GrevLex, std::move(asc));
    }

    // Elimination order for the ring's aux variables on top of `base`.
    static TermOrder eliminate_aux(const Ring& r, const TermOrder& base) {
        std::vector<bool> block(r.size(), false);
        for (int k = 0; k < r.aux_count(); ++k) block[r.aux_index(k)] = true;
        std::vector<int> asc = base.ascending_;
        for (int k = 0; k < r.aux_count(); ++k) asc.push_back(r.aux_index(k));
        return TermOrder(base.kind_, std::move(asc), std::move(block));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<int>& ascending() const { return ascending_; }
    bool has_block() const { return has_block_; }
    bool in_block(int v) const { return block_[v]; }

    // <0, 0, >0 like a three-way comparison of u vs v.
    int compare(const Monomial& u, const Monomial& v) const {
        if (has_block_) {
            int c = compare_masked(u, v, true, OrderKind::GrevLex);
            if (c != 0) return c;
            return compare_masked(u, v, false, kind_);
        }
        return compare_all(u, v, kind_);
    }

    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

private:
    int compare_all(const Monomial& u, const Monomial& v, OrderKind k) const {
        if (k == OrderKind::GrevLex) {
            int du = u.degree(), dv = v.degree();
            if (du != dv) return du < dv ? -1 : 1;
            // Ascending scan; the first variable where they differ decides:
            // more of a less-significant variable means smaller.
            for (int var : ascending_) {
                int d = u.exp(var) - v.exp(var);
                if (d != 0) return d > 0 ? -1 : 1;
            }
            return 0;
        }
        for (auto it = ascending_.rbegin(); it != ascending_.rend(); ++it) {
            int d = u.exp(*it) - v.exp(*it);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    int compare_masked(const Monomial& u, const Monomial& v, bool inBlock, OrderKind k) const {
        if (k == OrderKind::GrevLex) {
            int du = 0, dv = 0;
            for (std::size_t i = 0; i < block_.size(); ++i)
                if (block_[i] == inBlock) {
                    du += u.exp(static_cast<int>(i));
                    dv += v.exp(static_cast<int>(i));
                }
            if (du != dv) return du < dv ? -1 : 1;
            for (int var : ascending_) {
                if (block_[var] != inBlock) continue;
                int d = u.exp(var) - v.exp(var);
                if (d != 0) return d > 0 ? -1 : 1;
            }
            return 0;
        }
        for (auto it = ascending_.rbegin(); it != ascending_.rend(); ++it) {
            if (block_[*it] != inBlock) continue;
            int d = u.exp(*it) - v.exp(*it);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_ = OrderKind::GrevLex;
    std::vector<int> ascending_;
    std::vector<bool> block_;
    bool has_block_ = false;
};

} // namespace cim

#endif
