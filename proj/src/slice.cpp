#include "cim/slice.hpp"

#include <functional>

namespace cim {

SparseRow RowSpace::reduce(SparseRow r) const {
    // Rows are in echelon form with distinct leading columns, so a row is in
    // the span iff successive leading-column elimination reaches zero.
    while (!r.empty()) {
        auto it = rows_.find(r.begin()->first);
        if (it == rows_.end()) return r;
        Rational c = r.begin()->second;
        for (const auto& [col, val] : it->second) {
            auto [e, inserted] = r.try_emplace(col, 0);
            e->second -= c * val;
            if (e->second == 0) r.erase(e);
        }
    }
    return r;
}

bool RowSpace::insert(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    int pivot = r.begin()->first;
    Rational inv = 1 / r.begin()->second;
    for (auto& [col, val] : r) val *= inv;
    rows_[pivot] = std::move(r);
    return true;
}

void RowSpace::canonicalize() {
    // One back-substitution pass, bottom pivot up.
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        for (auto& [p, row] : rows_) {
            if (p == it->first) continue;
            auto e = row.find(it->first);
            if (e == row.end()) continue;
            Rational c = e->second;
            for (const auto& [col, val] : it->second) {
                auto [f, inserted] = row.try_emplace(col, 0);
                f->second -= c * val;
                if (f->second == 0) row.erase(f);
            }
        }
    }
}

bool RowSpace::contains_space(const RowSpace& other) const {
    for (const auto& [p, row] : other.rows_)
        if (!contains(row)) return false;
    return true;
}

RowSpace RowSpace::sum(const RowSpace& a, const RowSpace& b) {
    RowSpace s = a;
    for (const auto& [p, row] : b.rows_) s.insert(row);
    return s;
}

RowSpace RowSpace::meet(const RowSpace& a, const RowSpace& b) {
    // Zassenhaus: rows [u | u] for u in a, [v | 0] for v in b; echelon rows
    // whose leading column falls in the right half span the intersection.
    int w = a.width();
    RowSpace big(2 * w);
    RowSpace out(w);
    std::vector<SparseRow> stacked;
    for (const auto& [p, row] : a.rows_) {
        SparseRow r;
        for (const auto& [col, val] : row) {
            r[col] = val;
            r[col + w] = val;
        }
        stacked.push_back(std::move(r));
    }
    for (const auto& [p, row] : b.rows_) stacked.push_back(row);
    for (auto& r : stacked) {
        r = big.reduce(std::move(r));
        if (r.empty()) continue;
        if (r.begin()->first >= w) {
            SparseRow right;
            for (const auto& [col, val] : r) right[col - w] = val;
            out.insert(std::move(right));
            continue;
        }
        big.insert(std::move(r));
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int d, long memory_cap) {
    std::vector<Monomial> out;
    int n = ring.size();
    if (n == 0) {
        if (d == 0) out.push_back(Monomial(0));
        return out;
    }
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            e[pos] = rem;
            out.push_back(Monomial(e));
            if (static_cast<long>(out.size()) > memory_cap)
                fail(ErrorKind::MemoryCap, "monomial basis exceeds memory cap");
            e[pos] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[pos] = k;
            rec(pos + 1, rem - k);
        }
        e[pos] = 0;
    };
    rec(0, d);
    return out;
}

GradedSlice::GradedSlice(const Ideal& ideal, int degree, const Caps& caps)
    : degree_(degree), space_(0) {
    if (!ideal.homogeneous()) fail(ErrorKind::Precondition, "graded slice requires a homogeneous ideal");
    basis_ = monomials_of_degree(*ideal.ring(), degree, caps.memory_cap);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
    space_ = RowSpace(static_cast<int>(basis_.size()));
    for (const auto& g : ideal.gens()) {
        int dg = g.degree();
        if (dg > degree) continue;
        for (const auto& m : monomials_of_degree(*ideal.ring(), degree - dg, caps.memory_cap)) {
            SparseRow row;
            for (const auto& [mm, c] : g.terms()) row[index_.at(mm * m)] = c;
            space_.insert(std::move(row));
        }
    }
    space_.canonicalize();
}

SparseRow GradedSlice::row_of(const Polynomial& p) const {
    SparseRow row;
    for (const auto& [m, c] : p.terms()) {
        auto it = index_.find(m);
        if (it == index_.end()) fail(ErrorKind::Precondition, "polynomial degree does not match slice");
        row[it->second] = c;
    }
    return row;
}

bool GradedSlice::contains(const Polynomial& p) const {
    if (p.is_zero()) return true;
    return space_.contains(row_of(p));
}

} // namespace cim
