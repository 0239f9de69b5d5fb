#include "cim/fibers.hpp"

#include <deque>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cim/cycles.hpp"
#include "cim/groebner.hpp"
#include "cim/primes.hpp"

namespace cim {

ContingencyTable::ContingencyTable(std::map<Cell, long> values) : values_(std::move(values)) {
    for (auto it = values_.begin(); it != values_.end();) {
        if (it->second < 0) fail(ErrorKind::Validation, "negative table entry at " + it->first.name());
        if (it->second == 0)
            it = values_.erase(it);
        else
            ++it;
    }
}

long ContingencyTable::total() const {
    long t = 0;
    for (const auto& [c, v] : values_) t += v;
    return t;
}

std::map<int, long> ContingencyTable::row_margins() const {
    std::map<int, long> m;
    for (const auto& [c, v] : values_) m[c.row] += v;
    return m;
}

std::map<int, long> ContingencyTable::col_margins() const {
    std::map<int, long> m;
    for (const auto& [c, v] : values_) m[c.col] += v;
    return m;
}

std::string ContingencyTable::str() const {
    std::string s = "{";
    for (const auto& [c, v] : values_) {
        if (s.size() > 1) s += ", ";
        s += c.name() + ":" + std::to_string(v);
    }
    return s + "}";
}

MoveBasis move_basis(const MinorCollection& c) {
    MoveBasis b;
    for (const auto& d : c.minors()) {
        Move mv;
        mv.minor = d;
        mv.delta[{d.a1, d.b1}] += 1;
        mv.delta[{d.a2, d.b2}] += 1;
        mv.delta[{d.a1, d.b2}] -= 1;
        mv.delta[{d.a2, d.b1}] -= 1;
        b.moves.push_back(std::move(mv));
    }
    return b;
}

namespace {

bool apply_move(const ContingencyTable& t, const Move& mv, int sign, ContingencyTable& out) {
    std::map<Cell, long> vals = t.values();
    for (const auto& [cell, d] : mv.delta) {
        long nv = (vals.count(cell) ? vals[cell] : 0) + sign * d;
        if (nv < 0) return false;
        vals[cell] = nv;
    }
    out = ContingencyTable(std::move(vals));
    return true;
}

} // namespace

FiberResult fiber_connected(const ContingencyTable& u, const ContingencyTable& v, const MoveBasis& b,
                            long cap) {
    FiberResult res;
    if (u.row_margins() != v.row_margins() || u.col_margins() != v.col_margins()) {
        res.verdict = FiberVerdict::Disconnected;
        res.reason = "row or column margins differ";
        return res;
    }
    if (u == v) {
        res.verdict = FiberVerdict::Connected;
        return res;
    }

    std::map<ContingencyTable, std::pair<ContingencyTable, int>> parent; // state -> (prev, signed move)
    std::deque<ContingencyTable> frontier;
    parent.emplace(u, std::make_pair(u, 0));
    frontier.push_back(u);
    res.explored = 1;

    while (!frontier.empty()) {
        ContingencyTable cur = frontier.front();
        frontier.pop_front();
        for (std::size_t i = 0; i < b.moves.size(); ++i) {
            for (int sign : {+1, -1}) {
                ContingencyTable next;
                if (!apply_move(cur, b.moves[i], sign, next)) continue;
                if (parent.count(next)) continue;
                parent.emplace(next, std::make_pair(cur, sign * static_cast<int>(i + 1)));
                ++res.explored;
                if (next == v) {
                    std::vector<int> path;
                    ContingencyTable s = next;
                    while (!(s == u)) {
                        auto& [prev, mv] = parent.at(s);
                        path.push_back(mv);
                        s = prev;
                    }
                    std::reverse(path.begin(), path.end());
                    res.verdict = FiberVerdict::Connected;
                    res.witness = std::move(path);
                    return res;
                }
                if (res.explored > cap) {
                    res.verdict = FiberVerdict::Unknown;
                    res.reason = "state cap reached";
                    return res;
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    res.verdict = FiberVerdict::Disconnected;
    res.reason = "component exhausted without reaching the target";
    return res;
}

Polynomial table_difference_binomial(const ContingencyTable& u, const ContingencyTable& v,
                                     const Ring& ring) {
    Monomial mu = Monomial::unit(ring);
    Monomial mv = Monomial::unit(ring);
    for (const auto& [c, val] : u.values()) mu = mu * Monomial::var(ring, ring.index_of(c), static_cast<int>(val));
    for (const auto& [c, val] : v.values()) mv = mv * Monomial::var(ring, ring.index_of(c), static_cast<int>(val));
    return Polynomial::term(mu, 1) - Polynomial::term(mv, 1);
}

CertifyResult certify_connectivity(const ContingencyTable& u, const ContingencyTable& v,
                                   const MinorCollection& c, const Caps& caps) {
    if (!c.all_corner())
        fail(ErrorKind::NotCornerCollection, "certificate requires a collection of corner minors");
    CertifyResult res;
    res.margins_equal = u.row_margins() == v.row_margins() && u.col_margins() == v.col_margins();

    RingPtr ring = ring_of(c);
    auto mins = minimal_primes(c, ring, caps);

    res.weights_ok = true;
    for (const auto& p : mins) {
        if (p.w.empty()) continue;
        long su = 0, sv = 0;
        for (const auto& cell : p.w.cells) {
            su += u.at(cell);
            sv += v.at(cell);
        }
        if (su < 2 || sv < 2) {
            res.weights_ok = false;
            res.reason = "weight below 2 on a minimal-prime support";
            break;
        }
    }

    Polynomial f = table_difference_binomial(u, v, *ring);
    Ideal toric;
    for (const auto& p : mins)
        if (p.w.empty()) toric = p.ideal;
    res.toric_member = membership(f, toric, caps);

    // Literal support condition: all nonzero cells of u and v lie on one
    // cycle of the interval graph. Recorded for reference only.
    res.supports_on_cycle = false;
    if (!c.empty()) {
        std::set<Cell> support;
        for (const auto& [cell, val] : u.values()) support.insert(cell);
        for (const auto& [cell, val] : v.values()) support.insert(cell);
        IntervalGraph g(c);
        for (const auto& sigma : enumerate_cycles(g, default_cycle_cap(g), caps)) {
            std::set<Cell> onCycle;
            int r = static_cast<int>(sigma.h.size());
            for (int k = 0; k < r; ++k) {
                onCycle.insert(g.label(sigma.h[k], sigma.v[k]));
                onCycle.insert(g.label(sigma.h[(k + 1) % r], sigma.v[k]));
            }
            if (std::includes(onCycle.begin(), onCycle.end(), support.begin(), support.end())) {
                res.supports_on_cycle = true;
                break;
            }
        }
    }

    res.certified = res.weights_ok && res.toric_member;
    if (res.certified) res.reason.clear();
    else if (res.reason.empty())
        res.reason = res.toric_member ? "weight condition failed" : "difference binomial outside the toric prime";
    return res;
}

ContingencyTable parse_table(const std::string& json_text, const MinorCollection& c) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    return [&]() {
        try {
            std::map<Cell, long> vals;
            for (const auto& row : doc.at("cells")) {
                if (!row.is_array() || row.size() != 3) fail(ErrorKind::Parse, "each entry must be [i, j, value]");
                Cell cell{row[0].get<int>(), row[1].get<int>()};
                if (!c.has_cell(cell))
                    fail(ErrorKind::Validation, "cell " + cell.name() + " outside V(C)");
                vals[cell] += row[2].get<long>();
            }
            return ContingencyTable(std::move(vals));
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::Parse, std::string("malformed table document: ") + e.what());
        }
    }();
}

std::pair<ContingencyTable, ContingencyTable> parse_table_pair_file(const std::string& path,
                                                                    const MinorCollection& c) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.contains("u") || !doc.contains("v"))
        fail(ErrorKind::Parse, "expected an object with tables u and v");
    return {parse_table(doc["u"].dump(), c), parse_table(doc["v"].dump(), c)};
}

} // namespace cim
