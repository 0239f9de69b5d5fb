#include "cim/collection.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cim {

MinorCollection::MinorCollection(int m, int n, std::vector<Minor> minors, bool corner_interval_only)
    : m_(m), n_(n), minors_(std::move(minors)) {
    if (m_ < 0 || n_ < 0) fail(ErrorKind::Validation, "negative grid dimensions");
    std::sort(minors_.begin(), minors_.end());
    for (std::size_t i = 0; i + 1 < minors_.size(); ++i)
        if (minors_[i] == minors_[i + 1])
            fail(ErrorKind::Validation, "duplicate minor " + minors_[i].str());
    for (const auto& d : minors_) {
        if (!(1 <= d.a1 && d.a1 < d.a2 && d.a2 <= m_ && 1 <= d.b1 && d.b1 < d.b2 && d.b2 <= n_))
            fail(ErrorKind::Validation, "minor " + d.str() + " does not fit the grid");
        if (corner_interval_only && !d.corner_interval())
            fail(ErrorKind::Validation, "minor " + d.str() + " is not corner-interval (b1 != 1)");
    }
    for (const auto& d : minors_)
        for (const auto& v : d.vertices()) cellSet_.insert(v);
    cells_.assign(cellSet_.begin(), cellSet_.end());
}

std::set<std::pair<Cell, Cell>> MinorCollection::edge_set() const {
    std::set<std::pair<Cell, Cell>> edges;
    for (const auto& d : minors_)
        for (auto [u, v] : d.edges()) edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    return edges;
}

bool MinorCollection::all_corner_interval() const {
    for (const auto& d : minors_)
        if (!d.corner_interval()) return false;
    return true;
}

bool MinorCollection::all_corner() const {
    for (const auto& d : minors_)
        if (!d.corner()) return false;
    return true;
}

MinorCollection MinorCollection::restrict_away(const std::vector<Cell>& u) const {
    std::set<Cell> avoid(u.begin(), u.end());
    std::vector<Minor> kept;
    for (const auto& d : minors_) {
        bool meets = false;
        for (const auto& v : d.vertices())
            if (avoid.count(v)) { meets = true; break; }
        if (!meets) kept.push_back(d);
    }
    return MinorCollection(m_, n_, std::move(kept), false);
}

MinorCollection MinorCollection::full_corner(int m, int n) {
    std::vector<Minor> minors;
    for (int i = 2; i <= m; ++i)
        for (int j = 2; j <= n; ++j) minors.push_back({1, i, 1, j});
    return MinorCollection(m, n, std::move(minors));
}

MinorCollection MinorCollection::full_corner_interval(int m, int n) {
    std::vector<Minor> minors;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = 2; k <= n; ++k) minors.push_back({i, j, 1, k});
    return MinorCollection(m, n, std::move(minors));
}

MinorCollection parse_collection(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") || !doc.contains("minors"))
            fail(ErrorKind::Parse, "expected an object with fields m, n, minors");
        int m = doc.at("m").get<int>();
        int n = doc.at("n").get<int>();
        bool strict = doc.value("cornerIntervalOnly", true);
        std::vector<Minor> minors;
        for (const auto& row : doc.at("minors")) {
            if (!row.is_array() || row.size() != 4)
                fail(ErrorKind::Parse, "each minor must be [a1,a2,b1,b2]");
            minors.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()});
        }
        return MinorCollection(m, n, std::move(minors), strict);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, std::string("malformed collection document: ") + e.what());
    }
}

MinorCollection parse_collection_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_collection(ss.str());
}

std::string collection_to_json(const MinorCollection& c) {
    nlohmann::json doc;
    doc["m"] = c.rows();
    doc["n"] = c.cols();
    auto minors = nlohmann::json::array();
    for (const auto& d : c.minors()) minors.push_back({d.a1, d.a2, d.b1, d.b2});
    doc["minors"] = minors;
    return doc.dump();
}

RingPtr ring_of(const MinorCollection& c) {
    return make_ring(Ring(c.cells()));
}

Polynomial minor_binomial(const Minor& d, const Ring& ring) {
    Monomial diag = Monomial::var(ring, ring.index_of({d.a1, d.b1})) *
                    Monomial::var(ring, ring.index_of({d.a2, d.b2}));
    Monomial anti = Monomial::var(ring, ring.index_of({d.a1, d.b2})) *
                    Monomial::var(ring, ring.index_of({d.a2, d.b1}));
    return Polynomial::term(diag, 1) - Polynomial::term(anti, 1);
}

Ideal ideal_of(const MinorCollection& c, RingPtr ring) {
    std::vector<Polynomial> gens;
    for (const auto& d : c.minors()) gens.push_back(minor_binomial(d, *ring));
    return Ideal(std::move(ring), std::move(gens));
}

} // namespace cim
