#include "coarse/quasiiso.hpp"

#include <numeric>
#include <stdexcept>

namespace coarse {

namespace {

void check_map_shape(const VertexMap& m) {
    if (m.map.size() != m.domain.vertex_count())
        throw std::invalid_argument("quasi-isometry: map is not total on the domain");
    for (Vertex image : m.map)
        if (image >= m.codomain.vertex_count())
            throw std::invalid_argument("quasi-isometry: map image out of range");
    if (m.q < Rat(1)) throw std::invalid_argument("quasi-isometry: constant must be >= 1");
}

}  // namespace

std::optional<QIViolation> check_quasi_isometry(const VertexMap& m) {
    check_map_shape(m);
    const std::size_t n = m.domain.vertex_count();

    for (Vertex u = 0; u < n; ++u) {
        auto dom = distances(m.domain, {u});
        auto cod = distances(m.codomain, {m.map[u]});
        for (Vertex v = u + 1; v < n; ++v) {
            Dist d = dom.dist[v];
            Dist dh = cod.dist[m.map[v]];
            if (d.is_infinite() || dh.is_infinite()) {
                if (d == dh) continue;
                // a finite gap mapped to infinity breaks the upper bound;
                // the reverse breaks the lower bound
                if (d.is_finite())
                    return QIViolation{QIViolationKind::UpperBound, u, v, dh,
                                       Dist(m.q * d.value() + m.q)};
                return QIViolation{QIViolationKind::LowerBound, u, v, dh, Dist::infinity()};
            }
            Rat lower = d.value() / m.q - m.q;
            if (dh.value() < lower)
                return QIViolation{QIViolationKind::LowerBound, u, v, dh, Dist(lower)};
            Rat upper = m.q * d.value() + m.q;
            if (dh.value() > upper)
                return QIViolation{QIViolationKind::UpperBound, u, v, dh, Dist(upper)};
        }
    }

    VertexSet image = normalize_set(m.map);
    if (!image.empty()) {
        auto from_image = distances(m.codomain, image);
        for (Vertex v = 0; v < m.codomain.vertex_count(); ++v) {
            Dist d = from_image.dist[v];
            if (d.is_infinite() || d.value() > m.q)
                return QIViolation{QIViolationKind::Density, v, 0, d, Dist(m.q)};
        }
    } else if (m.codomain.vertex_count() > 0) {
        return QIViolation{QIViolationKind::Density, 0, 0, Dist::infinity(), Dist(m.q)};
    }
    return std::nullopt;
}

VertexMap identity_into_power(const Graph& g, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("identity_into_power: exponent must be positive");
    VertexMap m;
    m.domain = g;
    m.codomain = power_graph(g, k);
    m.map.resize(g.vertex_count());
    std::iota(m.map.begin(), m.map.end(), 0);
    m.q = Rat(k);
    return m;
}

namespace {

// Expansion body shared with pushforward_model, which validates the map once
// up front instead of per part.
VertexSet expand_raw(const VertexMap& m, const VertexSet& x) {
    if (!is_connected_set(m.domain, x))
        throw std::invalid_argument("expand_image: input set is not connected");
    VertexSet image;
    for (Vertex v : x) image.push_back(m.map[v]);
    VertexSet out = neighborhood(m.codomain, normalize_set(std::move(image)), m.q + 1);
    if (!is_connected_set(m.codomain, out))
        throw std::logic_error("expand_image: expansion came out disconnected");
    return out;
}

bool pair_constrained(const Graph& pattern, PartRef a, PartRef b) {
    if (a.is_connector == b.is_connector) return true;
    const PartRef& branch = a.is_connector ? b : a;
    const PartRef& conn = a.is_connector ? a : b;
    const Edge& e = pattern.edges()[conn.index];
    return e.u != branch.index && e.v != branch.index;
}

}  // namespace

VertexSet expand_image(const VertexMap& m, const VertexSet& x) {
    if (auto bad = check_quasi_isometry(m); bad.has_value())
        throw std::invalid_argument("expand_image: map is not a quasi-isometry");
    return expand_raw(m, x);
}

PushforwardReport pushforward_model(const VertexMap& m, const Graph& pattern,
                                    const MinorModel& mm) {
    if (auto bad = check_quasi_isometry(m); bad.has_value())
        throw std::invalid_argument("pushforward_model: map is not a quasi-isometry");
    if (!verify_model(m.domain, pattern, mm, mm.fatness).ok())
        throw std::invalid_argument("pushforward_model: model fails in the domain");

    PushforwardReport out;
    out.model.fatness = Rat(0);
    for (const VertexSet& b : mm.branch) out.model.branch.push_back(expand_raw(m, b));
    for (const VertexSet& c : mm.connector) out.model.connector.push_back(expand_raw(m, c));

    std::vector<PartRef> parts;
    for (std::uint32_t i = 0; i < out.model.branch.size(); ++i) parts.push_back({false, i});
    for (std::uint32_t i = 0; i < out.model.connector.size(); ++i) parts.push_back({true, i});
    auto part_set = [&](PartRef p) -> const VertexSet& {
        return p.is_connector ? out.model.connector[p.index] : out.model.branch[p.index];
    };

    out.achieved = Dist::infinity();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (!pair_constrained(pattern, parts[i], parts[j])) continue;
            Dist d = set_distance(m.codomain, part_set(parts[i]), part_set(parts[j]));
            out.achieved = std::min(out.achieved, d);
        }
    if (out.achieved.is_finite()) out.model.fatness = out.achieved.value();
    return out;
}

}  // namespace coarse
