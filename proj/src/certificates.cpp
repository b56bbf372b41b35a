#include "coarse/certificates.hpp"

#include <sstream>
#include <stdexcept>

namespace coarse {

namespace {

using nlohmann::json;

VertexSet set_from_json(const json& j) {
    VertexSet s;
    for (const auto& v : j) s.push_back(v.get<Vertex>());
    return normalize_set(std::move(s));
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("certificate: missing field \"") + name + '"');
    return *it;
}

}  // namespace

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Graph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

nlohmann::json model_to_json(const Graph& pattern, const MinorModel& m) {
    json j;
    j["pattern"] = graph_to_string(pattern);
    j["fatness"] = format_rat(m.fatness);
    json branch = json::object();
    for (std::size_t v = 0; v < m.branch.size(); ++v)
        branch[std::to_string(v)] = m.branch[v];
    j["branch"] = std::move(branch);
    json connector = json::object();
    for (std::size_t e = 0; e < m.connector.size(); ++e) {
        const Edge& pe = pattern.edges()[e];
        connector[std::to_string(pe.u) + "-" + std::to_string(pe.v)] = m.connector[e];
    }
    j["connector"] = std::move(connector);
    return j;
}

MinorModel model_from_json(const nlohmann::json& j, Graph& pattern_out) {
    pattern_out = graph_from_string(field(j, "pattern").get<std::string>());
    MinorModel m;
    m.fatness = parse_rat(field(j, "fatness").get<std::string>());
    m.branch.resize(pattern_out.vertex_count());
    for (const auto& [key, ids] : field(j, "branch").items()) {
        std::size_t v = std::stoul(key);
        if (v >= m.branch.size())
            throw std::invalid_argument("certificate: branch key out of range");
        m.branch[v] = set_from_json(ids);
    }
    m.connector.resize(pattern_out.edge_count());
    for (const auto& [key, ids] : field(j, "connector").items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("certificate: connector key is not \"u-v\"");
        Vertex u = static_cast<Vertex>(std::stoul(key.substr(0, dash)));
        Vertex v = static_cast<Vertex>(std::stoul(key.substr(dash + 1)));
        std::ptrdiff_t e = pattern_out.edge_index(u, v);
        if (e < 0) throw std::invalid_argument("certificate: connector key is not a pattern edge");
        m.connector[e] = set_from_json(ids);
    }
    return m;
}

nlohmann::json decomposition_to_json(const TreeDecomposition& td) {
    json j;
    json edges = json::array();
    for (const Edge& e : td.tree.edges()) edges.push_back(json::array({e.u, e.v}));
    j["tree_edges"] = std::move(edges);
    j["bags"] = td.bags;
    return j;
}

TreeDecomposition decomposition_from_json(const nlohmann::json& j) {
    TreeDecomposition td;
    for (const auto& b : field(j, "bags")) td.bags.push_back(set_from_json(b));
    std::vector<Edge> edges;
    for (const auto& e : field(j, "tree_edges")) {
        if (e.size() != 2) throw std::invalid_argument("certificate: tree edge is not a pair");
        edges.push_back(make_edge(e[0].get<Vertex>(), e[1].get<Vertex>()));
    }
    td.tree = Graph(td.bags.size(), std::move(edges));
    return td;
}

nlohmann::json map_to_json(const VertexMap& m) {
    json j;
    j["q"] = format_rat(m.q);
    j["map"] = m.map;
    return j;
}

void map_from_json(const nlohmann::json& j, VertexMap& out) {
    out.q = parse_rat(field(j, "q").get<std::string>());
    out.map.clear();
    for (const auto& v : field(j, "map")) out.map.push_back(v.get<Vertex>());
}

nlohmann::json spread_witness_to_json(const SpreadPathWitness& w) {
    json j;
    j["paths"] = w.paths;
    if (w.min_pairwise_distance.is_infinite())
        j["min_pairwise_distance"] = "inf";
    else
        j["min_pairwise_distance"] = w.min_pairwise_distance.value().numerator() /
                                     w.min_pairwise_distance.value().denominator();
    return j;
}

SpreadPathWitness spread_witness_from_json(const nlohmann::json& j) {
    SpreadPathWitness w;
    for (const auto& p : field(j, "paths"))
        w.paths.push_back(p.get<std::vector<Vertex>>());
    const json& d = field(j, "min_pairwise_distance");
    if (d.is_string() && d.get<std::string>() == "inf")
        w.min_pairwise_distance = Dist::infinity();
    else
        w.min_pairwise_distance = Dist(d.get<std::int64_t>());
    return w;
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xf];
    return out;
}

}  // namespace coarse
