#include "coarse/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace coarse {

VertexSet normalize_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool sets_intersect(const VertexSet& a, const VertexSet& b) {
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it == *jt) return true;
        if (*it < *jt)
            ++it;
        else
            ++jt;
    }
    return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u >= e.v) throw std::invalid_argument("graph: edge endpoints must satisfy u < v");
        if (e.v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
        if (i > 0 && edges_[i - 1] == e) throw std::invalid_argument("graph: parallel edge");
    }
    build_adjacency();
}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<Rat> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
    if (weights_.size() != edges_.size())
        throw std::invalid_argument("graph: weight count mismatch");
    // Keep weights aligned through the sort.
    std::vector<std::size_t> order(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
    std::vector<Edge> es(edges_.size());
    std::vector<Rat> ws(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        es[i] = edges_[order[i]];
        ws[i] = weights_[order[i]];
    }
    edges_ = std::move(es);
    weights_ = std::move(ws);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u >= e.v) throw std::invalid_argument("graph: edge endpoints must satisfy u < v");
        if (e.v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
        if (i > 0 && edges_[i - 1] == e) throw std::invalid_argument("graph: parallel edge");
        if (weights_[i] <= Rat(0)) throw std::invalid_argument("graph: non-positive weight");
    }
    build_adjacency();
}

void Graph::build_adjacency() {
    adj_off_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_off_[e.u + 1];
        ++adj_off_[e.v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) adj_off_[i + 1] += adj_off_[i];
    adj_.resize(2 * edges_.size());
    adj_edge_.resize(2 * edges_.size());
    std::vector<std::uint32_t> pos(adj_off_.begin(), adj_off_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adj_[pos[e.u]] = e.v;
        adj_edge_[pos[e.u]++] = static_cast<std::uint32_t>(i);
        adj_[pos[e.v]] = e.u;
        adj_edge_[pos[e.v]++] = static_cast<std::uint32_t>(i);
    }
    // Neighbor lists sorted for deterministic iteration.
    for (std::size_t v = 0; v < n_; ++v) {
        std::vector<std::pair<Vertex, std::uint32_t>> tmp;
        for (std::uint32_t i = adj_off_[v]; i < adj_off_[v + 1]; ++i)
            tmp.emplace_back(adj_[i], adj_edge_[i]);
        std::sort(tmp.begin(), tmp.end());
        for (std::uint32_t i = adj_off_[v]; i < adj_off_[v + 1]; ++i) {
            adj_[i] = tmp[i - adj_off_[v]].first;
            adj_edge_[i] = tmp[i - adj_off_[v]].second;
        }
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

std::ptrdiff_t Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b || a >= n_ || b >= n_) return -1;
    Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return it - edges_.begin();
    return -1;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.edges_ != b.edges_) return false;
    if (a.weighted() != b.weighted()) return false;
    return a.weights_ == b.weights_;
}

std::vector<std::int64_t> bfs_distances(const Graph& g, const VertexSet& sources,
                                        std::int64_t cap) {
    if (sources.empty()) throw std::invalid_argument("bfs_distances: empty source set");
    std::vector<std::int64_t> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (s >= g.vertex_count()) throw std::invalid_argument("bfs_distances: vertex out of range");
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (cap >= 0 && dist[v] >= cap) continue;
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

namespace {

std::vector<Dist> dijkstra(const Graph& g, const VertexSet& sources, const Dist* cap = nullptr) {
    std::vector<Dist> dist(g.vertex_count(), Dist::infinity());
    std::vector<char> done(g.vertex_count(), 0);
    using Item = std::pair<Rat, Vertex>;
    auto cmp = [](const Item& a, const Item& b) {
        return a.first != b.first ? a.first > b.first : a.second > b.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    for (Vertex s : sources) {
        if (s >= g.vertex_count()) throw std::invalid_argument("distances: vertex out of range");
        dist[s] = Dist(Rat(0));
        pq.emplace(Rat(0), s);
    }
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        if (cap && Dist(d) >= *cap) continue;
        auto nbrs = g.neighbors(v);
        auto eidx = g.incident_edges(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            Rat w = g.weighted() ? g.weight(eidx[i]) : Rat(1);
            Dist nd = Dist(d + w);
            if (nd < dist[nbrs[i]]) {
                dist[nbrs[i]] = nd;
                pq.emplace(nd.value(), nbrs[i]);
            }
        }
    }
    return dist;
}

}  // namespace

DistanceTable distances(const Graph& g, const VertexSet& sources) {
    if (sources.empty()) throw std::invalid_argument("distances: empty source set");
    DistanceTable table;
    table.source = normalize_set(sources);
    if (!g.weighted()) {
        auto d = bfs_distances(g, table.source);
        table.dist.reserve(d.size());
        for (std::int64_t x : d)
            table.dist.push_back(x < 0 ? Dist::infinity() : Dist(x));
    } else {
        table.dist = dijkstra(g, table.source);
    }
    return table;
}

Dist set_distance(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("set_distance: empty input set");
    const VertexSet& small = x.size() <= y.size() ? x : y;
    const VertexSet& large = x.size() <= y.size() ? y : x;
    if (sets_intersect(small, large)) return Dist(Rat(0));
    DistanceTable table = distances(g, small);
    Dist best = Dist::infinity();
    for (Vertex v : large)
        if (table.dist[v] < best) best = table.dist[v];
    return best;
}

VertexSet neighborhood(const Graph& g, const VertexSet& y, const Rat& r) {
    if (y.empty()) throw std::invalid_argument("neighborhood: empty set");
    if (r < Rat(0)) throw std::invalid_argument("neighborhood: negative radius");
    VertexSet out;
    if (!g.weighted()) {
        // Integer truncation is exact here: unweighted distances are integers.
        std::int64_t cap = r.numerator() / r.denominator();
        auto d = bfs_distances(g, y, cap);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (d[v] >= 0 && Rat(d[v]) <= r) out.push_back(v);
    } else {
        Dist cap(r);
        auto d = dijkstra(g, normalize_set(y), &cap);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (d[v] <= cap) out.push_back(v);
    }
    return out;
}

bool is_connected_set(const Graph& g, const VertexSet& y) {
    if (y.empty()) return false;
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : y) in[v] = 1;
    std::deque<Vertex> queue{y.front()};
    std::size_t seen = 1;
    in[y.front()] = 2;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (in[w] == 1) {
                in[w] = 2;
                ++seen;
                queue.push_back(w);
            }
        }
    }
    return seen == y.size();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& z) {
    VertexSet zs = normalize_set(z);
    std::vector<std::int64_t> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (zs[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        new_id[zs[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> edges;
    std::vector<Rat> weights;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
            edges.push_back(make_edge(static_cast<Vertex>(new_id[e.u]),
                                      static_cast<Vertex>(new_id[e.v])));
            if (g.weighted()) weights.push_back(g.weight(i));
        }
    }
    InducedSubgraph out;
    out.graph = g.weighted() ? Graph(zs.size(), std::move(edges), std::move(weights))
                             : Graph(zs.size(), std::move(edges));
    out.original = std::move(zs);
    return out;
}

SubdividedGraph subdivide(const Graph& g, std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("subdivide: k must be >= 1");
    if (g.weighted()) throw std::invalid_argument("subdivide: weighted input not supported");
    SubdividedGraph out;
    std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * (k + 1));
    out.chain.resize(g.edge_count());
    Vertex next = static_cast<Vertex>(n);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        Vertex prev = e.u;
        for (std::uint32_t j = 0; j < k; ++j) {
            out.chain[i].push_back(next);
            edges.push_back(make_edge(prev, next));
            prev = next++;
        }
        edges.push_back(make_edge(prev, e.v));
    }
    out.graph = Graph(n + std::size_t(k) * g.edge_count(), std::move(edges));
    return out;
}

Graph contract_edge(const Graph& g, Edge e) {
    if (g.edge_index(e.u, e.v) < 0) throw std::invalid_argument("contract_edge: missing edge");
    // Merge v into u; relabel so ids stay dense.
    std::vector<Vertex> relabel(g.vertex_count());
    Vertex next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        relabel[v] = (v == e.v) ? 0 : next++;
    relabel[e.v] = relabel[e.u];
    std::vector<Edge> edges;
    for (const Edge& f : g.edges()) {
        Vertex a = relabel[f.u], b = relabel[f.v];
        if (a != b) edges.push_back(make_edge(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(g.vertex_count() - 1, std::move(edges));
}

Graph power_graph(const Graph& g, std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("power_graph: k must be >= 1");
    if (g.weighted()) throw std::invalid_argument("power_graph: weighted input rejected");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto d = bfs_distances(g, {v}, k);
        for (Vertex w = v + 1; w < g.vertex_count(); ++w)
            if (d[w] >= 1 && d[w] <= static_cast<std::int64_t>(k)) edges.push_back({v, w});
    }
    return Graph(g.vertex_count(), std::move(edges));
}

Graph scale_weights(const Graph& g, const Rat& factor) {
    if (factor <= Rat(0)) throw std::invalid_argument("scale_weights: non-positive factor");
    std::vector<Rat> weights;
    weights.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        weights.push_back((g.weighted() ? g.weight(i) : Rat(1)) * factor);
    return Graph(g.vertex_count(), g.edges(), std::move(weights));
}

Graph read_graph(std::istream& in) {
    auto next_line = [&](std::string& line) {
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] != '#') return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw std::invalid_argument("graph text: missing header");
    std::istringstream head(line);
    std::size_t n = 0, m = 0;
    int w = 0;
    if (!(head >> n >> m >> w) || (w != 0 && w != 1))
        throw std::invalid_argument("graph text: bad header '" + line + "'");
    std::vector<Edge> edges;
    std::vector<Rat> weights;
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line(line))
            throw std::invalid_argument("graph text: expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        Vertex u, v;
        if (!(es >> u >> v)) throw std::invalid_argument("graph text: bad edge line '" + line + "'");
        if (u >= v) throw std::invalid_argument("graph text: edge must have u < v: '" + line + "'");
        edges.push_back({u, v});
        if (w) {
            std::string ws;
            if (!(es >> ws))
                throw std::invalid_argument("graph text: missing weight: '" + line + "'");
            weights.push_back(parse_rat(ws));
        }
    }
    return w ? Graph(n, std::move(edges), std::move(weights)) : Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << (g.weighted() ? 1 : 0) << '\n';
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        out << g.edges()[i].u << ' ' << g.edges()[i].v;
        if (g.weighted()) out << ' ' << format_rat(g.weight(i));
        out << '\n';
    }
}

}  // namespace coarse
