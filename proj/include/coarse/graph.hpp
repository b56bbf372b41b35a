#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "coarse/rational.hpp"

namespace coarse {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u, v;  // u < v

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// A set of vertex ids of some graph, kept sorted and duplicate-free.
using VertexSet = std::vector<Vertex>;

VertexSet normalize_set(VertexSet s);
bool set_contains(const VertexSet& s, Vertex v);
bool sets_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

// Immutable finite simple graph with dense vertex ids 0..n-1 and optional
// positive rational edge weights (absent means every edge has length 1).
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges);
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<Rat> weights);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool weighted() const { return !weights_.empty(); }
    const Rat& weight(std::size_t edge_index) const { return weights_[edge_index]; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + adj_off_[v], adj_.data() + adj_off_[v + 1]};
    }
    // Edge indices parallel to neighbors(v).
    std::span<const std::uint32_t> incident_edges(Vertex v) const {
        return {adj_edge_.data() + adj_off_[v], adj_edge_.data() + adj_off_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return adj_off_[v + 1] - adj_off_[v]; }

    bool has_edge(Vertex a, Vertex b) const;
    // Index into edges() or -1.
    std::ptrdiff_t edge_index(Vertex a, Vertex b) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;    // sorted lexicographically
    std::vector<Rat> weights_;   // parallel to edges_, empty when unweighted
    std::vector<std::uint32_t> adj_off_;
    std::vector<Vertex> adj_;
    std::vector<std::uint32_t> adj_edge_;

    void build_adjacency();
};

struct DistanceTable {
    VertexSet source;
    std::vector<Dist> dist;
};

// Multi-source shortest path distances; BFS when unweighted, label-setting
// otherwise. Throws std::invalid_argument on an empty source set.
DistanceTable distances(const Graph& g, const VertexSet& sources);

// Unweighted fast path: -1 marks unreachable. cap >= 0 truncates the sweep,
// leaving every distance greater than cap reported as -1.
std::vector<std::int64_t> bfs_distances(const Graph& g, const VertexSet& sources,
                                        std::int64_t cap = -1);

Dist set_distance(const Graph& g, const VertexSet& x, const VertexSet& y);

// N^r[y]: all vertices at distance <= r from y.
VertexSet neighborhood(const Graph& g, const VertexSet& y, const Rat& r);

// True iff y is non-empty and the subgraph induced on y is connected.
bool is_connected_set(const Graph& g, const VertexSet& y);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // original[new_id] = old id
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& z);

struct SubdividedGraph {
    Graph graph;  // original vertices keep their ids
    // chain[e] = the k internal vertices of edge e of the input, in order
    // from edges()[e].u to edges()[e].v.
    std::vector<std::vector<Vertex>> chain;
};

SubdividedGraph subdivide(const Graph& g, std::uint32_t k);

Graph contract_edge(const Graph& g, Edge e);

// G^k: same vertices, uv an edge iff 1 <= dist_g(u,v) <= k. Unweighted input only.
Graph power_graph(const Graph& g, std::uint32_t k);

Graph scale_weights(const Graph& g, const Rat& factor);

// Text format, bit-exact: "n m w" header, then m sorted lines "u v" or
// "u v num/den"; '#' starts a comment line.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace coarse
