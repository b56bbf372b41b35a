#pragma once

#include <random>
#include <vector>

#include "coarse/graph.hpp"

namespace coarse::testutil {

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<Vertex>(i + 1)});
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<Vertex>(i + 1)});
    edges.push_back(make_edge(0, static_cast<Vertex>(n - 1)));
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

// Random connected graph: random spanning tree plus extra random edges.
inline Graph random_connected_graph(std::size_t n, double extra_edge_prob, std::mt19937& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        edges.push_back(make_edge(pick(rng), v));
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            Edge e{i, j};
            if (std::find(edges.begin(), edges.end(), e) == edges.end() &&
                coin(rng) < extra_edge_prob)
                edges.push_back(e);
        }
    return Graph(n, std::move(edges));
}

}  // namespace coarse::testutil
