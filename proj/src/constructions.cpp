#include "coarse/constructions.hpp"

#include <stdexcept>
#include <string>

namespace coarse {

namespace {

std::vector<Edge> binary_tree_edges(std::uint32_t d) {
    // heap order: children of i are 2i+1 and 2i+2
    std::vector<Edge> edges;
    Vertex internal = (1u << d) - 1;
    for (Vertex i = 0; i < internal; ++i) {
        edges.push_back({i, 2 * i + 1});
        edges.push_back({i, 2 * i + 2});
    }
    return edges;
}

std::vector<Vertex> heap_leaves(std::uint32_t d) {
    std::vector<Vertex> leaves;
    for (Vertex v = (1u << d) - 1; v < (1u << (d + 1)) - 1; ++v) leaves.push_back(v);
    return leaves;
}

// Path of `len` edges from a to b through fresh internal ids starting at
// `next`; appends edges and returns the inclusive vertex list a..b.
std::vector<Vertex> stitch_path(std::vector<Edge>& edges, Vertex a, Vertex b, std::uint32_t len,
                                Vertex& next) {
    std::vector<Vertex> path{a};
    Vertex prev = a;
    for (std::uint32_t i = 0; i + 1 < len; ++i) {
        edges.push_back(make_edge(prev, next));
        path.push_back(next);
        prev = next++;
    }
    edges.push_back(make_edge(prev, b));
    path.push_back(b);
    return path;
}

}  // namespace

TreeLeafPath build_tree_leaf_path(std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("build_tree_leaf_path: d must be >= 1");
    if (d > 24) throw std::length_error("build_tree_leaf_path: d too large");
    TreeLeafPath out;
    std::vector<Edge> edges = binary_tree_edges(d);
    out.leaves = heap_leaves(d);
    for (std::size_t i = 0; i + 1 < out.leaves.size(); ++i)
        edges.push_back(make_edge(out.leaves[i], out.leaves[i + 1]));
    out.graph = Graph((1u << (d + 1)) - 1, std::move(edges));
    out.root = 0;
    return out;
}

std::uint64_t n_gadget_vertex_count(GadgetParams p) {
    if (p.d < 1 || p.s < 1) throw std::invalid_argument("n_gadget: d and s must be >= 1");
    if (p.d > 40) throw std::length_error("n_gadget: d too large to size");
    std::uint64_t L = std::uint64_t(1) << p.d;
    std::uint64_t s = p.s;
    // tree + thick vertices + bottom segment internals + pendant internals
    return (2 * L - 1) + (2 * L + 2) + (2 * L + 1) * (s - 1) + 2 * L * (s - 1);
}

NGadget build_n_gadget(GadgetParams p, std::size_t vertex_budget) {
    std::uint64_t count = n_gadget_vertex_count(p);
    if (count > vertex_budget)
        throw std::length_error("n_gadget: " + std::to_string(count) +
                                " vertices exceeds the budget of " +
                                std::to_string(vertex_budget));
    const Vertex L = 1u << p.d;
    const std::uint32_t s = p.s;

    NGadget out;
    out.root = 0;
    std::vector<Edge> edges = binary_tree_edges(p.d);
    for (Vertex v = 0; v < 2 * L - 1; ++v) out.tree_vertices.push_back(v);
    out.leaves = heap_leaves(p.d);

    const Vertex thick0 = 2 * L - 1;
    for (Vertex j = 0; j < 2 * L + 2; ++j) out.thick.push_back(thick0 + j);
    auto pvx = [&](Vertex j1) { return out.thick[j1 - 1]; };  // p_j, 1-based

    Vertex next = thick0 + 2 * L + 2;
    for (Vertex j = 1; j <= 2 * L + 1; ++j)
        out.segments.push_back(stitch_path(edges, pvx(j), pvx(j + 1), s, next));
    for (Vertex i = 1; i <= L; ++i) {
        Vertex leaf = out.leaves[i - 1];
        out.pendant_left.push_back(stitch_path(edges, leaf, pvx(2 * i - 1), s, next));
        out.pendant_right.push_back(stitch_path(edges, leaf, pvx(2 * i + 2), s, next));
        std::uint32_t mid = (s + 1) / 2;  // ceil(s/2) steps from the leaf
        out.pendant_mid_left.push_back(out.pendant_left.back()[mid]);
        out.pendant_mid_right.push_back(out.pendant_right.back()[mid]);
    }
    out.S = {out.root, pvx(1), pvx(2)};
    out.T = {out.root, pvx(2 * L + 2), pvx(2 * L + 1)};
    out.graph = Graph(count, std::move(edges));
    return out;
}

HGraph build_h(std::uint32_t n) {
    if (n < 4) throw std::invalid_argument("build_h: n must be >= 4");
    HGraph out;
    out.n = n;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        out.x.push_back(i);
        out.y.push_back(n + i);
        for (Vertex j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
            edges.push_back({n + i, n + j});
        }
    }
    for (Vertex i = 0; i < 3; ++i) edges.push_back({i, n + i});
    out.graph = Graph(2 * std::size_t(n), std::move(edges));
    return out;
}

AssemblyParams paper_params(std::uint32_t q) {
    if (q < 1) throw std::invalid_argument("paper_params: q must be >= 1");
    std::uint32_t q2 = q * q;
    return {15, 13 * q2, 14 * q2, 16 * q2, 16 * q2};
}

std::uint64_t g_vertex_count(AssemblyParams p) {
    if (p.n < 1 || p.t < 1 || p.c < 1)
        throw std::invalid_argument("build_g: all parameters must be >= 1");
    std::uint64_t star = p.n + std::uint64_t(p.n) * (p.n - 1) / 2 * p.t;
    return 2 * star + n_gadget_vertex_count({p.d, p.s}) + 6 * (std::uint64_t(p.c) - 1);
}

GAssembly build_g(AssemblyParams p, std::size_t vertex_budget) {
    std::uint64_t count = g_vertex_count(p);
    if (count > vertex_budget)
        throw std::length_error("build_g: " + std::to_string(count) +
                                " vertices exceeds the budget of " +
                                std::to_string(vertex_budget));

    GAssembly out;
    out.params = p;
    out.gadget = build_n_gadget({p.d, p.s}, vertex_budget);

    Graph clique = [&] {
        std::vector<Edge> ce;
        for (Vertex i = 0; i < p.n; ++i)
            for (Vertex j = i + 1; j < p.n; ++j) ce.push_back({i, j});
        return Graph(p.n, std::move(ce));
    }();
    SubdividedGraph star = subdivide(clique, p.t);
    const Vertex star_size = static_cast<Vertex>(star.graph.vertex_count());
    const Vertex right0 = star_size;
    const Vertex gadget0 = 2 * star_size;
    const Vertex conn0 = gadget0 + static_cast<Vertex>(out.gadget.graph.vertex_count());
    out.gadget_offset = gadget0;

    std::vector<Edge> edges;
    for (const Edge& e : star.graph.edges()) {
        edges.push_back(e);
        edges.push_back({e.u + right0, e.v + right0});
    }
    for (const Edge& e : out.gadget.graph.edges())
        edges.push_back({e.u + gadget0, e.v + gadget0});

    for (Vertex i = 0; i < p.n; ++i) {
        out.x_hubs.push_back(i);
        out.y_hubs.push_back(right0 + i);
    }
    for (Vertex v = 0; v < star_size; ++v) {
        out.left_star.push_back(v);
        out.right_star.push_back(right0 + v);
    }
    for (Vertex v = gadget0; v < conn0; ++v) out.gadget_region.push_back(v);

    for (std::size_t i = 0; i < clique.edges().size(); ++i) {
        const Edge& e = clique.edges()[i];
        std::vector<Vertex> lp{e.u}, rp{right0 + e.u};
        for (Vertex w : star.chain[i]) {
            lp.push_back(w);
            rp.push_back(right0 + w);
        }
        lp.push_back(e.v);
        rp.push_back(right0 + e.v);
        out.left_spokes.push_back(std::move(lp));
        out.right_spokes.push_back(std::move(rp));
    }

    Vertex next = conn0;
    for (int i = 0; i < 3; ++i)
        out.x_connectors[i] =
            stitch_path(edges, out.x_hubs[i], gadget0 + out.gadget.S[i], p.c, next);
    for (int i = 0; i < 3; ++i)
        out.y_connectors[i] =
            stitch_path(edges, out.y_hubs[i], gadget0 + out.gadget.T[i], p.c, next);

    out.graph = Graph(count, std::move(edges));
    return out;
}

namespace {

// tail of `path` from position `from` (inclusive) onward
void append_tail(VertexSet& set, const std::vector<Vertex>& path, std::size_t from) {
    set.insert(set.end(), path.begin() + from, path.end());
}

void append_all(VertexSet& set, const std::vector<Vertex>& path, Vertex offset) {
    for (Vertex v : path) set.push_back(offset + v);
}

}  // namespace

MinorModel build_2fat_witness(const GAssembly& a) {
    const AssemblyParams& p = a.params;
    const std::uint32_t r = (p.t + 3) / 4;  // clique-ball radius, ceil(t/4)
    if (p.d < 2 || p.s < 2 || p.t < 6 || p.c < 4 || p.n < 4)
        throw std::invalid_argument(
            "build_2fat_witness: need d >= 2, s >= 2, t >= 6, c >= 4, n >= 4");
    if (r + 1 >= p.c)
        throw std::invalid_argument("build_2fat_witness: connector length c must exceed ceil(t/4) + 1");

    const std::uint32_t n = p.n;
    HGraph h = build_h(n);
    const Vertex L = 1u << p.d;
    const Vertex off = a.gadget_offset;

    // Pattern vertex -> hub. The strands land on the bottom path so that the
    // strand from x_2 arrives above y_3's hub and vice versa; swapping the
    // two hub assignments turns that twisted picture into a model of H
    // itself (the swap is an automorphism of the two-cliques part).
    auto hub = [&](Vertex pv) -> Vertex {
        if (pv < n) return a.x_hubs[pv];
        Vertex j = pv - n;
        if (j == 1) j = 2;
        else if (j == 2) j = 1;
        return a.y_hubs[j];
    };

    MinorModel m;
    m.fatness = Rat(2);
    for (Vertex pv = 0; pv < 2 * n; ++pv)
        m.branch.push_back(neighborhood(a.graph, {hub(pv)}, Rat(r)));

    // clique-edge index in the sorted K_n edge list
    auto spoke_index = [&](Vertex i, Vertex j) {
        // edges (0,1),(0,2),...,(0,n-1),(1,2),...
        return std::size_t(i) * n - std::size_t(i) * (i + 1) / 2 + (j - i - 1);
    };
    // spoke positions r .. t+1-r: endpoints sit exactly on the two balls
    auto spoke_part = [&](const std::vector<Vertex>& spoke) {
        VertexSet out(spoke.begin() + r, spoke.end() - r);
        return normalize_set(out);
    };

    for (const Edge& e : h.graph.edges()) {
        VertexSet conn;
        if (e.v < n) {
            conn = spoke_part(a.left_spokes[spoke_index(e.u, e.v)]);
        } else if (e.u >= n) {
            Vertex i = hub(e.u) - a.y_hubs[0], j = hub(e.v) - a.y_hubs[0];
            if (i > j) std::swap(i, j);
            conn = spoke_part(a.right_spokes[spoke_index(i, j)]);
        } else if (e.u == 0) {
            // Z_1: both connector paths meet at the root (S_1 = T_1).
            append_tail(conn, a.x_connectors[0], r);
            append_tail(conn, a.y_connectors[0], r);
            conn = normalize_set(conn);
        } else if (e.u == 1) {
            // strand through the odd leaves: S_2 = p_1 ... T_3 = p_{2L+1}
            append_tail(conn, a.x_connectors[1], r);
            for (Vertex i = 1; i <= L - 1; i += 2) {
                append_all(conn, a.gadget.pendant_left[i - 1], off);
                append_all(conn, a.gadget.pendant_right[i - 1], off);
                if (i + 2 <= L - 1) append_all(conn, a.gadget.segments[2 * i + 1], off);
            }
            append_all(conn, a.gadget.segments[2 * L - 1], off);  // p_2L - p_{2L+1}
            append_tail(conn, a.y_connectors[2], r);
            conn = normalize_set(conn);
        } else {
            // strand through the even leaves: S_3 = p_2 ... T_2 = p_{2L+2}
            append_tail(conn, a.x_connectors[2], r);
            append_all(conn, a.gadget.segments[1], off);  // p_2 - p_3
            for (Vertex i = 2; i <= L; i += 2) {
                append_all(conn, a.gadget.pendant_left[i - 1], off);
                append_all(conn, a.gadget.pendant_right[i - 1], off);
                if (i + 2 <= L) append_all(conn, a.gadget.segments[2 * i + 1], off);
            }
            append_tail(conn, a.y_connectors[1], r);
            conn = normalize_set(conn);
        }
        m.connector.push_back(std::move(conn));
    }

    VerifyReport check = verify_model(a.graph, h.graph, m, Rat(2));
    if (!check.ok())
        throw std::logic_error("build_2fat_witness: internal verification failed at " +
                               part_name(h.graph, check.violation->a) + " / " +
                               part_name(h.graph, check.violation->b));
    return m;
}

}  // namespace coarse
