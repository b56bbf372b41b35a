#include "coarse/treedecomp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace coarse {

std::optional<TDViolation> validate(const Graph& g, const TreeDecomposition& td) {
    const std::size_t tn = td.tree.vertex_count();
    if (tn == 0 || td.tree.edge_count() != tn - 1 || td.bags.size() != tn)
        throw std::invalid_argument("validate: decomposition index structure is not a tree");
    {
        VertexSet all;
        for (Vertex v = 0; v < tn; ++v) all.push_back(v);
        if (!is_connected_set(td.tree, all))
            throw std::invalid_argument("validate: decomposition tree is disconnected");
    }
    for (const VertexSet& b : td.bags)
        for (Vertex v : b)
            if (v >= g.vertex_count())
                throw std::invalid_argument("validate: bag vertex out of range");

    std::vector<std::vector<Vertex>> occ(g.vertex_count());
    for (std::size_t x = 0; x < td.bags.size(); ++x)
        for (Vertex v : td.bags[x]) occ[v].push_back(static_cast<Vertex>(x));

    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (occ[v].empty()) return TDViolation{TDViolationKind::VertexMissing, v, {}};

    for (const Edge& e : g.edges()) {
        bool covered = false;
        const auto& smaller = occ[e.u].size() <= occ[e.v].size() ? occ[e.u] : occ[e.v];
        Vertex other = occ[e.u].size() <= occ[e.v].size() ? e.v : e.u;
        for (Vertex x : smaller)
            if (set_contains(td.bags[x], other)) {
                covered = true;
                break;
            }
        if (!covered) return TDViolation{TDViolationKind::EdgeUncovered, 0, e};
    }

    // A vertex set inside a tree is connected iff it spans |S| - 1 tree edges.
    std::vector<std::size_t> inner_edges(g.vertex_count(), 0);
    for (const Edge& te : td.tree.edges()) {
        const VertexSet& a = td.bags[te.u];
        const VertexSet& b = td.bags[te.v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else ++inner_edges[a[i]], ++i, ++j;
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (inner_edges[v] != occ[v].size() - 1)
            return TDViolation{TDViolationKind::OccurrenceDisconnected, v, {}};
    return std::nullopt;
}

std::int64_t width(const TreeDecomposition& td) {
    std::int64_t w = -1;
    for (const VertexSet& b : td.bags)
        w = std::max(w, static_cast<std::int64_t>(b.size()) - 1);
    return w;
}

namespace {

struct DecompBuilder {
    std::vector<VertexSet> bags;
    std::vector<Edge> tree_edges;

    Vertex add(VertexSet b) {
        bags.push_back(normalize_set(std::move(b)));
        return static_cast<Vertex>(bags.size() - 1);
    }
    Vertex add_linked(VertexSet b, Vertex parent) {
        Vertex id = add(std::move(b));
        tree_edges.push_back(make_edge(id, parent));
        return id;
    }
    TreeDecomposition finish() {
        TreeDecomposition td;
        td.tree = Graph(bags.size(), std::move(tree_edges));
        td.bags = std::move(bags);
        return td;
    }
};

// Shared recursion over the complete binary tree in heap order. The subtree
// over leaf interval [a, b] (0-based) exposes the boundary tokens ls(a) and
// rs(b): single leaves for the leaf-path host, thick pairs for the gadget.
// Each subtree's interface bag is {node} + its two boundary tokens; internal
// nodes add four more bags chaining the child interfaces together. Returns
// the interface bag id; leaf interface ids are recorded in leaf_iface.
template <typename SymL, typename SymR>
Vertex interval_decompose(DecompBuilder& out, Vertex x, std::size_t a, std::size_t b,
                          const SymL& ls, const SymR& rs, std::vector<Vertex>& leaf_iface) {
    auto bag = [&](std::initializer_list<Vertex> nodes,
                   std::initializer_list<VertexSet> syms) {
        VertexSet s(nodes);
        for (const VertexSet& t : syms) s.insert(s.end(), t.begin(), t.end());
        return s;
    };
    if (a == b) {
        Vertex id = out.add(bag({x}, {ls(a), rs(a)}));
        leaf_iface[a] = id;
        return id;
    }
    std::size_t mid = (a + b) / 2;
    Vertex c1 = 2 * x + 1, c2 = 2 * x + 2;
    Vertex i1 = interval_decompose(out, c1, a, mid, ls, rs, leaf_iface);
    Vertex i2 = interval_decompose(out, c2, mid + 1, b, ls, rs, leaf_iface);

    Vertex b3 = out.add_linked(bag({x, c1}, {ls(a), rs(mid)}), i1);
    Vertex b1 = out.add_linked(bag({x}, {ls(a), rs(mid), rs(b)}), b3);
    Vertex b2 = out.add_linked(bag({x}, {rs(mid), ls(mid + 1), rs(b)}), b1);
    Vertex b4 = out.add_linked(bag({x, c2}, {ls(mid + 1), rs(b)}), b2);
    out.tree_edges.push_back(make_edge(b4, i2));
    return out.add_linked(bag({x}, {ls(a), rs(b)}), b1);
}

// Bags C_0 = {u, w_1, v}, C_i = {w_i, w_{i+1}, v} chained off a bag already
// holding both endpoints; covers every edge of the path u, w_1..w_m, v.
void attach_chain(DecompBuilder& out, const std::vector<Vertex>& path, Vertex host_bag,
                  Vertex offset = 0) {
    if (path.size() < 3) return;  // plain edge, already covered
    Vertex u = offset + path.front(), v = offset + path.back();
    Vertex prev = out.add_linked({u, offset + path[1], v}, host_bag);
    for (std::size_t i = 1; i + 2 < path.size(); ++i)
        prev = out.add_linked({offset + path[i], offset + path[i + 1], v}, prev);
}

}  // namespace

TreeDecomposition decompose_tree_leaf_path(std::uint32_t d) {
    TreeLeafPath host = build_tree_leaf_path(d);
    DecompBuilder out;
    std::vector<Vertex> leaf_iface(host.leaves.size());
    auto sym = [&](std::size_t i) { return VertexSet{host.leaves[i]}; };
    interval_decompose(out, host.root, 0, host.leaves.size() - 1, sym, sym, leaf_iface);
    return out.finish();
}

TreeDecomposition decompose_n_gadget(const NGadget& ng) {
    const std::size_t L = ng.leaves.size();
    DecompBuilder out;
    std::vector<Vertex> leaf_iface(L);
    // leaf i hangs between the thick pairs m_{i+1} = {p_{2i+1}, p_{2i+2}} and
    // m_{i+2} (1-based p indices); those pairs are its boundary tokens
    auto pair = [&](std::size_t j) {  // m_{j+1}, 0-based j
        return VertexSet{ng.thick[2 * j], ng.thick[2 * j + 1]};
    };
    auto ls = [&](std::size_t i) { return pair(i); };
    auto rs = [&](std::size_t i) { return pair(i + 1); };
    interval_decompose(out, ng.root, 0, L - 1, ls, rs, leaf_iface);

    // chain bags for the subdivided pieces; every host bag choice below
    // contains both endpoints of its path
    for (std::size_t j = 0; j < ng.segments.size(); ++j) {
        // 0-based segment j joins p_{j+1}, p_{j+2}: for odd j these span the
        // pairs m_{(j+1)/2}, m_{(j+3)/2}, both in leaf bag (j-1)/2; for even
        // j both endpoints lie inside the single pair m_{j/2+1}
        std::size_t host_leaf = (j % 2 == 1) ? (j - 1) / 2 : std::min(j / 2, L - 1);
        attach_chain(out, ng.segments[j], leaf_iface[host_leaf]);
    }
    for (std::size_t i = 0; i < L; ++i) {
        attach_chain(out, ng.pendant_left[i], leaf_iface[i]);
        attach_chain(out, ng.pendant_right[i], leaf_iface[i]);
    }
    return out.finish();
}

std::uint32_t exact_treewidth(const Graph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("exact_treewidth: empty graph");
    if (cap > 25) throw std::invalid_argument("exact_treewidth: cap above hard limit 25");
    if (n > cap) throw std::invalid_argument("exact_treewidth: graph exceeds cap");

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;

    // Vertices outside S u {v} seen from v through the eliminated set S:
    // the future clique v acquires when eliminated after S.
    auto q_value = [&](std::uint32_t S, std::uint32_t v_bit, Vertex v) {
        std::uint32_t reach = v_bit;
        std::uint32_t seen = adj[v];
        std::uint32_t frontier = adj[v] & S & ~reach;
        while (frontier) {
            reach |= frontier;
            std::uint32_t nb = 0;
            std::uint32_t f = frontier;
            while (f) {
                Vertex w = static_cast<Vertex>(std::countr_zero(f));
                f &= f - 1;
                nb |= adj[w];
            }
            seen |= nb;
            frontier = nb & S & ~reach;
        }
        return static_cast<std::uint32_t>(std::popcount(seen & ~S & ~v_bit));
    };

    std::vector<std::uint8_t> f(std::size_t(1) << n, 0);
    for (std::uint32_t S = 1; S <= full; ++S) {
        std::uint32_t best = 0xff;
        std::uint32_t rest = S;
        while (rest) {
            std::uint32_t v_bit = rest & (~rest + 1);
            Vertex v = static_cast<Vertex>(std::countr_zero(v_bit));
            rest &= rest - 1;
            std::uint32_t prev = S ^ v_bit;
            std::uint32_t cand = std::max<std::uint32_t>(f[prev], q_value(prev, v_bit, v));
            best = std::min(best, cand);
        }
        f[S] = static_cast<std::uint8_t>(best);
    }
    return f[full];
}

}  // namespace coarse
