#include "coarse/menger.hpp"

#include <algorithm>
#include <stdexcept>

namespace coarse {

namespace {

void check_query(const Graph& g, const SpreadPathQuery& qy) {
    if (g.weighted())
        throw std::invalid_argument("spread paths: weighted hosts are not supported");
    if (qy.s.empty() || qy.t.empty())
        throw std::invalid_argument("spread paths: empty endpoint set");
    for (Vertex v : qy.s)
        if (v >= g.vertex_count()) throw std::invalid_argument("spread paths: s out of range");
    for (Vertex v : qy.t)
        if (v >= g.vertex_count()) throw std::invalid_argument("spread paths: t out of range");
    if (qy.k == 0) throw std::invalid_argument("spread paths: k must be positive");
    if (qy.budget.node_limit == 0)
        throw std::invalid_argument("spread paths: node budget must be positive");
}

// A path and its reversal are the same subgraph; keep the lexicographically
// smaller sequence when both directions qualify as an (s,t)-path.
bool is_canonical(const std::vector<Vertex>& path, const SpreadPathQuery& qy) {
    if (!set_contains(qy.s, path.back()) || !set_contains(qy.t, path.front())) return true;
    return !std::lexicographical_compare(path.rbegin(), path.rend(), path.begin(), path.end());
}

Dist min_pairwise(const Graph& g, const std::vector<std::vector<Vertex>>& paths) {
    Dist best = Dist::infinity();
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            VertexSet a(paths[i]), b(paths[j]);
            best = std::min(best, set_distance(g, normalize_set(std::move(a)),
                                               normalize_set(std::move(b))));
        }
    return best;
}

struct SpreadSearcher {
    const Graph& g;
    const SpreadPathQuery& qy;
    std::vector<std::vector<Vertex>> sorted_adj;
    std::vector<std::uint16_t> ban_count;
    std::vector<char> in_path;
    std::vector<Vertex> path;
    std::vector<std::vector<Vertex>> chosen;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    bool found = false;

    explicit SpreadSearcher(const Graph& host, const SpreadPathQuery& query)
        : g(host), qy(query), ban_count(host.vertex_count(), 0),
          in_path(host.vertex_count(), 0) {
        chosen.reserve(qy.k);  // slots hold pointers into chosen; no reallocation

        sorted_adj.resize(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto nb = g.neighbors(v);
            sorted_adj[v].assign(nb.begin(), nb.end());
            std::sort(sorted_adj[v].begin(), sorted_adj[v].end());
        }
    }

    // Depth-first path extension in ascending vertex order, which emits paths
    // in lexicographic sequence order. diverged_gt tracks the comparison with
    // the previous slot's path: while the prefix matches we may still end up
    // on either side, once it diverges downward the whole subtree is smaller
    // and is skipped at the call site.
    void extend(Vertex v, const std::vector<Vertex>* prev, bool diverged_gt) {
        if (found || out_of_budget) return;
        if (++nodes > qy.budget.node_limit) {
            out_of_budget = true;
            return;
        }
        path.push_back(v);
        in_path[v] = 1;
        if ((prev == nullptr || diverged_gt) && set_contains(qy.t, v) &&
            is_canonical(path, qy))
            accept_path();
        for (Vertex w : sorted_adj[v]) {
            if (found || out_of_budget) break;
            if (in_path[w] || ban_count[w] != 0) continue;
            bool next_gt = diverged_gt;
            if (prev != nullptr && !next_gt) {
                std::size_t pos = path.size();
                if (pos >= prev->size() || w > (*prev)[pos]) next_gt = true;
                else if (w < (*prev)[pos]) continue;  // subtree sorts below prev
            }
            extend(w, prev, next_gt);
        }
        in_path[v] = 0;
        path.pop_back();
    }

    void accept_path() {
        chosen.push_back(path);
        if (chosen.size() == qy.k) {
            found = true;
            return;
        }
        std::vector<Vertex> saved_path = std::move(path);
        std::vector<char> saved_in = std::move(in_path);
        path.clear();
        in_path.assign(g.vertex_count(), 0);

        VertexSet zone;
        if (qy.min_distance >= 1) {
            VertexSet src(chosen.back());
            auto dist = bfs_distances(g, normalize_set(std::move(src)),
                                      static_cast<std::int64_t>(qy.min_distance) - 1);
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (dist[v] >= 0) zone.push_back(v);
        }
        for (Vertex v : zone) ++ban_count[v];
        run_slot(&chosen.back());
        for (Vertex v : zone) --ban_count[v];

        path = std::move(saved_path);
        in_path = std::move(saved_in);
        if (!found) chosen.pop_back();
    }

    void run_slot(const std::vector<Vertex>* prev) {
        for (Vertex start : qy.s) {
            if (found || out_of_budget) return;
            if (ban_count[start] != 0) continue;
            bool diverged_gt = false;
            if (prev != nullptr) {
                if (start > prev->front()) diverged_gt = true;
                else if (start < prev->front()) continue;
            }
            extend(start, prev, diverged_gt);
        }
    }
};

}  // namespace

SpreadVerdict find_spread_paths(const Graph& g, const SpreadPathQuery& qy) {
    check_query(g, qy);
    SpreadSearcher search(g, qy);
    search.run_slot(nullptr);
    if (search.found) {
        SpreadPathWitness w{std::move(search.chosen), Dist(0)};
        w.min_pairwise_distance = min_pairwise(g, w.paths);
        if (w.min_pairwise_distance < Dist(qy.min_distance))
            throw std::logic_error("spread paths: witness failed re-verification");
        return {VerdictKind::Found, std::move(w)};
    }
    if (search.out_of_budget) return {VerdictKind::Inconclusive, std::nullopt};
    return {VerdictKind::NoneExhaustive, std::nullopt};
}

SpreadVerdict triple_oracle(const Graph& g, const SpreadPathQuery& qy,
                            std::size_t path_length_cap) {
    check_query(g, qy);
    const std::size_t n = g.vertex_count();
    if (n > 40) throw std::invalid_argument("triple_oracle: host too large");
    const std::size_t cap = path_length_cap == 0 ? n : path_length_cap;

    // every simple (s,t)-path with at most cap vertices, canonical direction
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::uint64_t> vset;
    std::vector<Vertex> cur;
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, Vertex v) -> void {
        cur.push_back(v);
        used[v] = 1;
        if (set_contains(qy.t, v) && is_canonical(cur, qy)) {
            std::uint64_t mask = 0;
            for (Vertex u : cur) mask |= std::uint64_t(1) << u;
            paths.push_back(cur);
            vset.push_back(mask);
        }
        if (cur.size() < cap)
            for (Vertex w : g.neighbors(v))
                if (!used[w]) self(self, w);
        used[v] = 0;
        cur.pop_back();
    };
    for (Vertex start : qy.s) dfs(dfs, start);

    // compatibility masks: which vertices are too close to each path
    std::vector<std::uint64_t> zone(paths.size(), 0);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (qy.min_distance == 0) continue;
        VertexSet src(paths[i]);
        auto dist = bfs_distances(g, normalize_set(std::move(src)),
                                  static_cast<std::int64_t>(qy.min_distance) - 1);
        for (Vertex v = 0; v < n; ++v)
            if (dist[v] >= 0) zone[i] |= std::uint64_t(1) << v;
    }

    std::vector<std::size_t> pick;
    auto choose = [&](auto&& self, std::size_t from) -> bool {
        if (pick.size() == qy.k) return true;
        for (std::size_t i = from; i < paths.size(); ++i) {
            bool ok = true;
            for (std::size_t j : pick)
                if ((zone[j] & vset[i]) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(i);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (choose(choose, 0)) {
        SpreadPathWitness w;
        for (std::size_t i : pick) w.paths.push_back(paths[i]);
        w.min_pairwise_distance = min_pairwise(g, w.paths);
        return {VerdictKind::Found, std::move(w)};
    }
    if (cap < n)
        throw std::invalid_argument("triple_oracle: cap below |V| cannot certify a negative");
    return {VerdictKind::NoneExhaustive, std::nullopt};
}

}  // namespace coarse
