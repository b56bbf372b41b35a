#include "coarse/fatminor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace coarse {

std::string part_name(const Graph& pattern, PartRef p) {
    if (!p.is_connector) return "branch " + std::to_string(p.index);
    const Edge& e = pattern.edges()[p.index];
    return "connector " + std::to_string(e.u) + "-" + std::to_string(e.v);
}

namespace {

// Vertices at distance < bound from the part (the part itself included).
VertexSet vertices_strictly_within(const Graph& g, const VertexSet& part, const Rat& bound) {
    VertexSet out;
    if (bound <= Rat(0)) return out;
    if (!g.weighted()) {
        // integer distances: d < bound  <=>  d <= ceil(bound) - 1
        std::int64_t cap = bound.numerator() / bound.denominator();
        if (bound.denominator() == 1) cap -= 1;
        auto d = bfs_distances(g, part, cap);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (d[v] >= 0) out.push_back(v);
    } else {
        DistanceTable t = distances(g, part);  // weighted hosts are small here
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (t.dist[v] < Dist(bound)) out.push_back(v);
    }
    return out;
}

bool pair_excused(const Graph& pattern, std::uint32_t nv, std::uint32_t x, std::uint32_t y) {
    // x < y in part order; excused pairs are branch(v) / connector(e) with v an end of e.
    if (x >= nv || y < nv) return false;
    const Edge& e = pattern.edges()[y - nv];
    return e.u == x || e.v == x;
}

}  // namespace

VerifyReport verify_model(const Graph& g, const Graph& pattern, const MinorModel& m,
                          const Rat& k) {
    const std::uint32_t nv = static_cast<std::uint32_t>(pattern.vertex_count());
    const std::uint32_t ne = static_cast<std::uint32_t>(pattern.edge_count());
    if (nv == 0) throw std::invalid_argument("verify_model: empty pattern");
    if (m.branch.size() != nv || m.connector.size() != ne)
        throw std::invalid_argument("verify_model: model/pattern index mismatch");
    if (k < Rat(0)) throw std::invalid_argument("verify_model: negative fatness");

    const std::uint32_t nparts = nv + ne;
    auto part = [&](std::uint32_t i) -> const VertexSet& {
        return i < nv ? m.branch[i] : m.connector[i - nv];
    };
    auto ref = [&](std::uint32_t i) {
        return i < nv ? PartRef{false, i} : PartRef{true, i - nv};
    };

    VerifyReport report;
    for (std::uint32_t i = 0; i < nparts; ++i) {
        const VertexSet& p = part(i);
        if (p.empty()) {
            report.violation = ModelViolation{ViolationKind::MissingPart, ref(i), ref(i), {}};
            return report;
        }
        for (Vertex v : p)
            if (v >= g.vertex_count())
                throw std::invalid_argument("verify_model: part vertex out of range");
        if (!is_connected_set(g, p)) {
            report.violation = ModelViolation{ViolationKind::DisconnectedPart, ref(i), ref(i), {}};
            return report;
        }
    }
    for (std::uint32_t e = 0; e < ne; ++e) {
        const Edge& pe = pattern.edges()[e];
        for (Vertex end : {pe.u, pe.v}) {
            if (!sets_intersect(m.connector[e], m.branch[end])) {
                report.violation = ModelViolation{ViolationKind::MissingIncidence,
                                                  PartRef{false, end}, PartRef{true, e}, {}};
                return report;
            }
        }
    }

    // Separation: one capped sweep per part; pair distances above k are not needed.
    std::vector<std::vector<std::uint32_t>> parts_of(g.vertex_count());
    for (std::uint32_t i = 0; i < nparts; ++i)
        for (Vertex v : part(i)) parts_of[v].push_back(i);

    std::map<std::pair<std::uint32_t, std::uint32_t>, Rat> pair_min;
    for (std::uint32_t x = 0; x < nparts; ++x) {
        if (!g.weighted()) {
            std::int64_t cap = k.numerator() / k.denominator();  // d <= k <=> d <= floor(k)
            auto d = bfs_distances(g, part(x), cap);
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (d[v] < 0 || parts_of[v].empty()) continue;
                for (std::uint32_t y : parts_of[v]) {
                    if (y <= x) continue;
                    auto key = std::make_pair(x, y);
                    auto it = pair_min.find(key);
                    if (it == pair_min.end() || Rat(d[v]) < it->second)
                        pair_min[key] = Rat(d[v]);
                }
            }
        } else {
            DistanceTable t = distances(g, part(x));
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (t.dist[v].is_infinite() || t.dist[v] > Dist(k) || parts_of[v].empty())
                    continue;
                for (std::uint32_t y : parts_of[v]) {
                    if (y <= x) continue;
                    auto key = std::make_pair(x, y);
                    auto it = pair_min.find(key);
                    if (it == pair_min.end() || t.dist[v].value() < it->second)
                        pair_min[key] = t.dist[v].value();
                }
            }
        }
    }

    for (const auto& [key, d] : pair_min) {
        if (pair_excused(pattern, nv, key.first, key.second)) continue;
        if (!report.min_separation || d < *report.min_separation) {
            report.min_separation = d;
            report.min_pair_a = ref(key.first);
            report.min_pair_b = ref(key.second);
        }
        if (d < k && !report.violation) {
            report.violation = ModelViolation{ViolationKind::SeparationTooSmall, ref(key.first),
                                              ref(key.second), Dist(d)};
        }
    }
    return report;
}

namespace {

// Shared backtracking engine for find_fat_minor and exhaustive_oracle.
// NormalForm restricts connectors to paths whose endpoints lie in the two
// branch sets and whose interior avoids all branch sets; General enumerates
// arbitrary connected connector sets (definition only, no pruning beyond it).
enum class SearchMode { NormalForm, General };

class ModelSearcher {
public:
    ModelSearcher(const Graph& g, const Graph& h, Rat k, std::uint64_t budget, SearchMode mode)
        : g_(g), h_(h), k_(std::move(k)), budget_(budget), mode_(mode),
          nv_(static_cast<std::uint32_t>(h.vertex_count())),
          ne_(static_cast<std::uint32_t>(h.edge_count())) {
        branch_.resize(nv_);
        conn_.resize(ne_);
        in_branch_.assign(g_.vertex_count(), -1);
        branch_block_.assign(g_.vertex_count(), 0);
        in_path_.assign(g_.vertex_count(), 0);
    }

    SearchVerdict run() {
        if (nv_ == 0) throw std::invalid_argument("fat minor search: empty pattern");
        if (budget_ == 0) throw std::invalid_argument("fat minor search: budget must be finite and positive");
        place_branch(0);
        if (found_) return {VerdictKind::Found, std::move(result_)};
        if (out_of_budget_) return {VerdictKind::Inconclusive, std::nullopt};
        if (g_.weighted()) return {VerdictKind::Inconclusive, std::nullopt};
        return {VerdictKind::NoneExhaustive, std::nullopt};
    }

private:
    const Graph& g_;
    const Graph& h_;
    Rat k_;
    std::uint64_t budget_;
    SearchMode mode_;
    std::uint32_t nv_, ne_;

    std::uint64_t used_ = 0;
    bool found_ = false;
    bool out_of_budget_ = false;
    std::optional<MinorModel> result_;

    std::vector<VertexSet> branch_;
    std::vector<VertexSet> conn_;
    std::vector<int> in_branch_;          // -1 or owning pattern vertex
    std::vector<int> branch_block_;       // #placed branches with dist < k to v
    std::vector<char> in_path_;
    std::vector<VertexSet> branch_near_;  // per placed branch: vertices at dist < k
    std::vector<VertexSet> conn_near_;    // per placed connector
    std::vector<int> conn_block_;         // lazily sized; #placed connectors with dist < k

    bool spend() {
        if (found_ || out_of_budget_) return false;
        if (++used_ > budget_) {
            out_of_budget_ = true;
            return false;
        }
        return true;
    }

    bool branch_vertex_allowed(Vertex v) const {
        return in_branch_[v] < 0 && branch_block_[v] == 0;
    }

    // Enumerates every connected subset of the vertices accepted by `allowed`
    // exactly once (each from its minimum vertex), invoking `visit` with the
    // grown set. `visit` must not mutate searcher enumeration state.
    template <typename Allowed, typename Visit>
    void enumerate_connected_sets(const Allowed& allowed, const Visit& visit) {
        // Local scratch: `visit` may recurse into a nested enumeration.
        std::vector<char> banned(g_.vertex_count(), 0);
        std::vector<char> in_set(g_.vertex_count(), 0);
        VertexSet set;
        for (Vertex seed = 0; seed < g_.vertex_count(); ++seed) {
            if (found_ || out_of_budget_) return;
            if (!allowed(seed)) continue;
            set.assign(1, seed);
            in_set[seed] = 1;
            std::vector<Vertex> ext;
            for (Vertex w : g_.neighbors(seed))
                if (w > seed && allowed(w)) ext.push_back(w);
            grow_set(seed, set, std::move(ext), banned, in_set, allowed, visit);
            in_set[seed] = 0;
            banned[seed] = 1;
        }
    }

    template <typename Allowed, typename Visit>
    void grow_set(Vertex seed, VertexSet& set, std::vector<Vertex> ext, std::vector<char>& banned,
                  std::vector<char>& in_set, const Allowed& allowed, const Visit& visit) {
        if (!spend()) return;
        visit(set);
        if (found_ || out_of_budget_) return;
        std::vector<Vertex> local_banned;
        for (std::size_t idx = 0; idx < ext.size(); ++idx) {
            if (found_ || out_of_budget_) break;
            Vertex u = ext[idx];
            if (banned[u]) continue;
            std::vector<Vertex> next_ext;
            next_ext.reserve(ext.size());
            for (std::size_t j = idx + 1; j < ext.size(); ++j) next_ext.push_back(ext[j]);
            for (Vertex w : g_.neighbors(u)) {
                if (w > seed && allowed(w) && !banned[w] && !in_set[w] &&
                    std::find(next_ext.begin(), next_ext.end(), w) == next_ext.end())
                    next_ext.push_back(w);
            }
            set.push_back(u);
            in_set[u] = 1;
            grow_set(seed, set, std::move(next_ext), banned, in_set, allowed, visit);
            in_set[u] = 0;
            set.pop_back();
            banned[u] = 1;
            local_banned.push_back(u);
        }
        for (Vertex u : local_banned) banned[u] = 0;
    }

    void place_branch(std::uint32_t i) {
        if (found_ || out_of_budget_) return;
        if (i == nv_) {
            conn_block_.assign(g_.vertex_count(), 0);
            place_connector(0);
            return;
        }
        enumerate_connected_sets([&](Vertex v) { return branch_vertex_allowed(v); },
                                 [&](const VertexSet& set) { commit_branch(i, set); });
    }

    void commit_branch(std::uint32_t i, const VertexSet& set_raw) {
        VertexSet set = normalize_set(set_raw);
        branch_[i] = set;
        for (Vertex v : set) in_branch_[v] = static_cast<int>(i);
        VertexSet near = vertices_strictly_within(g_, set, k_);
        for (Vertex v : near) ++branch_block_[v];
        branch_near_.push_back(std::move(near));
        place_branch(i + 1);
        for (Vertex v : branch_near_.back()) --branch_block_[v];
        branch_near_.pop_back();
        for (Vertex v : branch_[i]) in_branch_[v] = -1;
        branch_[i].clear();
    }

    void finish() {
        MinorModel m;
        m.branch = branch_;
        m.connector = conn_;
        m.fatness = k_;
        // Soundness: never report a witness the verifier rejects.
        if (verify_model(g_, h_, m, k_).ok()) {
            result_ = std::move(m);
            found_ = true;
        }
    }

    void place_connector(std::uint32_t ei) {
        if (found_ || out_of_budget_) return;
        if (ei == ne_) {
            finish();
            return;
        }
        if (mode_ == SearchMode::NormalForm)
            place_connector_path(ei);
        else
            place_connector_set(ei);
    }

    // Vertices unusable for connector ei because of a non-end branch set.
    std::vector<char> connector_near_branch(std::uint32_t ei) const {
        const Edge& pe = h_.edges()[ei];
        std::vector<char> blocked(g_.vertex_count(), 0);
        for (std::uint32_t w = 0; w < nv_; ++w) {
            if (w == pe.u || w == pe.v) continue;
            for (Vertex v : branch_near_[w]) blocked[v] = 1;
        }
        return blocked;
    }

    void commit_connector(std::uint32_t ei, const VertexSet& set) {
        conn_[ei] = set;
        VertexSet near = vertices_strictly_within(g_, set, k_);
        for (Vertex v : near) ++conn_block_[v];
        conn_near_.push_back(std::move(near));
        place_connector(ei + 1);
        for (Vertex v : conn_near_.back()) --conn_block_[v];
        conn_near_.pop_back();
        conn_[ei].clear();
    }

    void place_connector_path(std::uint32_t ei) {
        const Edge& pe = h_.edges()[ei];
        std::vector<char> blocked = connector_near_branch(ei);
        std::vector<Vertex> path;
        for (Vertex start : branch_[pe.u]) {
            if (found_ || out_of_budget_) return;
            if (conn_block_[start] > 0) continue;
            path.assign(1, start);
            in_path_[start] = 1;
            extend_path(ei, pe, path, blocked);
            in_path_[start] = 0;
        }
    }

    void extend_path(std::uint32_t ei, const Edge& pe, std::vector<Vertex>& path,
                     const std::vector<char>& blocked) {
        if (!spend()) return;
        Vertex cur = path.back();
        for (Vertex w : g_.neighbors(cur)) {
            if (found_ || out_of_budget_) return;
            if (in_path_[w] || conn_block_[w] > 0) continue;
            int owner = in_branch_[w];
            if (owner == static_cast<int>(pe.v) && w != path.front()) {
                path.push_back(w);
                commit_connector(ei, normalize_set(path));
                path.pop_back();
            } else if (owner < 0 && !blocked[w]) {
                path.push_back(w);
                in_path_[w] = 1;
                extend_path(ei, pe, path, blocked);
                in_path_[w] = 0;
                path.pop_back();
            }
        }
    }

    // General mode: connectors are arbitrary connected sets intersecting both
    // end branch sets, at distance >= k from non-end branches and all other
    // connectors. Used when no normal form is available (k < 1) and by the oracle.
    void place_connector_set(std::uint32_t ei) {
        const Edge& pe = h_.edges()[ei];
        std::vector<char> blocked = connector_near_branch(ei);
        auto allowed = [&](Vertex v) {
            if (conn_block_[v] > 0) return false;
            int owner = in_branch_[v];
            if (owner == static_cast<int>(pe.u) || owner == static_cast<int>(pe.v)) return true;
            if (k_ > Rat(0) && owner >= 0) return false;  // inside a non-end branch: dist 0
            return !blocked[v];
        };
        enumerate_connected_sets(allowed, [&](const VertexSet& set) {
            VertexSet sorted = normalize_set(set);
            if (sets_intersect(sorted, branch_[pe.u]) && sets_intersect(sorted, branch_[pe.v]))
                commit_connector(ei, sorted);
        });
    }
};

}  // namespace

SearchVerdict find_fat_minor(const Graph& g, const Graph& pattern, const Rat& k,
                             SearchBudget budget) {
    SearchMode mode = (k >= Rat(1)) ? SearchMode::NormalForm : SearchMode::General;
    ModelSearcher searcher(g, pattern, k, budget.node_limit, mode);
    return searcher.run();
}

SearchVerdict exhaustive_oracle(const Graph& g, const Graph& pattern, const Rat& k,
                                std::size_t cap) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument("exhaustive_oracle: host exceeds small-instance cap");
    ModelSearcher searcher(g, pattern, k, std::uint64_t(-1) / 2, SearchMode::General);
    SearchVerdict v = searcher.run();
    // The budget is effectively unbounded at this scale; Inconclusive can only
    // mean a weighted host, which the oracle does not support.
    if (v.kind == VerdictKind::Inconclusive && g.weighted())
        throw std::invalid_argument("exhaustive_oracle: weighted host not supported");
    return v;
}

MergedSets merge_close_sets(const Graph& g, const std::vector<VertexSet>& xs, const Rat& eps) {
    if (xs.empty()) throw std::invalid_argument("merge_close_sets: empty input list");
    if (eps <= Rat(0)) throw std::invalid_argument("merge_close_sets: eps must be positive");
    std::vector<VertexSet> clusters;
    clusters.reserve(xs.size());
    for (const VertexSet& x : xs) {
        VertexSet s = normalize_set(x);
        if (s.empty() || !is_connected_set(g, s))
            throw std::invalid_argument("merge_close_sets: input sets must be non-empty and connected");
        clusters.push_back(std::move(s));
    }
    std::vector<std::size_t> owner(xs.size());
    for (std::size_t i = 0; i < owner.size(); ++i) owner[i] = i;
    std::vector<char> alive(xs.size(), 1);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < clusters.size() && !changed; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < clusters.size() && !changed; ++j) {
                if (!alive[j]) continue;
                if (set_distance(g, clusters[i], clusters[j]) < Dist(eps)) {
                    clusters[i] = set_union(neighborhood(g, clusters[i], eps), clusters[j]);
                    alive[j] = 0;
                    owner[j] = i;
                    changed = true;
                }
            }
        }
    }

    MergedSets out;
    std::vector<std::size_t> position(xs.size(), 0);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (alive[i]) {
            position[i] = out.sets.size();
            out.sets.push_back(clusters[i]);
        }
    }
    out.index_map.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::size_t root = i;
        while (!alive[root]) root = owner[root];
        out.index_map[i] = position[root];
    }
    return out;
}

MinorModel inflate_model(const Graph& g, const Graph& pattern, std::uint32_t k,
                         const MinorModel& m3) {
    if (k < 1) throw std::invalid_argument("inflate_model: k must be positive");
    Graph power = power_graph(g, k);
    VerifyReport pre = verify_model(power, pattern, m3, Rat(3));
    if (!pre.ok())
        throw std::invalid_argument("inflate_model: input does not verify as a 3-fat model in g^k");

    const Rat radius(k / 2);  // floor, as integers
    MinorModel out;
    out.fatness = Rat(static_cast<std::int64_t>(k));
    out.branch.reserve(m3.branch.size());
    for (const VertexSet& b : m3.branch) out.branch.push_back(neighborhood(g, b, radius));

    for (std::size_t e = 0; e < pattern.edges().size(); ++e) {
        const Edge& pe = pattern.edges()[e];
        VertexSet region = neighborhood(g, m3.connector[e], radius);
        InducedSubgraph sub = induced_subgraph(g, region);
        std::vector<std::int64_t> local(g.vertex_count(), -1);
        for (std::size_t i = 0; i < sub.original.size(); ++i)
            local[sub.original[i]] = static_cast<std::int64_t>(i);
        VertexSet from, to;
        for (Vertex v : out.branch[pe.u])
            if (local[v] >= 0) from.push_back(static_cast<Vertex>(local[v]));
        for (Vertex v : out.branch[pe.v])
            if (local[v] >= 0) to.push_back(static_cast<Vertex>(local[v]));
        if (from.empty() || to.empty())
            throw std::logic_error("inflate_model: incidence lost during inflation");
        // Shortest path inside the inflated connector region between the two
        // inflated branch sets.
        std::vector<std::int64_t> parent(sub.graph.vertex_count(), -1);
        std::deque<Vertex> queue;
        std::vector<char> seen(sub.graph.vertex_count(), 0);
        for (Vertex s : from) {
            seen[s] = 1;
            queue.push_back(s);
        }
        std::int64_t hit = -1;
        VertexSet to_sorted = normalize_set(to);
        for (Vertex s : from)
            if (set_contains(to_sorted, s)) hit = s;
        while (hit < 0 && !queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : sub.graph.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                if (set_contains(to_sorted, w)) {
                    hit = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (hit < 0) throw std::logic_error("inflate_model: connector region disconnected");
        VertexSet path;
        for (std::int64_t v = hit; v >= 0; v = parent[v])
            path.push_back(sub.original[v]);
        out.connector.push_back(normalize_set(path));
    }
    return out;
}

}  // namespace coarse
