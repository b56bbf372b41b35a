#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coarse/constructions.hpp"
#include "coarse/menger.hpp"
#include "util.hpp"

using namespace coarse;
using namespace coarse::testutil;

namespace {

void check_witness(const Graph& g, const SpreadPathQuery& qy, const SpreadVerdict& v) {
    REQUIRE(v.kind == VerdictKind::Found);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->paths.size() == qy.k);
    for (const auto& p : v.witness->paths) {
        REQUIRE_FALSE(p.empty());
        CHECK(set_contains(qy.s, p.front()));
        CHECK(set_contains(qy.t, p.back()));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
    }
    CHECK(v.witness->min_pairwise_distance >= Dist(qy.min_distance));
}

SpreadPathQuery random_query(const Graph& g, std::mt19937& rng, std::uint32_t k,
                             std::uint32_t d) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count() - 1));
    SpreadPathQuery qy;
    for (int i = 0; i < 3; ++i) {
        qy.s.push_back(pick(rng));
        qy.t.push_back(pick(rng));
    }
    qy.s = normalize_set(qy.s);
    qy.t = normalize_set(qy.t);
    qy.k = k;
    qy.min_distance = d;
    return qy;
}

}  // namespace

TEST_CASE("query validation") {
    Graph p5 = path_graph(5);
    CHECK_THROWS_AS(find_spread_paths(p5, {{}, {4}, 1, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(find_spread_paths(p5, {{0}, {9}, 1, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(find_spread_paths(p5, {{0}, {4}, 0, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(find_spread_paths(p5, {{0}, {4}, 1, 0, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(find_spread_paths(scale_weights(p5, Rat(2)), {{0}, {4}, 1, 0, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(triple_oracle(complete_graph(41), {{0}, {1}, 1, 0, {}}),
                    std::invalid_argument);
}

TEST_CASE("disjoint components give far paths") {
    // three copies of P_5 side by side
    std::vector<Edge> edges;
    for (Vertex c = 0; c < 3; ++c)
        for (Vertex i = 0; i + 1 < 5; ++i)
            edges.push_back({static_cast<Vertex>(5 * c + i), static_cast<Vertex>(5 * c + i + 1)});
    Graph g(15, std::move(edges));
    SpreadPathQuery qy{{0, 5, 10}, {4, 9, 14}, 3, 3, {}};
    auto v = find_spread_paths(g, qy);
    check_witness(g, qy, v);
    CHECK(v.witness->min_pairwise_distance.is_infinite());
    CHECK(triple_oracle(g, qy).kind == VerdictKind::Found);
}

TEST_CASE("single path admits only one path") {
    Graph p7 = path_graph(7);
    SpreadPathQuery one{{0}, {6}, 1, 0, {}};
    check_witness(p7, one, find_spread_paths(p7, one));

    for (std::uint32_t d : {0u, 1u, 3u}) {
        SpreadPathQuery two{{0}, {6}, 2, d, {}};
        CHECK(find_spread_paths(p7, two).kind == VerdictKind::NoneExhaustive);
        CHECK(triple_oracle(p7, two).kind == VerdictKind::NoneExhaustive);
    }
}

TEST_CASE("k = 1 reduces to reachability") {
    Graph two(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(find_spread_paths(two, {{0}, {2}, 1, 0, {}}).kind == VerdictKind::Found);
    CHECK(find_spread_paths(two, {{0}, {5}, 1, 0, {}}).kind == VerdictKind::NoneExhaustive);
    CHECK(find_spread_paths(two, {{0, 3}, {5}, 1, 0, {}}).kind == VerdictKind::Found);
    CHECK(triple_oracle(two, {{0}, {5}, 1, 0, {}}).kind == VerdictKind::NoneExhaustive);
}

TEST_CASE("distinct paths are counted as subgraphs") {
    // C_6 has exactly two simple paths between opposite vertices
    Graph c6 = cycle_graph(6);
    CHECK(find_spread_paths(c6, {{0}, {3}, 2, 0, {}}).kind == VerdictKind::Found);
    CHECK(find_spread_paths(c6, {{0}, {3}, 3, 0, {}}).kind == VerdictKind::NoneExhaustive);
    // both of those paths pass through 0 and 3, so any positive separation fails
    CHECK(find_spread_paths(c6, {{0}, {3}, 2, 1, {}}).kind == VerdictKind::NoneExhaustive);
    // opposite edges of the cycle are separated by 2
    CHECK(find_spread_paths(c6, {{1, 4}, {2, 5}, 2, 2, {}}).kind == VerdictKind::Found);
    CHECK(find_spread_paths(c6, {{1, 4}, {2, 5}, 2, 3, {}}).kind == VerdictKind::NoneExhaustive);

    // with s = t = both endpoints, a path and its reversal are one path:
    // P_5 carries [0], [4] and 0..4, nothing else
    Graph p5 = path_graph(5);
    SpreadPathQuery both{{0, 4}, {0, 4}, 3, 0, {}};
    CHECK(find_spread_paths(p5, both).kind == VerdictKind::Found);
    CHECK(triple_oracle(p5, both).kind == VerdictKind::Found);
    both.k = 4;
    CHECK(find_spread_paths(p5, both).kind == VerdictKind::NoneExhaustive);
    CHECK(triple_oracle(p5, both).kind == VerdictKind::NoneExhaustive);
}

TEST_CASE("budget exhaustion is reported") {
    SpreadPathQuery qy{{0}, {5}, 2, 0, {3}};
    CHECK(find_spread_paths(complete_graph(8), qy).kind == VerdictKind::Inconclusive);
    qy.budget = {};
    CHECK(find_spread_paths(complete_graph(8), qy).kind == VerdictKind::Found);
}

TEST_CASE("oracle cap handling") {
    Graph p5 = path_graph(5);
    CHECK(triple_oracle(p5, {{0}, {4}, 1, 0, {}}, 5).kind == VerdictKind::Found);
    // a cap that cuts off the only path cannot certify the negative
    CHECK_THROWS_AS(triple_oracle(p5, {{0}, {4}, 1, 0, {}}, 3), std::invalid_argument);
}

TEST_CASE("gadget query matches the oracle") {
    auto ng = build_n_gadget({2, 2});
    for (std::uint32_t d : {0u, 2u, 3u, 4u}) {
        SpreadPathQuery qy{normalize_set({ng.S.begin(), ng.S.end()}),
                           normalize_set({ng.T.begin(), ng.T.end()}), 3, d, {}};
        auto search = find_spread_paths(ng.graph, qy);
        auto oracle = triple_oracle(ng.graph, qy);
        CHECK(search.kind == oracle.kind);
        if (search.kind == VerdictKind::Found) check_witness(ng.graph, qy, search);
    }
}

TEST_CASE("search agrees with the oracle on random instances") {
    std::mt19937 rng(5151);
    int found = 0, none = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> size(6, 14);
        Graph g = random_connected_graph(size(rng), 0.12, rng);
        std::uniform_int_distribution<std::uint32_t> kd(2, 3), dd(0, 4);
        SpreadPathQuery qy = random_query(g, rng, kd(rng), dd(rng));
        auto search = find_spread_paths(g, qy);
        auto oracle = triple_oracle(g, qy);
        REQUIRE(search.kind != VerdictKind::Inconclusive);
        CHECK(search.kind == oracle.kind);
        if (search.kind == VerdictKind::Found) {
            check_witness(g, qy, search);
            ++found;
        } else {
            ++none;
        }
    }
    CHECK(found > 5);
    CHECK(none > 5);
}

TEST_CASE("verdicts are monotone in distance and count") {
    std::mt19937 rng(6161);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> size(6, 12);
        Graph g = random_connected_graph(size(rng), 0.15, rng);
        SpreadPathQuery qy = random_query(g, rng, 2, 0);
        bool was_none = false;
        for (std::uint32_t d = 0; d <= 5; ++d) {
            qy.min_distance = d;
            bool found_here = find_spread_paths(g, qy).kind == VerdictKind::Found;
            if (was_none) CHECK_FALSE(found_here);
            was_none = was_none || !found_here;
        }
        qy.min_distance = 1;
        was_none = false;
        for (std::uint32_t k = 1; k <= 4; ++k) {
            qy.k = k;
            bool found_here = find_spread_paths(g, qy).kind == VerdictKind::Found;
            if (was_none) CHECK_FALSE(found_here);
            was_none = was_none || !found_here;
        }
    }
}
