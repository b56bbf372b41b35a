#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "coarse/graph.hpp"
#include "util.hpp"

using namespace coarse;
using namespace coarse::testutil;

TEST_CASE("distances on paths") {
    Graph p3 = path_graph(3);
    auto t = distances(p3, {0});
    CHECK(t.dist[2] == Dist(2));
    auto t2 = distances(p3, {0, 2});
    CHECK(t2.dist[1] == Dist(1));

    Graph w(2, {{0, 1}}, {Rat(7, 2)});
    CHECK(distances(w, {0}).dist[1] == Dist(Rat(7, 2)));

    CHECK_THROWS_AS(distances(p3, {}), std::invalid_argument);
}

TEST_CASE("set_distance") {
    Graph c6 = cycle_graph(6);
    CHECK(set_distance(c6, {0, 1}, {1, 2}) == Dist(0));
    CHECK(set_distance(c6, {0}, {3}) == Dist(3));
    CHECK(set_distance(c6, {0}, {3}) == set_distance(c6, {3}, {0}));

    Graph two_comp(4, {{0, 1}, {2, 3}});
    CHECK(set_distance(two_comp, {0}, {3}).is_infinite());
    CHECK_THROWS_AS(set_distance(c6, {}, {0}), std::invalid_argument);
}

TEST_CASE("neighborhood") {
    Graph c6 = cycle_graph(6);
    CHECK(neighborhood(c6, {0}, Rat(0)) == VertexSet{0});
    CHECK(neighborhood(c6, {0}, Rat(2)) == VertexSet{0, 1, 2, 4, 5});

    Graph st = star_graph(5);
    CHECK(neighborhood(st, {0}, Rat(1)).size() == 6);

    // monotone in r
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = r1; r2 <= 3; ++r2) {
            auto a = neighborhood(c6, {0, 2}, Rat(r1));
            auto b = neighborhood(c6, {0, 2}, Rat(r2));
            CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        }
}

TEST_CASE("is_connected_set") {
    Graph c4 = cycle_graph(4);
    CHECK(is_connected_set(c4, {1}));
    CHECK(is_connected_set(c4, {0, 1}));
    CHECK_FALSE(is_connected_set(c4, {0, 2}));
    CHECK_FALSE(is_connected_set(c4, {}));
}

TEST_CASE("induced_subgraph") {
    Graph k4 = complete_graph(4);
    auto all = induced_subgraph(k4, {0, 1, 2, 3});
    CHECK(all.graph == k4);
    auto tri = induced_subgraph(k4, {0, 2, 3});
    CHECK(tri.graph == complete_graph(3));
    CHECK(tri.original == VertexSet{0, 2, 3});

    Graph p4 = path_graph(4);
    auto indep = induced_subgraph(p4, {0, 2});
    CHECK(indep.graph.edge_count() == 0);

    // induced distances never smaller
    Graph c6 = cycle_graph(6);
    auto half = induced_subgraph(c6, {0, 1, 2, 3});
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v) {
            Dist dz = distances(half.graph, {u}).dist[v];
            Dist dg = distances(c6, {half.original[u]}).dist[half.original[v]];
            CHECK(dg <= dz);
        }
}

TEST_CASE("subdivide") {
    auto hex = subdivide(complete_graph(3), 1);
    CHECK(hex.graph.vertex_count() == 6);
    CHECK(hex.graph.edge_count() == 6);
    CHECK(is_connected_set(hex.graph, {0, 1, 2, 3, 4, 5}));
    for (Vertex v = 0; v < 6; ++v) CHECK(hex.graph.degree(v) == 2);

    auto p5 = subdivide(path_graph(2), 3);
    CHECK(p5.graph.vertex_count() == 5);
    CHECK(distances(p5.graph, {0}).dist[1] == Dist(4));

    auto big = subdivide(complete_graph(15), 16);
    CHECK(big.graph.vertex_count() == 15 + 105 * 16);

    // distance law
    Graph c5 = cycle_graph(5);
    auto s2 = subdivide(c5, 2);
    for (Vertex u = 0; u < 5; ++u) {
        auto orig = distances(c5, {u});
        auto sub = distances(s2.graph, {u});
        for (Vertex v = 0; v < 5; ++v)
            CHECK(sub.dist[v] == Dist(orig.dist[v].value() * 3));
    }
}

TEST_CASE("contract_edge") {
    Graph k3 = complete_graph(3);
    Graph c = contract_edge(k3, {0, 1});
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_count() == 1);

    Graph p3 = path_graph(3);
    Graph cp = contract_edge(p3, {0, 1});
    CHECK(cp.vertex_count() == 2);
    CHECK(cp.edge_count() == 1);

    // contracting a spanning tree of K4 down to one vertex
    Graph g = complete_graph(4);
    while (g.vertex_count() > 1) g = contract_edge(g, g.edges()[0]);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);

    CHECK_THROWS_AS(contract_edge(path_graph(3), Edge{0, 2}), std::invalid_argument);
}

TEST_CASE("power_graph") {
    Graph p4 = path_graph(4);
    Graph p4_2 = power_graph(p4, 2);
    CHECK(p4_2.edge_count() == 5);
    CHECK(p4_2.has_edge(0, 2));
    CHECK(p4_2.has_edge(1, 3));
    CHECK_FALSE(p4_2.has_edge(0, 3));

    Graph c6 = cycle_graph(6);
    CHECK(power_graph(c6, 1) == c6);
    CHECK(power_graph(c6, 3) == complete_graph(6));

    CHECK_THROWS_AS(power_graph(scale_weights(p4, Rat(2)), 2), std::invalid_argument);
}

TEST_CASE("power graph distance law") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_connected_graph(8, 0.2, rng);
        for (std::uint32_t k = 1; k <= 4; ++k) {
            Graph gk = power_graph(g, k);
            for (Vertex u = 0; u < 8; ++u) {
                auto dg = distances(g, {u});
                auto dk = distances(gk, {u});
                for (Vertex v = 0; v < 8; ++v) {
                    std::int64_t d = dg.dist[v].value().numerator();
                    CHECK(dk.dist[v] == Dist((d + k - 1) / k));
                }
            }
        }
    }
}

TEST_CASE("scale_weights") {
    Graph p5 = path_graph(5);
    Graph same = scale_weights(p5, Rat(1));
    CHECK(distances(same, {0}).dist[4] == Dist(4));

    Graph halved = scale_weights(p5, Rat(1, 2));
    CHECK(distances(halved, {0}).dist[4] == Dist(2));

    std::mt19937 rng(11);
    Graph g = random_connected_graph(10, 0.3, rng);
    Rat f(3, 7);
    Graph sg = scale_weights(g, f);
    for (Vertex u = 0; u < 10; ++u) {
        auto d1 = distances(g, {u});
        auto d2 = distances(sg, {u});
        for (Vertex v = 0; v < 10; ++v) CHECK(d2.dist[v] == Dist(d1.dist[v].value() * f));
    }
    CHECK_THROWS_AS(scale_weights(p5, Rat(0)), std::invalid_argument);
}

TEST_CASE("triangle inequality for singleton distances") {
    std::mt19937 rng(3);
    Graph g = random_connected_graph(9, 0.25, rng);
    for (Vertex a = 0; a < 9; ++a) {
        auto da = distances(g, {a});
        for (Vertex b = 0; b < 9; ++b) {
            auto db = distances(g, {b});
            for (Vertex c = 0; c < 9; ++c)
                CHECK(da.dist[c] <= da.dist[b] + db.dist[c]);
        }
    }
}

TEST_CASE("text format round trip") {
    std::mt19937 rng(5);
    Graph g = random_connected_graph(7, 0.4, rng);
    std::stringstream ss;
    write_graph(ss, g);
    CHECK(read_graph(ss) == g);

    Graph w = scale_weights(g, Rat(5, 3));
    std::stringstream sw;
    write_graph(sw, w);
    CHECK(read_graph(sw) == w);

    std::stringstream bad("3 1 0\n# comment\n2 1\n");
    CHECK_THROWS_AS(read_graph(bad), std::invalid_argument);

    std::stringstream commented("# a path\n3 2 0\n0 1\n1 2\n");
    CHECK(read_graph(commented) == path_graph(3));
}
