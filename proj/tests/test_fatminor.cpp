#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coarse/fatminor.hpp"
#include "corpus.hpp"
#include "util.hpp"

using namespace coarse;
using namespace coarse::testutil;

namespace {

// Arc {start, start+1, ..., start+len-1} on a cycle of n vertices.
VertexSet arc(std::size_t n, Vertex start, std::size_t len) {
    VertexSet out;
    for (std::size_t i = 0; i < len; ++i) out.push_back((start + i) % n);
    return normalize_set(out);
}

// The periodic K_3 model in C_18: branch arcs of 4 and connector arcs of 4.
MinorModel c18_model() {
    MinorModel m;
    m.fatness = Rat(3);
    m.branch = {arc(18, 0, 4), arc(18, 6, 4), arc(18, 12, 4)};
    // pattern K_3 edge order: 0-1, 0-2, 1-2
    m.connector = {arc(18, 3, 4), arc(18, 15, 4), arc(18, 9, 4)};
    return m;
}

}  // namespace

TEST_CASE("verify_model on a path") {
    Graph p6 = path_graph(6);
    Graph k2 = complete_graph(2);
    MinorModel m;
    m.branch = {{0}, {5}};
    m.connector = {{0, 1, 2, 3, 4, 5}};
    m.fatness = Rat(5);

    auto ok = verify_model(p6, k2, m, Rat(5));
    CHECK(ok.ok());
    REQUIRE(ok.min_separation.has_value());
    CHECK(*ok.min_separation == Rat(5));

    auto bad = verify_model(p6, k2, m, Rat(6));
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->kind == ViolationKind::SeparationTooSmall);
    CHECK(bad.violation->achieved == Dist(5));
    CHECK(bad.violation->a == PartRef{false, 0});
    CHECK(bad.violation->b == PartRef{false, 1});
}

TEST_CASE("verify_model periodic K_3 model in C_18") {
    Graph c18 = cycle_graph(18);
    Graph k3 = complete_graph(3);
    MinorModel m = c18_model();
    auto r = verify_model(c18, k3, m, Rat(3));
    CHECK(r.ok());
    REQUIRE(r.min_separation.has_value());
    CHECK(*r.min_separation == Rat(3));

    // Tampering: stretch one branch arc a step toward its neighbour.
    MinorModel bad = m;
    bad.branch[1] = arc(18, 5, 5);
    auto rb = verify_model(c18, k3, bad, Rat(3));
    REQUIRE(rb.violation.has_value());
    CHECK(rb.violation->kind == ViolationKind::SeparationTooSmall);
    CHECK(rb.violation->achieved == Dist(2));

    // Structural violations, in deterministic order.
    MinorModel m2 = m;
    m2.branch[0] = {};
    CHECK(verify_model(c18, k3, m2, Rat(3)).violation->kind == ViolationKind::MissingPart);
    MinorModel m3 = m;
    m3.branch[0] = {0, 2};
    CHECK(verify_model(c18, k3, m3, Rat(3)).violation->kind == ViolationKind::DisconnectedPart);
    MinorModel m4 = m;
    m4.connector[0] = arc(18, 4, 2);  // misses branch 0
    auto r4 = verify_model(c18, k3, m4, Rat(3));
    REQUIRE(r4.violation.has_value());
    CHECK(r4.violation->kind == ViolationKind::MissingIncidence);
    CHECK(r4.violation->a == PartRef{false, 0});
    CHECK(r4.violation->b == PartRef{true, 0});

    MinorModel wrong_shape = m;
    wrong_shape.connector.pop_back();
    CHECK_THROWS_AS(verify_model(c18, k3, wrong_shape, Rat(3)), std::invalid_argument);
}

TEST_CASE("find_fat_minor basics") {
    Graph k3 = complete_graph(3);
    // At fatness 0 this is plain minor containment.
    auto v0 = find_fat_minor(k3, k3, Rat(0), {});
    REQUIRE(v0.kind == VerdictKind::Found);
    CHECK(verify_model(k3, k3, *v0.model, Rat(0)).ok());

    // At fatness 1 the three connectors would have to be pairwise disjoint
    // two-vertex sets inside three vertices: impossible. C_6 is the smallest
    // cycle that carries a 1-fat K_3 (oracle-checked below).
    CHECK(find_fat_minor(k3, k3, Rat(1), {}).kind == VerdictKind::NoneExhaustive);
    CHECK(exhaustive_oracle(cycle_graph(5), k3, Rat(1), 5).kind == VerdictKind::NoneExhaustive);
    auto v6 = find_fat_minor(cycle_graph(6), k3, Rat(1), {});
    REQUIRE(v6.kind == VerdictKind::Found);
    CHECK(verify_model(cycle_graph(6), k3, *v6.model, Rat(1)).ok());
    CHECK(exhaustive_oracle(cycle_graph(6), k3, Rat(1), 6).kind == VerdictKind::Found);

    // tiny budget -> Inconclusive
    auto tiny = find_fat_minor(cycle_graph(18), k3, Rat(3), {2});
    CHECK(tiny.kind == VerdictKind::Inconclusive);
    CHECK_THROWS_AS(find_fat_minor(k3, k3, Rat(1), {0}), std::invalid_argument);
}

TEST_CASE("minimum cycle carrying a 3-fat K_3") {
    Graph k3 = complete_graph(3);
    // The advertised threshold: no cycle shorter than 18 carries one. Checked
    // here against the definition-only oracle, not just the pruned search.
    for (std::size_t n = 3; n <= 17; ++n) {
        auto v = exhaustive_oracle(cycle_graph(n), k3, Rat(3), 17);
        CHECK(v.kind == VerdictKind::NoneExhaustive);
        auto f = find_fat_minor(cycle_graph(n), k3, Rat(3), {});
        CHECK(f.kind == VerdictKind::NoneExhaustive);
    }
    auto v18 = find_fat_minor(cycle_graph(18), k3, Rat(3), {});
    REQUIRE(v18.kind == VerdictKind::Found);
    CHECK(verify_model(cycle_graph(18), k3, *v18.model, Rat(3)).ok());
    auto o18 = exhaustive_oracle(cycle_graph(18), k3, Rat(3), 18);
    CHECK(o18.kind == VerdictKind::Found);
}

TEST_CASE("exhaustive_oracle trivial patterns") {
    Graph k1 = complete_graph(1);
    Graph k2 = complete_graph(2);
    CHECK(exhaustive_oracle(path_graph(4), k1, Rat(2)).kind == VerdictKind::Found);

    // K_2 at fatness 0: found exactly when one component has >= 2 vertices.
    CHECK(exhaustive_oracle(k1, k2, Rat(0)).kind == VerdictKind::NoneExhaustive);
    CHECK(exhaustive_oracle(Graph(2, {}), k2, Rat(0)).kind == VerdictKind::NoneExhaustive);
    CHECK(exhaustive_oracle(path_graph(2), k2, Rat(0)).kind == VerdictKind::Found);
    CHECK(exhaustive_oracle(Graph(3, {{0, 1}}), k2, Rat(0)).kind == VerdictKind::Found);

    CHECK_THROWS_AS(exhaustive_oracle(path_graph(12), k2, Rat(1)), std::invalid_argument);
}

TEST_CASE("oracle equivalence on small corpus") {
    Graph k3 = complete_graph(3);
    Graph p3 = path_graph(3);
    for (const Graph& g : connected_graphs_up_to(6)) {
        for (const Graph* h : {&k3, &p3}) {
            for (int k = 1; k <= 3; ++k) {
                auto a = find_fat_minor(g, *h, Rat(k), {});
                auto b = exhaustive_oracle(g, *h, Rat(k));
                REQUIRE(a.kind != VerdictKind::Inconclusive);
                REQUIRE(b.kind != VerdictKind::Inconclusive);
                CHECK(a.kind == b.kind);
                if (a.kind == VerdictKind::Found)
                    CHECK(verify_model(g, *h, *a.model, Rat(k)).ok());
            }
        }
    }
}

TEST_CASE("monotonicity in fatness") {
    Graph c18 = cycle_graph(18);
    Graph k3 = complete_graph(3);
    auto v = find_fat_minor(c18, k3, Rat(3), {});
    REQUIRE(v.kind == VerdictKind::Found);
    for (int k = 0; k <= 3; ++k) CHECK(verify_model(c18, k3, *v.model, Rat(k)).ok());
    CHECK(verify_model(c18, k3, *v.model, Rat(1, 2)).ok());
}

TEST_CASE("weighted hosts") {
    Graph k3 = complete_graph(3);
    Graph heavy = scale_weights(cycle_graph(6), Rat(2));
    auto v = find_fat_minor(heavy, k3, Rat(2), {});
    REQUIRE(v.kind == VerdictKind::Found);
    CHECK(verify_model(heavy, k3, *v.model, Rat(2)).ok());

    // An exhausted weighted search must stay Inconclusive.
    Graph light = scale_weights(path_graph(3), Rat(1, 2));
    CHECK(find_fat_minor(light, k3, Rat(1), {}).kind == VerdictKind::Inconclusive);
}

TEST_CASE("merge_close_sets basics") {
    Graph p6 = path_graph(6);
    auto one = merge_close_sets(p6, {{2, 3}}, Rat(2));
    CHECK(one.sets == std::vector<VertexSet>{{2, 3}});
    CHECK(one.index_map == std::vector<std::size_t>{0});

    auto apart = merge_close_sets(p6, {{0}, {5}}, Rat(3));
    CHECK(apart.sets.size() == 2);
    CHECK(apart.sets[0] == VertexSet{0});
    CHECK(apart.sets[1] == VertexSet{5});

    // Adjacent singletons at eps = 2: one cluster, the 2-ball of the first
    // plus the second.
    auto merged = merge_close_sets(p6, {{2}, {3}}, Rat(2));
    REQUIRE(merged.sets.size() == 1);
    CHECK(merged.sets[0] == VertexSet{0, 1, 2, 3, 4});
    CHECK(merged.index_map == std::vector<std::size_t>{0, 0});

    CHECK_THROWS_AS(merge_close_sets(p6, {}, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(merge_close_sets(p6, {{0, 2}}, Rat(1)), std::invalid_argument);
}

TEST_CASE("merge_close_sets sandwich property") {
    std::mt19937 rng(42);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_connected_graph(30, 0.05, rng);
        std::uniform_int_distribution<int> nsets(1, 5), veceps(1, 3), pickv(0, 29);
        int n = nsets(rng);
        Rat eps(veceps(rng));
        std::vector<VertexSet> xs;
        for (int i = 0; i < n; ++i) {
            std::uniform_int_distribution<int> r(0, 2);
            xs.push_back(neighborhood(g, {static_cast<Vertex>(pickv(rng))}, Rat(r(rng))));
        }
        auto out = merge_close_sets(g, xs, eps);
        std::size_t m = out.sets.size();
        REQUIRE(m >= 1);
        REQUIRE(m <= xs.size());
        for (const VertexSet& s : out.sets) CHECK(is_connected_set(g, s));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                CHECK(set_distance(g, out.sets[i], out.sets[j]) >= Dist(eps));
        // sandwich: union X  subset of  union Y  subset of N^{(n-m)eps}[union X]
        VertexSet ux, uy;
        for (const auto& s : xs) ux = set_union(ux, s);
        for (const auto& s : out.sets) uy = set_union(uy, s);
        CHECK(std::includes(uy.begin(), uy.end(), ux.begin(), ux.end()));
        VertexSet bound = neighborhood(g, ux, eps * Rat(static_cast<std::int64_t>(xs.size() - m)));
        CHECK(std::includes(bound.begin(), bound.end(), uy.begin(), uy.end()));
        // index map points each input inside its cluster's superset
        for (std::size_t i = 0; i < xs.size(); ++i) {
            REQUIRE(out.index_map[i] < m);
            const VertexSet& target = out.sets[out.index_map[i]];
            CHECK(std::includes(target.begin(), target.end(), xs[i].begin(), xs[i].end()));
        }
    }
}

TEST_CASE("inflate_model at k = 1 and via power graphs") {
    Graph k3 = complete_graph(3);

    // k = 1: power graph is g itself and the radius is 0.
    Graph c18 = cycle_graph(18);
    auto v1 = find_fat_minor(power_graph(c18, 1), k3, Rat(3), {});
    REQUIRE(v1.kind == VerdictKind::Found);
    MinorModel m1 = inflate_model(c18, k3, 1, *v1.model);
    CHECK(verify_model(c18, k3, m1, Rat(1)).ok());

    // Larger k: build the power-graph model explicitly as six arcs around the
    // cycle, consecutive arcs sharing their port vertex. Ports sit 2k+1 apart
    // in the base cycle, so non-incident parts are exactly 3 apart in g^k.
    for (std::uint32_t k : {2u, 3u}) {
        std::size_t span = 2 * k + 1;
        std::size_t n = 6 * span;
        Graph cyc = cycle_graph(n);
        MinorModel m;
        m.fatness = Rat(3);
        m.branch = {arc(n, 0, span + 1), arc(n, 2 * span, span + 1),
                    arc(n, 4 * span, span + 1)};
        m.connector = {arc(n, span, span + 1), arc(n, 5 * span, span + 1),
                       arc(n, 3 * span, span + 1)};
        Graph power = power_graph(cyc, k);
        REQUIRE(verify_model(power, k3, m, Rat(3)).ok());
        MinorModel lifted = inflate_model(cyc, k3, k, m);
        CHECK(verify_model(cyc, k3, lifted, Rat(static_cast<std::int64_t>(k))).ok());

        // Precondition failure: a model that is not 3-fat in the power graph.
        MinorModel junk = m;
        junk.branch[0] = junk.branch[1];
        CHECK_THROWS_AS(inflate_model(cyc, k3, k, junk), std::invalid_argument);
    }
}

TEST_CASE("inflate_model randomized property") {
    Graph k2 = complete_graph(2);
    Graph p3 = path_graph(3);
    std::mt19937 rng(2026);
    int found = 0;
    for (int it = 0; it < 200; ++it) {
        std::uniform_int_distribution<int> sz(8, 14), kk(3, 5);
        Graph g = random_connected_graph(sz(rng), 0.08, rng);
        std::uint32_t k = kk(rng);
        const Graph& h = (it % 2 == 0) ? k2 : p3;
        Graph power = power_graph(g, k);
        auto v = find_fat_minor(power, h, Rat(3), {});
        REQUIRE(v.kind != VerdictKind::Inconclusive);
        if (v.kind == VerdictKind::Found) {
            ++found;
            MinorModel lifted = inflate_model(g, h, k, *v.model);
            CHECK(verify_model(g, h, lifted, Rat(static_cast<std::int64_t>(k))).ok());
            // ... so the direct search must find a k-fat model too.
            auto direct = find_fat_minor(g, h, Rat(static_cast<std::int64_t>(k)), {});
            CHECK(direct.kind == VerdictKind::Found);
        }
    }
    CHECK(found > 0);  // the property must actually fire
}

TEST_CASE("scaling transport") {
    Graph c18 = cycle_graph(18);
    Graph k3 = complete_graph(3);
    auto v = find_fat_minor(c18, k3, Rat(3), {});
    REQUIRE(v.kind == VerdictKind::Found);
    // verify at fatness k' in g scaled by k'/k  <=>  verify at k in g
    for (Rat kp : {Rat(6), Rat(9), Rat(3, 2), Rat(1)}) {
        Graph scaled = scale_weights(c18, kp / Rat(3));
        MinorModel m = *v.model;
        m.fatness = kp;
        CHECK(verify_model(scaled, k3, m, kp).ok());
    }
}

TEST_CASE("search determinism") {
    Graph c18 = cycle_graph(18);
    Graph k3 = complete_graph(3);
    auto a = find_fat_minor(c18, k3, Rat(3), {});
    auto b = find_fat_minor(c18, k3, Rat(3), {});
    REQUIRE(a.kind == VerdictKind::Found);
    CHECK(a.model->branch == b.model->branch);
    CHECK(a.model->connector == b.model->connector);
}

TEST_CASE("corpus generator sanity") {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (std::size_t n = 1; n <= 8; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
    for (const Graph& g : connected_graphs(5))
        CHECK(is_connected_set(g, {0, 1, 2, 3, 4}));
}
