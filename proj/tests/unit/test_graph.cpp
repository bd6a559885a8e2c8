#include <doctest.h>

#include <array>
#include <random>

#include "copoly/error.hpp"
#include "copoly/graph.hpp"
#include "test_support.hpp"

using namespace copoly;

namespace {

bool valid(const SimpleGraph& g) {
    for (int u = 0; u < g.order(); ++u) {
        if (g.has_edge(u, u)) return false;
        if ((g.neighbors(u) & ~g.all_vertices()) != 0) return false;
        for (int v = 0; v < g.order(); ++v) {
            if (g.has_edge(u, v) != g.has_edge(v, u)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("named constructors") {
    const SimpleGraph k3 = complete_graph(3);
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    const SimpleGraph e4 = empty_graph(4);
    CHECK(e4.order() == 4);
    CHECK(e4.edge_count() == 0);

    const std::array<int, 2> sizes{2, 2};
    const SimpleGraph k22 = build_named(NamedFamily::CompleteBipartite, sizes);
    CHECK(k22.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

    CHECK(cycle_graph(4).edge_count() == 4);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(complete_graph(32).edge_count() == 32 * 31 / 2);
    CHECK_THROWS_AS(complete_graph(33), CapacityError);
    CHECK_THROWS_AS(complete_bipartite(20, 13), CapacityError);
}

TEST_CASE("graph names") {
    CHECK(parse_graph_name("K4") == complete_graph(4));
    CHECK(parse_graph_name("k3,3") == complete_bipartite(3, 3));
    CHECK(parse_graph_name("p5") == path_graph(5));
    CHECK(parse_graph_name("C6") == cycle_graph(6));
    CHECK(parse_graph_name("E2") == empty_graph(2));
    CHECK_THROWS(parse_graph_name("Q4"));
    CHECK_THROWS(parse_graph_name("K"));
    CHECK_THROWS(parse_graph_name("P3,3"));
    CHECK_THROWS(parse_graph_name("K4,"));
    CHECK_THROWS_AS(parse_graph_name("K40"), CapacityError);
}

TEST_CASE("merge_edge examples") {
    const SimpleGraph k3 = complete_graph(3);
    for (const Edge& e : k3.edges()) {
        const SimpleGraph delta = merge_edge(k3, e, FamilyKind::CoAdjoint);
        CHECK(delta.order() == 2);
        CHECK(delta.edge_count() == 0);

        const SimpleGraph meet = merge_edge(k3, e, FamilyKind::Adjoint);
        CHECK(meet == complete_graph(2));

        const SimpleGraph none = merge_edge(k3, e, FamilyKind::Matching);
        CHECK(none == empty_graph(2));

        CHECK(merge_edge(k3, e, FamilyKind::Chromatic) == complete_graph(2));
    }

    // path u-v-t with u=0, v=1, t=2: symmetric difference is {t}
    const SimpleGraph p3 = path_graph(3);
    const SimpleGraph merged = merge_edge(p3, {0, 1}, FamilyKind::CoAdjoint);
    CHECK(merged == complete_graph(2));

    CHECK_THROWS_AS(merge_edge(p3, {0, 2}, FamilyKind::CoAdjoint), InvalidEdgeError);
}

TEST_CASE("merged vertex takes the highest index") {
    // star with centre 0; contracting (0,1) leaves leaves 2,3 at indices 0,1
    SimpleGraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    const SimpleGraph g = merge_edge(star, {0, 1}, FamilyKind::Chromatic);
    CHECK(g.order() == 3);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("merge_edge properties on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const SimpleGraph g = testing::random_graph(n, 0.5, rng);
        for (const Edge& e : g.edges()) {
            const SimpleGraph sd = merge_edge(g, e, FamilyKind::CoAdjoint);
            const SimpleGraph un = merge_edge(g, e, FamilyKind::Chromatic);
            const SimpleGraph in = merge_edge(g, e, FamilyKind::Adjoint);
            const SimpleGraph no = merge_edge(g, e, FamilyKind::Matching);
            for (const SimpleGraph* r : {&sd, &un, &in, &no}) {
                REQUIRE(r->order() == n - 1);
                REQUIRE(valid(*r));
            }
            const int w = n - 2;
            CHECK(sd.neighbors(w) == (un.neighbors(w) & ~in.neighbors(w)));
            CHECK(no.neighbors(w) == 0);
            // everything away from w is the induced graph on V - {u, v}
            const VertexMask rest = sd.all_vertices() & ~(VertexMask{1} << w);
            const SimpleGraph away = delete_vertices(g, (VertexMask{1} << e.u) | (VertexMask{1} << e.v));
            CHECK(sd.induced(rest) == away);
            CHECK(un.induced(rest) == away);
        }
    }
}

TEST_CASE("components_of_subset") {
    const SimpleGraph k3 = complete_graph(3);
    const auto edges = k3.edges();
    CHECK(components_of_subset(k3, {}) == 3);
    CHECK(components_of_subset(k3, std::span(edges).first(1)) == 2);
    CHECK(components_of_subset(k3, edges) == 1);
    CHECK_THROWS_AS(components_of_subset(path_graph(3), std::vector<Edge>{{0, 2}}), InvalidEdgeError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const SimpleGraph g = testing::random_graph(1 + static_cast<int>(rng() % 12), 0.2, rng);
        CHECK(components_of_subset(g, g.edges()) == testing::dfs_components(g));
        CHECK(g.component_count() == testing::dfs_components(g));
    }
}

TEST_CASE("labeled graph enumeration") {
    for (auto [n, expected] : std::array<std::pair<int, int>, 3>{{{2, 2}, {3, 8}, {4, 64}}}) {
        int count = 0;
        std::vector<SimpleGraph> seen;
        enumerate_labeled_graphs(n, [&](const SimpleGraph& g) {
            ++count;
            seen.push_back(g);
        });
        CHECK(count == expected);
        for (std::size_t i = 0; i < seen.size(); ++i) {
            for (std::size_t j = i + 1; j < seen.size(); ++j) REQUIRE_FALSE(seen[i] == seen[j]);
        }
    }
    CHECK(labeled_graph_count(6) == 32768);
    CHECK_THROWS_AS(enumerate_labeled_graphs(7, [](const SimpleGraph&) {}), CapacityError);
}

TEST_CASE("multigraph contraction keeps parallel edges and loops") {
    MultiGraph g(3);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    const MultiGraph c = g.contract(0, 1);
    CHECK(c.order() == 2);
    CHECK(c.loops(1) == 1);
    CHECK(c.multiplicity(0, 1) == 2);
    CHECK(c.edge_count() == 2);
    CHECK(c.support() == complete_graph(2));
    CHECK_THROWS_AS(g.contract(0, 0), InvalidEdgeError);
}
