#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "ccp/graphalg.hpp"
#include "doctest.h"

using namespace ccp;

namespace {

// Minimum weight of edges crossing any s-t separating subset, by enumeration.
double brute_min_cut(const WeightedGraph& g, int s, int t) {
    double best = std::numeric_limits<double>::infinity();
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        if (!(mask >> s & 1) || (mask >> t & 1)) continue;
        double cut = 0;
        for (const auto& [u, v, w] : g.edges)
            if (((mask >> u) & 1) != ((mask >> v) & 1)) cut += w;
        best = std::min(best, cut);
    }
    return best;
}

WeightedGraph random_graph(std::mt19937_64& rng, int n, double density) {
    WeightedGraph g;
    g.n = n;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> weight(0, 5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < density) {
                int w = weight(rng);
                if (w > 0) g.edges.emplace_back(u, v, double(w));
            }
    return g;
}

}  // namespace

TEST_SUITE("graphalg") {

TEST_CASE("disjoint sets unite and find") {
    DisjointSets ds(5);
    CHECK(ds.component_count() == 5);
    CHECK(ds.size(3) == 1);
    CHECK(ds.unite(0, 1));
    CHECK(ds.unite(1, 2));
    CHECK_FALSE(ds.unite(0, 2));
    CHECK(ds.component_count() == 3);
    CHECK(ds.find(0) == ds.find(2));
    CHECK(ds.find(0) != ds.find(3));
    CHECK(ds.size(1) == 3);
    CHECK(ds.size(4) == 1);
}

TEST_CASE("connected components are dense and ordered by smallest vertex") {
    // {0,3}, {1}, {2,4}
    auto ids = connected_components(5, {{3, 0}, {4, 2}});
    CHECK(ids == std::vector<int>{0, 1, 2, 0, 2});

    auto isolated = connected_components(3, {});
    CHECK(isolated == std::vector<int>{0, 1, 2});

    auto single = connected_components(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(single == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("max flow on a known network") {
    // Classic diamond: s=0, t=3, capacities force value 5.
    FlowNetwork net(4);
    net.add_arc(0, 1, 3);
    net.add_arc(0, 2, 2);
    net.add_arc(1, 2, 5);
    net.add_arc(1, 3, 2);
    net.add_arc(2, 3, 3);
    auto r = net.max_flow_min_cut(0, 3);
    CHECK(r.value == doctest::Approx(5.0));
    CHECK(r.source_side.front() == 0);

    // Repeatable: a second call resets flows and reproduces the result.
    auto r2 = net.max_flow_min_cut(0, 3);
    CHECK(r2.value == doctest::Approx(5.0));
    CHECK(r2.source_side == r.source_side);
}

TEST_CASE("max flow source side is the minimal minimum cut") {
    // Two saturated bottleneck arcs in series: 0 -2-> 1 -2-> 2 -9-> 3.
    // Both {0} and {0,1} are minimum cuts; residual reachability gives {0}.
    FlowNetwork net(4);
    net.add_arc(0, 1, 2);
    net.add_arc(1, 2, 2);
    net.add_arc(2, 3, 9);
    auto r = net.max_flow_min_cut(0, 3);
    CHECK(r.value == doctest::Approx(2.0));
    CHECK(r.source_side == std::vector<int>{0});
}

TEST_CASE("max flow with disconnected sink") {
    FlowNetwork net(3);
    net.add_arc(0, 1, 4);
    auto r = net.max_flow_min_cut(0, 2);
    CHECK(r.value == doctest::Approx(0.0));
    CHECK(r.source_side == std::vector<int>{0, 1});
}

TEST_CASE("max flow early stop returns an achieved lower bound") {
    FlowNetwork net(4);
    net.add_arc(0, 1, 3);
    net.add_arc(0, 2, 2);
    net.add_arc(1, 2, 5);
    net.add_arc(1, 3, 2);
    net.add_arc(2, 3, 3);

    SUBCASE("threshold below the max flow aborts") {
        auto r = net.max_flow_min_cut(0, 3, 1.5);
        CHECK(r.source_side.empty());
        CHECK(r.value > 1.5);
        CHECK(r.value <= 5.0 + 1e-12);
    }
    SUBCASE("threshold at or above the max flow completes") {
        auto r = net.max_flow_min_cut(0, 3, 5.0);
        CHECK(r.value == doctest::Approx(5.0));
        CHECK_FALSE(r.source_side.empty());
    }
    SUBCASE("early stop does not corrupt later exact calls") {
        (void)net.max_flow_min_cut(0, 3, 0.5);
        auto r = net.max_flow_min_cut(0, 3);
        CHECK(r.value == doctest::Approx(5.0));
    }
}

TEST_CASE("max flow matches brute-force undirected cuts on random graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        WeightedGraph g = random_graph(rng, 6, 0.6);
        FlowNetwork net(g.n);
        for (const auto& [u, v, w] : g.edges) {
            net.add_arc(u, v, w);
            net.add_arc(v, u, w);
        }
        double expected = brute_min_cut(g, 0, g.n - 1);
        auto r = net.max_flow_min_cut(0, g.n - 1);
        CHECK(r.value == doctest::Approx(expected));
        // The reported side is an s-t cut achieving the value.
        std::vector<char> in_side(g.n, 0);
        for (int v : r.source_side) in_side[v] = 1;
        CHECK(in_side[0]);
        CHECK_FALSE(in_side[g.n - 1]);
        double cut = 0;
        for (const auto& [u, v, w] : g.edges)
            if (in_side[u] != in_side[v]) cut += w;
        CHECK(cut == doctest::Approx(expected));
    }
}

TEST_CASE("flow-equivalent tree reproduces all pairwise min cut values") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 6);  // 2..7
        WeightedGraph g = random_graph(rng, n, 0.7);
        auto tree = flow_equivalent_tree(g);
        REQUIRE(int(tree.parent.size()) == n);
        CHECK(tree.parent[0] == -1);
        auto cuts = pairwise_min_cuts(tree);
        REQUIRE(int(cuts.size()) == n * n);
        for (int u = 0; u < n; ++u) {
            CHECK(cuts[u * n + u] == doctest::Approx(0.0));
            for (int v = u + 1; v < n; ++v) {
                double expected = brute_min_cut(g, u, v);
                CHECK(cuts[u * n + v] == doctest::Approx(expected));
                CHECK(cuts[v * n + u] == doctest::Approx(expected));
            }
        }
    }
}

TEST_CASE("flow-equivalent tree on a disconnected graph") {
    WeightedGraph g;
    g.n = 4;
    g.edges = {{0, 1, 3.0}, {2, 3, 2.0}};
    auto cuts = pairwise_min_cuts(flow_equivalent_tree(g));
    CHECK(cuts[0 * 4 + 1] == doctest::Approx(3.0));
    CHECK(cuts[2 * 4 + 3] == doctest::Approx(2.0));
    CHECK(cuts[0 * 4 + 2] == doctest::Approx(0.0));
    CHECK(cuts[1 * 4 + 3] == doctest::Approx(0.0));
}

TEST_CASE("global min cut matches brute force") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 6);
        WeightedGraph g = random_graph(rng, n, 0.7);
        double expected = std::numeric_limits<double>::infinity();
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            double cut = 0;
            for (const auto& [u, v, w] : g.edges)
                if (((mask >> u) & 1) != ((mask >> v) & 1)) cut += w;
            expected = std::min(expected, cut);
        }
        auto r = global_min_cut(g);
        CHECK(r.value == doctest::Approx(expected));
        REQUIRE_FALSE(r.side.empty());
        REQUIRE(int(r.side.size()) < n);
        std::vector<char> in_side(n, 0);
        for (int v : r.side) in_side[v] = 1;
        double cut = 0;
        for (const auto& [u, v, w] : g.edges)
            if (in_side[u] != in_side[v]) cut += w;
        CHECK(cut == doctest::Approx(expected));
    }
}

TEST_CASE("global min cut of a disconnected graph is zero") {
    WeightedGraph g;
    g.n = 5;
    g.edges = {{0, 1, 2.0}, {1, 2, 2.0}, {3, 4, 1.0}};
    auto r = global_min_cut(g);
    CHECK(r.value == doctest::Approx(0.0));
    std::vector<char> in_side(g.n, 0);
    for (int v : r.side) in_side[v] = 1;
    double cut = 0;
    for (const auto& [u, v, w] : g.edges)
        if (in_side[u] != in_side[v]) cut += w;
    CHECK(cut == doctest::Approx(0.0));
}

}  // TEST_SUITE
