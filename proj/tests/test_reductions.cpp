#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ccp/instance.hpp"
#include "ccp/reductions.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace ccp;

namespace {

// Weight of delta(U) under separate edge and triple weights, by definition.
double cut_weight(const Instance& inst, std::span<const double> edge_weights,
                  std::span<const double> triple_weights, const std::vector<int>& subset) {
    std::vector<char> in(inst.vertex_count(), 0);
    for (int v : subset) in[v] = 1;
    double total = 0;
    for (int e = 0; e < inst.edge_count(); ++e)
        if (in[inst.edge(e).u] != in[inst.edge(e).v]) total += edge_weights[e];
    for (int t = 0; t < inst.triple_count(); ++t) {
        int hits = in[inst.triple(t).u] + in[inst.triple(t).v] + in[inst.triple(t).w];
        if (hits == 1 || hits == 2) total += triple_weights[t];
    }
    return total;
}

std::vector<double> nonneg_edge_weights(std::mt19937_64& rng, int count) {
    std::uniform_int_distribution<int> w(0, 4);
    std::vector<double> out(count);
    for (double& v : out) v = w(rng);
    return out;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("qubo evaluation") {
    Qubo q;
    q.variable_count = 3;
    q.constant = 1.5;
    q.linear = {2.0, -1.0, 0.5};
    q.quadratic = {{0, 1, -3.0}, {1, 2, -0.5}};
    std::vector<std::uint8_t> y000{0, 0, 0}, y110{1, 1, 0}, y111{1, 1, 1};
    CHECK(q.evaluate(y000) == doctest::Approx(1.5));
    CHECK(q.evaluate(y110) == doctest::Approx(1.5 + 2.0 - 1.0 - 3.0));
    CHECK(q.evaluate(y111) == doctest::Approx(1.5 + 2.0 - 1.0 + 0.5 - 3.0 - 0.5));
}

TEST_CASE("folding triples preserves every cut value") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Instance inst = testing::random_instance(rng, 6, 0.7);
        std::vector<double> ew = nonneg_edge_weights(rng, inst.edge_count());
        std::vector<double> tw = nonneg_edge_weights(rng, inst.triple_count());
        auto folded = fold_triples_into_edges(inst, ew, tw);
        REQUIRE(int(folded.size()) == inst.edge_count());
        for (int rep = 0; rep < 10; ++rep) {
            auto subset = testing::random_subset(rng, inst.vertex_count());
            double direct = cut_weight(inst, ew, tw, subset);
            std::vector<double> zero(inst.triple_count(), 0.0);
            double via_fold = cut_weight(inst, folded, zero, subset);
            CHECK(via_fold == doctest::Approx(direct));
        }
    }
}

TEST_CASE("folded weight of one triangle edge") {
    Instance inst(3, {{0, 1, 0.0}, {0, 2, 0.0}, {1, 2, 0.0}}, {{0, 1, 2, 4.0}});
    std::vector<double> ew = {1.0, 2.0, 3.0};
    std::vector<double> tw = {4.0};
    auto folded = fold_triples_into_edges(inst, ew, tw);
    // Each triangle edge gains half the triple weight: a cut through the
    // triangle crosses exactly two of its edges.
    CHECK(folded[0] == doctest::Approx(3.0));
    CHECK(folded[1] == doctest::Approx(4.0));
    CHECK(folded[2] == doctest::Approx(5.0));
}

TEST_CASE("submodular qubo minimization matches brute force") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> lin(-4, 4);
    std::uniform_int_distribution<int> quad(-3, 0);
    for (int trial = 0; trial < 50; ++trial) {
        Qubo q;
        q.variable_count = 1 + int(rng() % 6);
        q.constant = lin(rng) * 0.5;
        q.linear.resize(q.variable_count);
        for (double& v : q.linear) v = lin(rng);
        for (int p = 0; p < q.variable_count; ++p)
            for (int r = p + 1; r < q.variable_count; ++r)
                if (rng() % 2) q.quadratic.emplace_back(p, r, double(quad(rng)));

        double expected = std::numeric_limits<double>::infinity();
        std::vector<std::uint8_t> y(q.variable_count);
        for (unsigned mask = 0; mask < (1u << q.variable_count); ++mask) {
            for (int i = 0; i < q.variable_count; ++i) y[i] = (mask >> i) & 1;
            expected = std::min(expected, q.evaluate(y));
        }
        auto r = minimize_submodular_qubo(q);
        CHECK_FALSE(r.aborted);
        CHECK(r.value == doctest::Approx(expected));
        REQUIRE(int(r.assignment.size()) == q.variable_count);
        CHECK(q.evaluate(r.assignment) == doctest::Approx(expected));
    }
}

TEST_CASE("qubo minimization returns the minimal argmin") {
    // f(y) = 0*y0: both values optimal; the minimal assignment is all-zero.
    Qubo q;
    q.variable_count = 2;
    q.linear = {0.0, 1.0};
    auto r = minimize_submodular_qubo(q);
    CHECK(r.value == doctest::Approx(0.0));
    CHECK(r.assignment == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("qubo flow conversion rejects positive quadratic terms") {
    Qubo q;
    q.variable_count = 2;
    q.linear = {0.0, 0.0};
    q.quadratic = {{0, 1, 1.0}};
    CHECK_THROWS_AS((void)qubo_to_flow(q), std::invalid_argument);
}

TEST_CASE("qubo early stop semantics") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> lin(-4, 4);
    std::uniform_int_distribution<int> quad(-3, 0);
    for (int trial = 0; trial < 40; ++trial) {
        Qubo q;
        q.variable_count = 2 + int(rng() % 5);
        q.constant = lin(rng);
        q.linear.resize(q.variable_count);
        for (double& v : q.linear) v = lin(rng);
        for (int p = 0; p < q.variable_count; ++p)
            for (int r = p + 1; r < q.variable_count; ++r)
                if (rng() % 2) q.quadratic.emplace_back(p, r, double(quad(rng)));

        auto exact = minimize_submodular_qubo(q);
        // Threshold above the minimum: identical exact result.
        auto above = minimize_submodular_qubo(q, exact.value + 1.0);
        CHECK_FALSE(above.aborted);
        CHECK(above.value == doctest::Approx(exact.value));
        CHECK(above.assignment == exact.assignment);
        // Threshold below the minimum: either an abort carrying a lower bound
        // above the threshold, or (the stop is opportunistic) the exact result.
        auto below = minimize_submodular_qubo(q, exact.value - 1.0);
        CHECK(below.value > exact.value - 1.0);
        CHECK(below.value <= exact.value + 1e-9);
        if (below.aborted) {
            CHECK(below.assignment.empty());
        } else {
            CHECK(below.value == doctest::Approx(exact.value));
            CHECK(below.assignment == exact.assignment);
        }
    }

    // A constant already above the threshold aborts before any flow is pushed.
    Qubo flat;
    flat.variable_count = 1;
    flat.constant = 5.0;
    flat.linear = {1.0};
    auto stopped = minimize_submodular_qubo(flat, 2.0);
    CHECK(stopped.aborted);
    CHECK(stopped.value > 2.0);
    CHECK(stopped.assignment.empty());
}

TEST_CASE("constrained cut matches exhaustive subset minimization") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        Instance inst = testing::random_instance(rng, 6, 0.7);
        int n = inst.vertex_count();
        std::vector<double> ew = nonneg_edge_weights(rng, inst.edge_count());
        std::vector<double> tw = nonneg_edge_weights(rng, inst.triple_count());

        int source = int(rng() % n);
        std::vector<int> forbidden;
        for (int v = 0; v < n; ++v)
            if (v != source && rng() % 3 == 0) forbidden.push_back(v);
        if (forbidden.empty()) forbidden.push_back((source + 1) % n);

        double expected = std::numeric_limits<double>::infinity();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (!(mask >> source & 1)) continue;
            bool ok = true;
            for (int f : forbidden)
                if (mask >> f & 1) ok = false;
            if (!ok) continue;
            std::vector<int> subset;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) subset.push_back(v);
            expected = std::min(expected, cut_weight(inst, ew, tw, subset));
        }

        auto r = min_constrained_cut(inst, ew, tw, source, forbidden);
        CHECK_FALSE(r.aborted);
        CHECK(r.value == doctest::Approx(expected));
        CHECK(std::is_sorted(r.source_set.begin(), r.source_set.end()));
        CHECK(std::binary_search(r.source_set.begin(), r.source_set.end(), source));
        for (int f : forbidden)
            CHECK_FALSE(std::binary_search(r.source_set.begin(), r.source_set.end(), f));
        CHECK(cut_weight(inst, ew, tw, r.source_set) == doctest::Approx(expected));

        // Folded entry point agrees.
        auto folded = fold_triples_into_edges(inst, ew, tw);
        auto rf = min_constrained_cut_folded(inst, folded, source, forbidden);
        CHECK(rf.value == doctest::Approx(expected));
        CHECK(rf.source_set == r.source_set);
    }
}

TEST_CASE("constrained cut early stop is reject-only") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Instance inst = testing::random_instance(rng, 6, 0.8);
        std::vector<double> ew = nonneg_edge_weights(rng, inst.edge_count());
        std::vector<double> tw = nonneg_edge_weights(rng, inst.triple_count());
        int source = 0;
        std::vector<int> forbidden{inst.vertex_count() - 1};

        auto exact = min_constrained_cut(inst, ew, tw, source, forbidden);
        auto above = min_constrained_cut(inst, ew, tw, source, forbidden, exact.value + 0.5);
        CHECK_FALSE(above.aborted);
        CHECK(above.value == doctest::Approx(exact.value));
        CHECK(above.source_set == exact.source_set);
        if (exact.value > 0) {
            auto below = min_constrained_cut(inst, ew, tw, source, forbidden, exact.value - 0.5);
            CHECK(below.value > exact.value - 0.5);
            if (below.aborted) {
                CHECK(below.source_set.empty());
            } else {
                CHECK(below.value == doctest::Approx(exact.value));
                CHECK(below.source_set == exact.source_set);
            }
        }
    }
}

TEST_CASE("constrained cut returns the minimal source set") {
    // Path 0 -0- 1 -0- 2 with zero weights: every U works; minimal is {0}.
    Instance inst(3, {{0, 1, 0.0}, {1, 2, 0.0}}, {});
    std::vector<double> ew = {0.0, 0.0};
    std::vector<double> tw;
    std::vector<int> forbidden{2};
    auto r = min_constrained_cut(inst, ew, tw, 0, forbidden);
    CHECK(r.value == doctest::Approx(0.0));
    CHECK(r.source_set == std::vector<int>{0});
}

}  // TEST_SUITE
