#include <algorithm>
#include <chrono>
#include <random>
#include <vector>

#include "ccp/engine.hpp"
#include "ccp/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace ccp;

namespace {

EngineConfig only_conditions(std::initializer_list<ConditionKind> kinds) {
    EngineConfig cfg;
    cfg.enabled.fill(false);
    for (ConditionKind k : kinds) cfg.enabled[int(k)] = true;
    return cfg;
}

bool same_scan(const CutScanResult& a, const CutScanResult& b) {
    auto same_opt = [](const std::optional<Certificate>& x, const std::optional<Certificate>& y) {
        if (x.has_value() != y.has_value()) return false;
        if (!x) return true;
        return x->kind == y->kind && x->edge == y->edge && x->triple == y->triple &&
               x->witness == y->witness && x->witness2 == y->witness2 && x->margin == y->margin;
    };
    return std::equal(a.edge_certs.begin(), a.edge_certs.end(), b.edge_certs.begin(),
                      b.edge_certs.end(), same_opt) &&
           std::equal(a.triple_certs.begin(), a.triple_certs.end(), b.triple_certs.begin(),
                      b.triple_certs.end(), same_opt);
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("negative triangle with a strong positive triple") {
    Instance inst(3, {{0, 1, -2.0}, {0, 2, -2.0}, {1, 2, -2.0}}, {{0, 1, 2, 5.0}});
    auto state = reduce(inst);
    CHECK(state.event_log() == "triplet_cut 0-1-2 {0} 1\n");
    CHECK(state.triple_product0(0));
    CHECK_FALSE(state.triple_product1(0));
    for (int e = 0; e < 3; ++e) CHECK(state.edge_status(e) == EdgeStatus::free_edge);
    CHECK_FALSE(state.fully_fixed());
    CHECK_FALSE(state.timed_out());
    CHECK(state.stats().fixed_edge_fraction == doctest::Approx(0.0));
    CHECK(state.stats().fixed_triple_fraction == doctest::Approx(1.0));
    CHECK(state.accumulated_offset() == doctest::Approx(0.0));
    REQUIRE(state.leaves().size() == 1);
    CHECK(state.leaves()[0].first.vertex_count() == 3);
    CHECK(state.verify());
}

TEST_CASE("strong pair is contracted and the rest separated") {
    Instance inst(3, {{0, 1, -5.0}, {0, 2, 1.0}, {1, 2, -1.0}}, {});
    auto state = reduce(inst);
    CHECK(state.event_log() == "subset_join {0,1} - 4\nseparation - {0,1}|{2} 0\n");
    CHECK(state.fully_fixed());
    CHECK(state.edge_status(*inst.find_edge(0, 1)) == EdgeStatus::fixed_1);
    CHECK(state.edge_status(*inst.find_edge(0, 2)) == EdgeStatus::fixed_0);
    CHECK(state.edge_status(*inst.find_edge(1, 2)) == EdgeStatus::fixed_0);
    CHECK(state.accumulated_offset() == doctest::Approx(-5.0));
    CHECK(state.recovered_partition() == Partition{{0, 1}, {2}});
    CHECK(state.representative(1) == 0);
    CHECK(state.component(2) != state.component(0));
    auto x = state.implied_labeling();
    CHECK(inst.is_feasible(x));
    CHECK(inst.objective(x) == doctest::Approx(-5.0));
    CHECK(solve_exact(inst).minimum == doctest::Approx(-5.0));
    CHECK(state.verify());
}

TEST_CASE("nonnegative instances separate completely") {
    Instance inst(4, {{0, 1, 2.0}, {1, 2, 0.0}, {0, 2, 0.5}, {2, 3, 1.0}, {0, 3, 3.0}},
                  {{0, 1, 2, 1.0}});
    auto state = reduce(inst);
    CHECK(state.fully_fixed());
    for (int e = 0; e < inst.edge_count(); ++e)
        CHECK(state.edge_status(e) == EdgeStatus::fixed_0);
    CHECK(state.stats().fixed_edge_fraction == doctest::Approx(1.0));
    CHECK(state.stats().fixed_triple_fraction == doctest::Approx(1.0));
    CHECK(state.recovered_partition() == Partition{{0}, {1}, {2}, {3}});
    CHECK(state.implied_labeling() == EdgeLabeling(inst.edge_count(), 0));
    CHECK(state.verify());
}

TEST_CASE("an all-negative clique is joined completely") {
    std::vector<std::tuple<int, int, double>> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v, -1.0);
    std::vector<std::tuple<int, int, int, double>> triples;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            for (int w = v + 1; w < 4; ++w) triples.emplace_back(u, v, w, -0.5);
    Instance inst(4, std::move(edges), std::move(triples));
    auto state = reduce(inst);
    CHECK(state.fully_fixed());
    for (int e = 0; e < inst.edge_count(); ++e)
        CHECK(state.edge_status(e) == EdgeStatus::fixed_1);
    CHECK(state.stats().fixed_triple_fraction == doctest::Approx(1.0));
    CHECK(state.recovered_partition() == Partition{{0, 1, 2, 3}});
    CHECK(state.accumulated_offset() == doctest::Approx(-8.0));
    CHECK(inst.objective(state.implied_labeling()) == doctest::Approx(-8.0));
    CHECK(state.verify());
}

TEST_CASE("fixations agree with some exact minimizer on random instances") {
    std::mt19937_64 rng(51);
    int fully = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Instance inst = testing::random_instance(rng, 7, 0.7);
        auto state = reduce(inst);
        CHECK(state.verify());
        CHECK_FALSE(state.timed_out());

        double leaf_offsets = 0;
        int leaf_vertices = 0;
        for (const auto& [leaf, orig] : state.leaves()) {
            leaf_offsets += leaf.offset();
            leaf_vertices += leaf.vertex_count();
            REQUIRE(int(orig.size()) == leaf.vertex_count());
        }
        CHECK(leaf_offsets == doctest::Approx(state.accumulated_offset()));
        CHECK(state.reduced_instance().vertex_count() == leaf_vertices);

        if (state.fully_fixed()) {
            ++fully;
            auto x = state.implied_labeling();
            REQUIRE(inst.is_feasible(x));
            CHECK(inst.objective(x) == doctest::Approx(solve_exact(inst).minimum));
            CHECK(x == labeling_from_partition(inst, state.recovered_partition()));
        }
    }
    CHECK(fully > 0);
}

TEST_CASE("every single-condition ablation stays sound") {
    std::mt19937_64 rng(52);
    for (int k = 0; k < kConditionCount; ++k) {
        EngineConfig cfg = only_conditions({static_cast<ConditionKind>(k)});
        for (int trial = 0; trial < 12; ++trial) {
            Instance inst = testing::random_instance(rng, 6, 0.7);
            auto state = reduce(inst, cfg);
            CHECK(state.verify());
        }
    }
}

TEST_CASE("parallel cut scans match the serial reference") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst = testing::random_instance(rng, 8, 0.7);
        ConditionContext ctx(inst);
        auto serial = scan_cut_conditions(inst, ctx, 0, true, true);
        for (int threads : {1, 2, 4}) {
            auto par = scan_cut_conditions_omp(inst, ctx, 0, true, true, threads);
            CHECK(same_scan(serial, par));
        }
    }
}

TEST_CASE("thread count does not change the reduction") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        Instance inst = testing::random_instance(rng, 7, 0.8);
        EngineConfig serial_cfg;
        serial_cfg.threads = 1;
        EngineConfig par_cfg;
        par_cfg.threads = 2;
        auto a = reduce(inst, serial_cfg);
        auto b = reduce(inst, par_cfg);
        CHECK(a.event_log() == b.event_log());
        CHECK(a.accumulated_offset() == doctest::Approx(b.accumulated_offset()));
        for (int e = 0; e < inst.edge_count(); ++e)
            CHECK(a.edge_status(e) == b.edge_status(e));
    }
}

TEST_CASE("repeated runs are identical") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        Instance inst = testing::random_instance(rng, 7, 0.7);
        auto a = reduce(inst);
        auto b = reduce(inst);
        CHECK(a.event_log() == b.event_log());
        CHECK(a.stats().fixed_edge_fraction == b.stats().fixed_edge_fraction);
        CHECK(a.stats().fixed_triple_fraction == b.stats().fixed_triple_fraction);
    }
}

TEST_CASE("a tiny time budget degrades gracefully") {
    std::mt19937_64 rng(56);
    Instance inst = testing::random_instance(rng, 8, 0.9);
    EngineConfig cfg;
    cfg.time_limit = std::chrono::nanoseconds(1);
    auto state = reduce(inst, cfg);
    CHECK(state.timed_out());
    CHECK(state.verify());
}

TEST_CASE("large slack suppresses everything but separation") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 15; ++trial) {
        Instance inst = testing::random_instance(rng, 7, 0.7);
        EngineConfig cfg;
        cfg.slack = 1e9;
        auto state = reduce(inst, cfg);
        for (const Event& ev : state.events()) CHECK(ev.kind == ConditionKind::separation);
        CHECK(state.verify());
    }
}

TEST_CASE("join order rejects non-join conditions") {
    Instance inst(2, {{0, 1, -1.0}}, {});
    EngineConfig cfg;
    cfg.join_order.push_back(ConditionKind::edge_cut);
    CHECK_THROWS_AS((void)reduce(inst, cfg), std::invalid_argument);
}

TEST_CASE("event formatting") {
    Event ev;
    ev.kind = ConditionKind::edge_cut;
    ev.target = {3, 7};
    ev.witnesses = {{0, 3}, {5}};
    ev.margin = 2.5;
    CHECK(format_event(ev) == "edge_cut 3-7 {0,3}|{5} 2.5");

    Event join;
    join.kind = ConditionKind::subset_join;
    join.target = {1, 2, 4};
    join.margin = 1.0;
    CHECK(format_event(join) == "subset_join {1,2,4} - 1");
}

}  // TEST_SUITE
