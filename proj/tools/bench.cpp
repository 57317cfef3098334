#include <chrono>
#include <cstdint>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "ccp/conditions.hpp"
#include "ccp/engine.hpp"
#include "ccp/generators.hpp"

namespace {

bool same_cert(const std::optional<ccp::Certificate>& a,
               const std::optional<ccp::Certificate>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->kind == b->kind && a->edge == b->edge && a->triple == b->triple &&
           a->witness == b->witness && a->witness2 == b->witness2 && a->margin == b->margin;
}

bool same_scan(const ccp::CutScanResult& a, const ccp::CutScanResult& b) {
    if (a.edge_certs.size() != b.edge_certs.size()) return false;
    if (a.triple_certs.size() != b.triple_certs.size()) return false;
    for (std::size_t i = 0; i < a.edge_certs.size(); ++i)
        if (!same_cert(a.edge_certs[i], b.edge_certs[i])) return false;
    for (std::size_t i = 0; i < a.triple_certs.size(); ++i)
        if (!same_cert(a.triple_certs[i], b.triple_certs[i])) return false;
    return true;
}

template <typename F>
std::int64_t best_ns(F&& fn, int reps) {
    std::int64_t best = -1;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        if (best < 0 || ns < best) best = ns;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time the serial cut scan against the OpenMP kernel"};
    int n = 3;
    double alpha = 0.5, beta = 0.5, pe = 1;
    int reps = 5;
    std::uint64_t seed = 0;
    std::vector<int> thread_counts{2, 4, 0};
    app.add_option("--n", n, "block scale, 8n vertices");
    app.add_option("--alpha", alpha, "noise level");
    app.add_option("--beta", beta, "triple weight");
    app.add_option("--pe", pe, "edge probability");
    app.add_option("--reps", reps, "timing repetitions, best is kept");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--threads", thread_counts, "thread counts to try, 0 = one per core")
        ->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const auto gen = ccp::gen_partition({n, pe, alpha, beta, seed});
    const ccp::Instance& inst = gen.instance;
    const ccp::ConditionContext ctx(inst);
    std::cout << "vertices=" << inst.vertex_count() << " edges=" << inst.edge_count()
              << " triples=" << inst.triple_count() << "\n";

    ccp::CutScanResult serial;
    const std::int64_t serial_ns = best_ns(
        [&] { serial = ccp::scan_cut_conditions(inst, ctx, 0, true, true); }, reps);
    std::cout << "serial           " << serial_ns / 1e6 << " ms\n";

    bool all_identical = true;
    for (int t : thread_counts) {
        ccp::CutScanResult par;
        const std::int64_t par_ns = best_ns(
            [&] { par = ccp::scan_cut_conditions_omp(inst, ctx, 0, true, true, t); }, reps);
        const bool identical = same_scan(serial, par);
        all_identical = all_identical && identical;
        std::cout << "omp threads=" << t << "   " << par_ns / 1e6 << " ms  speedup "
                  << static_cast<double>(serial_ns) / static_cast<double>(par_ns)
                  << "  identical " << (identical ? "yes" : "NO") << "\n";
    }
    return all_identical ? 0 : 1;
}
