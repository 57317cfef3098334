#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccp/engine.hpp"
#include "ccp/experiment.hpp"
#include "ccp/generators.hpp"
#include "ccp/instance_io.hpp"
#include "ccp/oracle.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

struct EngineFlags {
    std::vector<std::string> conditions;
    double slack = 0;
    std::int64_t time_limit_ms = 0;
    int threads = 0;
};

void add_engine_flags(CLI::App* cmd, EngineFlags& f) {
    cmd->add_option("--conditions", f.conditions,
                    "enable only these conditions (comma list of separation, edge_cut, "
                    "triplet_cut, subset_join, edge_join, triangle_edge_join, "
                    "edge_subgraph_join, triplet_subgraph_join, triplet_join)")
        ->delimiter(',');
    cmd->add_option("--slack", f.slack, "margin every accepted certificate must reach");
    cmd->add_option("--time-limit", f.time_limit_ms, "reduction time limit in milliseconds");
    cmd->add_option("--threads", f.threads,
                    "cut-scan threads: 1 = serial reference, 0 = one per core");
}

ccp::EngineConfig make_engine_config(const EngineFlags& f) {
    ccp::EngineConfig cfg;
    cfg.slack = f.slack;
    cfg.threads = f.threads;
    if (f.time_limit_ms > 0) cfg.time_limit = std::chrono::milliseconds(f.time_limit_ms);
    if (!f.conditions.empty()) {
        cfg.enabled.fill(false);
        for (const auto& name : f.conditions) {
            auto k = ccp::condition_from_name(name);
            if (!k) throw std::runtime_error("unknown condition: " + name);
            cfg.enabled[static_cast<int>(*k)] = true;
        }
    }
    return cfg;
}

std::string format_partition(const ccp::Partition& blocks) {
    std::string out;
    for (const auto& block : blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(block[i]);
        }
        out += '\n';
    }
    return out;
}

void run_reduce(const std::string& in_path, const std::string& out_path,
                const EngineFlags& flags) {
    const ccp::Instance inst = ccp::read_instance_file(in_path);
    const ccp::PersistencyState state = ccp::reduce(inst, make_engine_config(flags));
    const ccp::EngineStats st = state.stats();

    std::ostringstream out;
    state.write_event_log(out);
    int fixed_edges = 0;
    for (int e = 0; e < inst.edge_count(); ++e)
        if (state.edge_status(e) != ccp::EdgeStatus::free_edge) ++fixed_edges;
    out << "stats vertices=" << inst.vertex_count() << " edges=" << inst.edge_count()
        << " triples=" << inst.triple_count() << " fixed_edges=" << fixed_edges
        << " fixed_edge_fraction=" << ccp::format_number(st.fixed_edge_fraction)
        << " fixed_triple_fraction=" << ccp::format_number(st.fixed_triple_fraction)
        << " offset=" << ccp::format_number(state.accumulated_offset())
        << " runtime_ns=" << st.runtime.count() << " timed_out=" << (state.timed_out() ? 1 : 0)
        << '\n';
    ccp::write_instance(out, state.reduced_instance());
    write_output(out_path, out.str());
}

void run_exact(const std::string& in_path, const std::string& out_path, int bound) {
    const ccp::Instance inst = ccp::read_instance_file(in_path);
    const ccp::ExactResult res = ccp::solve_exact(inst, bound);
    std::ostringstream out;
    out << "minimum " << ccp::format_number(res.minimum) << '\n';
    out << "labeling";
    for (auto v : res.argmins.front()) out << ' ' << static_cast<int>(v);
    out << '\n';
    const ccp::Partition blocks = ccp::partition_from_labeling(inst, res.argmins.front());
    out << "partition";
    for (const auto& block : blocks) {
        out << ' ';
        for (std::size_t i = 0; i < block.size(); ++i) out << (i ? "," : "") << block[i];
    }
    out << '\n';
    write_output(out_path, out.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic clique partitioning: generators, persistency reduction, exact oracle"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a synthetic instance file");
    gen->require_subcommand(1);

    ccp::PartitionConfig pcfg;
    std::string gp_out, gp_planted;
    auto* gp = gen->add_subcommand("partition", "four planted blocks with Gaussian costs");
    gp->add_option("--n", pcfg.n, "block scale, 8n vertices");
    gp->add_option("--pe", pcfg.edge_probability, "edge sampling probability");
    gp->add_option("--alpha", pcfg.alpha, "noise level in [0,1]");
    gp->add_option("--beta", pcfg.beta, "triple weight in [0,1]");
    gp->add_option("--seed", pcfg.seed, "random seed");
    gp->add_option("--out", gp_out, "instance file (default stdout)");
    gp->add_option("--planted", gp_planted, "also write the planted blocks, one per line");
    gp->callback([&] {
        auto res = ccp::gen_partition(pcfg);
        write_output(gp_out, ccp::instance_to_string(res.instance));
        if (!gp_planted.empty()) write_output(gp_planted, format_partition(res.planted));
    });

    ccp::GeometricConfig gcfg;
    std::string gg_out, gg_points;
    auto* gg = gen->add_subcommand("geometric", "noisy points around three triangles");
    gg->add_option("--m", gcfg.points_per_vertex, "points per triangle corner, 9m vertices");
    gg->add_option("--sigma", gcfg.sigma, "point noise level");
    gg->add_option("--k", gcfg.neighbor_count,
                   "nearest/farthest neighbors per point, -1 = every pair");
    gg->add_option("--seed", gcfg.seed, "random seed");
    gg->add_option("--out", gg_out, "instance file (default stdout)");
    gg->add_option("--points", gg_points, "also write the point coordinates, one per line");
    gg->callback([&] {
        auto res = ccp::gen_geometric(gcfg);
        write_output(gg_out, ccp::instance_to_string(res.instance));
        if (!gg_points.empty()) {
            std::string pts;
            for (const auto& p : res.points) {
                pts += ccp::format_number(p[0]);
                pts += ' ';
                pts += ccp::format_number(p[1]);
                pts += '\n';
            }
            write_output(gg_points, pts);
        }
    });

    // reduce
    std::string red_in, red_out;
    EngineFlags red_flags;
    auto* red = app.add_subcommand(
        "reduce", "fix variables: event log, a stats line, then the reduced instance");
    red->add_option("input", red_in, "instance file")->required();
    red->add_option("--out", red_out, "output file (default stdout)");
    add_engine_flags(red, red_flags);
    red->callback([&] { run_reduce(red_in, red_out, red_flags); });

    // exact
    std::string ex_in, ex_out;
    int ex_bound = ccp::kDefaultEnumerationBound;
    auto* ex = app.add_subcommand("exact", "exhaustive minimum and one optimal labeling");
    ex->add_option("input", ex_in, "instance file")->required();
    ex->add_option("--out", ex_out, "output file (default stdout)");
    ex->add_option("--bound", ex_bound, "largest vertex count accepted");
    ex->callback([&] { run_exact(ex_in, ex_out, ex_bound); });

    // convert-multicut
    std::string mc_in, mc_out;
    auto* mc = app.add_subcommand("convert-multicut",
                                  "rewrite over cut indicators with the mirror constant");
    mc->add_option("input", mc_in, "instance file")->required();
    mc->add_option("--out", mc_out, "output file (default stdout)");
    mc->callback([&] {
        const ccp::Instance inst = ccp::read_instance_file(mc_in);
        std::ostringstream out;
        ccp::write_multicut(out, ccp::to_cubic_multicut(inst));
        write_output(mc_out, out.str());
    });

    // experiment
    std::string exp_grid, exp_out;
    ccp::ExperimentSpec spec;
    EngineFlags exp_flags;
    auto* exp = app.add_subcommand("experiment", "parameter sweep aggregated to CSV");
    exp->add_option("grid", exp_grid, "one of partition-alpha, geometric-sigma, geometric-size")
        ->required()
        ->check(CLI::IsMember({"partition-alpha", "geometric-sigma", "geometric-size"}));
    exp->add_option("--alpha-list", spec.alpha_values, "alpha grid for partition-alpha")
        ->delimiter(',');
    exp->add_option("--sigma-list", spec.sigma_values, "sigma grid for geometric-sigma")
        ->delimiter(',');
    exp->add_option("--m-list", spec.m_values, "points-per-corner grid for geometric-size")
        ->delimiter(',');
    exp->add_option("--n", spec.n, "partition block scale");
    exp->add_option("--pe", spec.edge_probability, "partition edge probability");
    exp->add_option("--beta", spec.beta, "partition triple weight");
    exp->add_option("--m", spec.m, "points per corner for geometric-sigma");
    exp->add_option("--sigma", spec.sigma, "noise level for geometric-size");
    exp->add_option("--k", spec.neighbor_count, "geometric neighbor count, -1 = every pair");
    exp->add_option("--reps", spec.reps, "instances per grid cell");
    exp->add_option("--seed", spec.seed, "base seed");
    exp->add_flag("--zero-durations", spec.zero_durations,
                  "write 0 for all durations so reruns are byte-identical");
    exp->add_option("--out", exp_out, "CSV file (default stdout)");
    add_engine_flags(exp, exp_flags);
    exp->callback([&] {
        if (exp_grid == "partition-alpha")
            spec.kind = ccp::GridKind::partition_alpha;
        else if (exp_grid == "geometric-sigma")
            spec.kind = ccp::GridKind::geometric_sigma;
        else
            spec.kind = ccp::GridKind::geometric_size;
        spec.engine = make_engine_config(exp_flags);
        write_output(exp_out, ccp::run_experiment_csv(spec));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
