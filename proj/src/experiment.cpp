#include "ccp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "ccp/generators.hpp"
#include "ccp/instance_io.hpp"

namespace ccp {

double interpolated_quantile(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of no values");
    const double h = (static_cast<double>(sorted.size()) - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

namespace {

struct CellResult {
    std::vector<double> edge_fractions;
    std::vector<double> triple_fractions;
    std::vector<double> durations;
};

void append_quantiles(std::string& row, std::vector<double> values) {
    std::sort(values.begin(), values.end());
    for (double p : {0.5, 0.25, 0.75}) {
        row += ',';
        row += format_number(interpolated_quantile(values, p));
    }
}

}  // namespace

std::string run_experiment_csv(const ExperimentSpec& spec) {
    if (spec.reps < 1) throw std::invalid_argument("repetitions must be positive");

    std::vector<double> keys;
    switch (spec.kind) {
        case GridKind::partition_alpha:
            keys = spec.alpha_values;
            break;
        case GridKind::geometric_sigma:
            keys = spec.sigma_values;
            break;
        case GridKind::geometric_size:
            keys.reserve(spec.m_values.size());
            for (int m : spec.m_values) keys.push_back(m);
            break;
    }
    if (keys.empty()) throw std::invalid_argument("empty parameter grid");
    std::sort(keys.begin(), keys.end());

    std::string csv;
    switch (spec.kind) {
        case GridKind::partition_alpha:
            csv = "alpha";
            break;
        case GridKind::geometric_sigma:
            csv = "sigma";
            break;
        case GridKind::geometric_size:
            csv = "numberOfPoints";
            break;
    }
    csv +=
        ",medianEliminatedVariables,q25EliminatedVariables,q75EliminatedVariables"
        ",medianEliminatedTriangles,q25EliminatedTriangles,q75EliminatedTriangles"
        ",medianDuration,q25Duration,q75Duration\n";

    for (std::size_t cell = 0; cell < keys.size(); ++cell) {
        CellResult res;
        for (int rep = 0; rep < spec.reps; ++rep) {
            const std::uint64_t rep_seed = splitmix64_at(
                spec.seed, cell * static_cast<std::uint64_t>(spec.reps) + rep);
            Instance inst;
            switch (spec.kind) {
                case GridKind::partition_alpha: {
                    PartitionConfig cfg;
                    cfg.n = spec.n;
                    cfg.edge_probability = spec.edge_probability;
                    cfg.alpha = keys[cell];
                    cfg.beta = spec.beta;
                    cfg.seed = rep_seed;
                    inst = gen_partition(cfg).instance;
                    break;
                }
                case GridKind::geometric_sigma: {
                    GeometricConfig cfg;
                    cfg.points_per_vertex = spec.m;
                    cfg.sigma = keys[cell];
                    cfg.neighbor_count = spec.neighbor_count;
                    cfg.seed = rep_seed;
                    inst = gen_geometric(cfg).instance;
                    break;
                }
                case GridKind::geometric_size: {
                    GeometricConfig cfg;
                    cfg.points_per_vertex = static_cast<int>(keys[cell]);
                    cfg.sigma = spec.sigma;
                    cfg.neighbor_count = spec.neighbor_count;
                    cfg.seed = rep_seed;
                    inst = gen_geometric(cfg).instance;
                    break;
                }
            }
            const auto t0 = std::chrono::steady_clock::now();
            PersistencyState state = reduce(inst, spec.engine);
            const auto t1 = std::chrono::steady_clock::now();
            const EngineStats stats = state.stats();
            res.edge_fractions.push_back(stats.fixed_edge_fraction);
            res.triple_fractions.push_back(stats.fixed_triple_fraction);
            res.durations.push_back(
                spec.zero_durations
                    ? 0.0
                    : static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                              t1 - t0)
                                              .count()));
        }
        csv += format_number(spec.kind == GridKind::geometric_size ? 9 * keys[cell]
                                                                   : keys[cell]);
        append_quantiles(csv, std::move(res.edge_fractions));
        append_quantiles(csv, std::move(res.triple_fractions));
        append_quantiles(csv, std::move(res.durations));
        csv += '\n';
    }
    return csv;
}

}  // namespace ccp
