#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccp/engine.hpp"

// Parameter sweeps aggregated to CSV, one row per grid cell. Columns:
// <key>,medianEliminatedVariables,q25EliminatedVariables,
// q75EliminatedVariables,medianEliminatedTriangles,q25EliminatedTriangles,
// q75EliminatedTriangles,medianDuration,q25Duration,q75Duration
// where <key> is alpha, sigma, or numberOfPoints depending on the grid.
// Eliminated columns are the fixed fractions in [0,1]; durations are
// nanoseconds around the reduction call only.
namespace ccp {

enum class GridKind {
    partition_alpha,  // planted-partition instances over a list of alpha
    geometric_sigma,  // point-cloud instances over a list of sigma
    geometric_size,   // point-cloud instances over a list of points per corner
};

struct ExperimentSpec {
    GridKind kind = GridKind::partition_alpha;
    std::vector<double> alpha_values;
    std::vector<double> sigma_values;
    std::vector<int> m_values;  // points per corner, geometric_size

    int n = 7;                    // partition scale, |V| = 8n
    double edge_probability = 1;  // partition edge sampling
    double beta = 0.5;            // partition edge/triple weighting
    int m = 7;                    // points per corner for geometric_sigma
    double sigma = 0.1;           // noise level for geometric_size
    int neighbor_count = -1;      // geometric edge rule, < 0 = every pair

    int reps = 20;
    std::uint64_t seed = 0;
    EngineConfig engine;
    // Report every duration as 0 so repeated runs are byte-identical.
    bool zero_durations = false;
};

// Quantile of sorted values by linear interpolation at rank (size-1)*p.
double interpolated_quantile(const std::vector<double>& sorted, double p);

std::string run_experiment_csv(const ExperimentSpec& spec);

}  // namespace ccp
