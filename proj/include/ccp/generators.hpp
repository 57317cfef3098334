#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "ccp/instance.hpp"

// Seeded synthetic instance families. Both generators are deterministic
// functions of their config: topology and costs are drawn from independent
// streams derived from the seed, so the same seed yields the same graph
// under different cost parameters.
namespace ccp {

// The i-th output of the splitmix64 sequence started at seed.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i);

// mt19937_64 seeded from the given stream of the seed.
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0,1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);

// Standard normal via Box-Muller on two uniforms (one value per call).
double standard_normal(std::mt19937_64& rng);

// Four planted blocks of sizes n, 2n, 2n, 3n on 8n vertices. Every vertex
// pair becomes an edge with probability edge_probability; afterwards each
// block is made connected by scanning its pairs in ascending order and
// adding any pair not yet connected within the block. Triples are all
// 3-cliques. Costs are Gaussian with mean -1+alpha for edges/triples lying
// inside one block and 1-alpha otherwise, standard deviation
// 0.1 + alpha * 0.3; edge costs are scaled by 1-beta, triple costs by beta.
struct PartitionConfig {
    int n = 1;
    double edge_probability = 1;
    double alpha = 0;
    double beta = 0.5;
    std::uint64_t seed = 0;
};

struct GeneratedPartition {
    Instance instance;
    Partition planted;
};

GeneratedPartition gen_partition(const PartitionConfig& cfg);

// Nine clusters of points around the corners of three unit-side equilateral
// triangles; points_per_vertex Gaussian points per corner (sigma * identity
// covariance), indexed corner-major. Edges connect all pairs drawn from the
// same triangle plus, for every point, its neighbor_count nearest and
// farthest other points (ties broken by index); neighbor_count < 0 connects
// every pair. Triples are all 3-cliques, with costs from
// triple_cost_geometric; edge costs are 0.
struct GeometricConfig {
    int points_per_vertex = 1;
    double sigma = 0.1;
    int neighbor_count = -1;
    std::uint64_t seed = 0;
};

struct GeneratedGeometric {
    Instance instance;
    std::vector<std::array<double, 2>> points;
};

GeneratedGeometric gen_geometric(const GeometricConfig& cfg);

// The nine triangle corners used by gen_geometric.
std::array<std::array<double, 2>, 9> geometric_triangle_corners();

// Piecewise cost of grouping three points, scaled by the noise level:
// all pairwise distances <= 4*sigma -> -1 + d_max/(4*sigma); only some
// <= 4*sigma -> 0; all > 4*sigma -> from the total deviation d of the
// interior angles from pi/3: -1 + 6d/pi if d <= pi/6, else
// (6/7)*(d - pi/6)/pi.
double triple_cost_geometric(const std::array<double, 2>& p, const std::array<double, 2>& q,
                             const std::array<double, 2>& r, double sigma);

}  // namespace ccp
