#pragma once

#include <functional>
#include <vector>

#include "ccp/instance.hpp"

// Exhaustive reference answers for small instances. Feasible labelings are
// enumerated by walking restricted growth strings (one per set partition)
// and keeping the partitions whose blocks induce connected subgraphs, which
// are in bijection with the feasible labelings.
namespace ccp {

inline constexpr int kDefaultEnumerationBound = 12;

// Calls fn once per feasible labeling. Refuses instances with more vertices
// than the bound.
void for_each_feasible(const Instance& inst,
                       const std::function<void(const EdgeLabeling&)>& fn,
                       int bound = kDefaultEnumerationBound);

std::vector<EdgeLabeling> enumerate_feasible(const Instance& inst,
                                             int bound = kDefaultEnumerationBound);

struct ExactResult {
    double minimum = 0;
    std::vector<EdgeLabeling> argmins;  // every feasible minimizer
};

ExactResult solve_exact(const Instance& inst, int bound = kDefaultEnumerationBound);

struct Fixations {
    std::vector<std::pair<int, std::uint8_t>> edge_values;  // (edge index, value)
    std::vector<int> triples_product0;  // triple indices with x_pq x_pr x_qr = 0
    std::vector<int> triples_product1;  // triple indices with x_pq x_pr x_qr = 1
};

// True iff some global minimizer satisfies all fixations, i.e. the minimum
// over satisfying labelings exists and equals the unconstrained minimum.
// Exact comparison for integral costs, 1e-9 absolute tolerance otherwise.
bool verify_persistency(const Instance& inst, const Fixations& fixations,
                        int bound = kDefaultEnumerationBound);

}  // namespace ccp
