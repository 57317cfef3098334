#pragma once

#include <span>
#include <vector>

#include "ccp/instance.hpp"

// Feasibility-preserving elementary maps on edge labelings and the
// cost-preserving contraction of an edge fixed to 1.
namespace ccp {

// Sets every edge crossing U to 0. Maps feasible labelings to feasible
// labelings.
EdgeLabeling cut_map(const Instance& inst, const EdgeLabeling& x, std::span<const int> U);

// Sets every edge inside U to 1 and closes transitively: an edge pq becomes
// 1 whenever p and q are connected by edges that are labeled 1 or lie inside
// U. Maps feasible labelings to feasible labelings and never clears a 1.
EdgeLabeling join_map(const Instance& inst, const EdgeLabeling& x, std::span<const int> U);

struct ContractionResult {
    Instance reduced;
    std::vector<int> vertex_map;  // old vertex -> new vertex
    Edge contracted;
};

// Identifies the endpoints of edge e, keeping the smaller index as the
// representative and renumbering densely. Costs merge so that the reduced
// objective equals the original objective restricted to x_e = 1:
// parallel edges and triples add up, triples through both endpoints fold
// into the merged edge, and the edge cost moves into the offset.
ContractionResult contract_edge(const Instance& inst, int e);

}  // namespace ccp
