#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "ccp/graphalg.hpp"
#include "ccp/instance.hpp"

// Constrained minimum cut solved exactly by a chain of cost-preserving
// rewrites: triple weights fold into edge weights, the cut problem becomes a
// pseudo-boolean quadratic minimization, and for nonpositive quadratic
// coefficients that minimization is a minimum s-t cut.
namespace ccp {

struct Qubo {
    int variable_count = 0;
    double constant = 0;
    std::vector<double> linear;                        // per variable
    std::vector<std::tuple<int, int, double>> quadratic;  // p < q, distinct pairs

    double evaluate(std::span<const std::uint8_t> y) const;
};

// w'_pq = w_pq + 1/2 * sum of w_pqr over triples containing pq; for every
// vertex set U the folded edge weights cut by U sum to the original edge
// weights cut plus the original weights of triples cut.
std::vector<double> fold_triples_into_edges(const Instance& topology,
                                            std::span<const double> edge_weights,
                                            std::span<const double> triple_weights);

struct CutQubo {
    Qubo qubo;
    std::vector<int> var_vertex;  // qubo variable -> vertex
};

// Minimizing the result over y in {0,1}^V' equals minimizing the weight of
// delta(U) over U containing source and avoiding all forbidden vertices,
// with U = {source} + {v : y_v = 1}.
CutQubo cut_problem_to_qubo(const Instance& topology, std::span<const double> edge_weights,
                            int source, std::span<const int> forbidden);

struct QuboFlow {
    FlowNetwork network;  // variables 0..k-1, then s = k, t = k+1
    int s = 0;
    int t = 0;
    double constant = 0;  // add to the max-flow value to get the qubo minimum
};

// Requires all quadratic coefficients <= 0 (submodular).
QuboFlow qubo_to_flow(const Qubo& qubo);

struct QuboMinimum {
    double value = 0;
    std::vector<std::uint8_t> assignment;  // the minimal (source-side) argmin
    // True when the search stopped early because the minimum provably
    // exceeds the stop_above threshold; value is then a lower bound greater
    // than the threshold and assignment is empty. The stop is opportunistic:
    // a run may also complete exactly even when the minimum exceeds the
    // threshold. With stop_above >= minimum the result is always complete.
    bool aborted = false;
};

QuboMinimum minimize_submodular_qubo(const Qubo& qubo,
                                     double stop_above = std::numeric_limits<double>::infinity());

struct ConstrainedCutResult {
    double value = 0;
    std::vector<int> source_set;  // sorted, contains source, avoids forbidden
    bool aborted = false;         // see QuboMinimum::aborted
};

// Minimum over U with source in U and U disjoint from forbidden of the total
// edge weight of delta(U) plus the total triple weight of triples cut by U.
// Weights must be nonnegative. Among minimizers returns the one induced by
// residual reachability (the minimal source side). A finite stop_above lets
// the search stop as soon as the minimum provably exceeds it (callers that
// only reject in that case skip the rest of the computation).
ConstrainedCutResult min_constrained_cut(const Instance& topology,
                                         std::span<const double> edge_weights,
                                         std::span<const double> triple_weights,
                                         int source, std::span<const int> forbidden,
                                         double stop_above = std::numeric_limits<double>::infinity());

// Same search with triple weights already folded into the edge weights.
ConstrainedCutResult min_constrained_cut_folded(const Instance& topology,
                                                std::span<const double> folded_edge_weights,
                                                int source, std::span<const int> forbidden,
                                                double stop_above = std::numeric_limits<double>::infinity());

}  // namespace ccp
