#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ccp/instance.hpp"

// Checkers that certify values taken by some optimal labeling. Cut
// conditions certify x_e = 0 or a triple product of 0, join conditions
// certify x_e = 1 or a triple product of 1. Each decided inequality is
// evaluated with plain >= on doubles; a configurable slack is subtracted
// from the favorable side, so positive slack is strictly conservative.
// Conditions whose favorable side is already <= 0 are rejected before any
// min-cut computation, since the cut value is never negative.
namespace ccp {

enum class ConditionKind {
    separation,
    edge_cut,
    triplet_cut,
    subset_join,
    edge_join,
    triangle_edge_join,
    edge_subgraph_join,
    triplet_subgraph_join,
    triplet_join,
};

inline constexpr int kConditionCount = 9;

std::string_view condition_name(ConditionKind kind);
std::optional<ConditionKind> condition_from_name(std::string_view name);

struct Certificate {
    ConditionKind kind{};
    int edge = -1;    // target edge index, if the target is an edge
    int triple = -1;  // target triple index, if a triple is involved
    std::vector<int> witness;   // cut side U, or the joined vertex set
    std::vector<int> witness2;  // second cut side, when two cuts are involved
    double margin = 0;          // slack of the decided inequality, >= 0
};

// Shared precomputation for all checks on one instance: negative parts and
// absolute values of the costs with triple weights folded into edge weights,
// the global positive-part sums, and (on instances small enough to afford
// the quadratic table) exact pairwise minimum cut values under both folded
// weight functions. Separating a source from several forbidden vertices
// costs at least as much as separating it from any one of them, so the
// tables give reject-only lower bounds that skip most flow computations.
struct ConditionContext {
    std::vector<double> folded_neg;
    std::vector<double> folded_abs;
    double total_pos_edges = 0;
    double total_pos_triples = 0;
    std::vector<double> pairwise_neg;  // row-major n x n, empty when skipped
    std::vector<double> pairwise_abs;
    int pairwise_n = 0;

    explicit ConditionContext(const Instance& inst);

    // Lower bounds on the minimum cut separating u from v; 0 (trivially
    // valid) when the tables were skipped.
    double neg_cut_between(int u, int v) const {
        return pairwise_n ? pairwise_neg[static_cast<std::size_t>(u) * pairwise_n + v] : 0;
    }
    double abs_cut_between(int u, int v) const {
        return pairwise_n ? pairwise_abs[static_cast<std::size_t>(u) * pairwise_n + v] : 0;
    }
};

struct SeparationResult {
    std::vector<std::vector<int>> groups;  // canonical: by smallest member
    std::vector<int> cut_edges;            // edges across groups, fixed to 0
};

// Groups are the components after keeping only edges that carry a negative
// cost or lie in a triple with negative cost; all other structure cannot
// make joining across groups profitable.
SeparationResult check_subset_separation(const Instance& inst);

// x_e = 0 when the positive part of c_e covers the cheapest constrained cut
// separating its endpoints under negative-part weights.
std::optional<Certificate> check_edge_cut(const Instance& inst, const ConditionContext& ctx,
                                          int e, double slack = 0);

// Triple product = 0 when, for some apex vertex of the triple, the positive
// parts of the triple cost and the two apex edges cover the cheapest cut
// separating the apex from the other two vertices.
std::optional<Certificate> check_triplet_cut(const Instance& inst, const ConditionContext& ctx,
                                             int t, double slack = 0);

// x_e = 1 when twice the negative part of c_e plus the negative parts of
// triples through e covers the cheapest cut separating its endpoints under
// absolute-value weights.
std::optional<Certificate> check_edge_join(const Instance& inst, const ConditionContext& ctx,
                                           int e, double slack = 0);

// Triple product = 1 via a single cut separating one apex from the other two
// vertices, compensated by the global positive mass and the best relabeling
// of the triangle itself.
std::optional<Certificate> check_triplet_join(const Instance& inst, const ConditionContext& ctx,
                                              int t, double slack = 0);

// x_ik = 1 for the first-last pair of triple ijk, decided by two cuts (one
// around i, one around k) and one local inequality.
std::optional<Certificate> check_triangle_edge_join(const Instance& inst,
                                                    const ConditionContext& ctx, int t,
                                                    double slack = 0);

// x_e = 1 when c_e is below the total negative mass on the boundary of its
// endpoint pair. No cut search involved.
std::optional<Certificate> check_edge_subgraph_join(const Instance& inst, int e,
                                                    double slack = 0);

// x_ik = 1 via seven local inequalities on the triple and its boundary.
std::optional<Certificate> check_triplet_subgraph_join(const Instance& inst, int t,
                                                       double slack = 0);

// Grows candidate vertex sets with all internal costs <= 0 from each
// nonpositive edge (adjacent vertices in ascending order) and accepts when
// the global minimum cut of the folded internal weights is at least the
// absolute negative boundary mass; all internal edges are then 1.
std::optional<Certificate> find_subset_join(const Instance& inst, double slack = 0);

}  // namespace ccp
