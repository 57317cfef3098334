#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

// Cubic clique partitioning instances: vertices 0..n-1, costs on edges and
// on triples that form 3-cliques, plus a constant offset. The objective of
// an edge labeling x is
//
//   offset + sum_{pq in E} c_pq x_pq + sum_{pqr in T} c_pqr x_pq x_pr x_qr
//
// and x is feasible iff its 1-edges are transitively closed within connected
// components, i.e. x arises from a partition of the vertices into connected
// blocks.
namespace ccp {

struct Edge {
    int u, v;  // u < v
    bool operator==(const Edge&) const = default;
};

struct Triple {
    int u, v, w;  // u < v < w
    bool operator==(const Triple&) const = default;
};

// x_e in {0,1} per edge, indexed like Instance::edge().
using EdgeLabeling = std::vector<std::uint8_t>;

// Blocks of a vertex partition; canonical form sorts each block and orders
// blocks by smallest element.
using Partition = std::vector<std::vector<int>>;

inline double pos(double r) { return r > 0 ? r : 0; }
inline double neg(double r) { return r < 0 ? -r : 0; }

class Instance {
  public:
    Instance() = default;
    Instance(int vertex_count,
             std::vector<std::tuple<int, int, double>> edges,
             std::vector<std::tuple<int, int, int, double>> triples,
             double offset = 0);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int triple_count() const { return static_cast<int>(triples_.size()); }
    double offset() const { return offset_; }

    const Edge& edge(int e) const { return edges_[e]; }
    double edge_cost(int e) const { return edge_cost_[e]; }
    const Triple& triple(int t) const { return triples_[t]; }
    double triple_cost(int t) const { return triple_cost_[t]; }

    // Edge indices of the three sides uv, uw, vw of triple t.
    const std::array<int, 3>& triple_edges(int t) const { return triple_edges_[t]; }

    std::optional<int> find_edge(int u, int v) const;
    std::optional<int> find_triple(int u, int v, int w) const;

    // (neighbor, edge index) pairs, ascending by neighbor.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }

    // Indices of triples containing edge e.
    const std::vector<int>& triples_of_edge(int e) const { return edge_triples_[e]; }

    bool is_feasible(const EdgeLabeling& x) const;

    // Rejects infeasible labelings; the objective is defined on feasible
    // labelings only.
    double objective(const EdgeLabeling& x) const;

    // Same value, caller guarantees feasibility (hot loops).
    double objective_unchecked(const EdgeLabeling& x) const;

    bool has_integral_costs() const;

    // Edges with exactly one endpoint in U.
    std::vector<int> boundary_edges(std::span<const int> U) const;
    // Edges with one endpoint in U and the other in Uprime; the sets must be
    // disjoint.
    std::vector<int> boundary_edges(std::span<const int> U, std::span<const int> Uprime) const;
    // Triples containing at least one of the given edges.
    std::vector<int> triples_cut_by(std::span<const int> edge_indices) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> edge_cost_;
    std::vector<Triple> triples_;
    std::vector<double> triple_cost_;
    std::vector<std::array<int, 3>> triple_edges_;
    double offset_ = 0;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::vector<int>> edge_triples_;
};

// x_pq = 1 iff p,q share a block; every block must induce a connected
// subgraph and the blocks must partition the vertex set.
EdgeLabeling labeling_from_partition(const Instance& inst, const Partition& partition);

// Blocks are the connected components of the 1-edges (singletons included),
// in canonical form. Rejects infeasible labelings.
Partition partition_from_labeling(const Instance& inst, const EdgeLabeling& x);

// Equivalent minimization problem over cut indicators z = 1 - x and
// y = 1 - x x x. Stored costs carry the sign flip that makes the two
// problems agree: ccp_objective(x) + objective(1-x, 1-xxx) == constant.
struct MulticutInstance {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<double> edge_costs;  // z-variable costs, negated source costs
    std::vector<Triple> triples;
    std::vector<double> triple_costs;  // y-variable costs, negated source costs
    double constant = 0;               // sum c_T + sum c_E + 2*offset
    double offset = 0;                 // source offset

    double objective(const std::vector<std::uint8_t>& z,
                     const std::vector<std::uint8_t>& y) const;
};

MulticutInstance to_cubic_multicut(const Instance& inst);

}  // namespace ccp
