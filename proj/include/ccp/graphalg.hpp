#pragma once

#include <limits>
#include <tuple>
#include <utility>
#include <vector>

namespace ccp {

class DisjointSets {
  public:
    explicit DisjointSets(int n);
    int find(int v);
    // Returns true if the two sets were distinct.
    bool unite(int a, int b);
    int component_count() const { return components_; }
    int size(int v);

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

// Component ids are dense and assigned in order of the smallest vertex of
// each component.
std::vector<int> connected_components(int n, const std::vector<std::pair<int, int>>& edges);

// Directed flow network solved by FIFO push-relabel with the gap heuristic.
// After max_flow_min_cut the reported source side is the set of vertices
// reachable from s in the residual graph, the unique minimal minimum cut.
class FlowNetwork {
  public:
    explicit FlowNetwork(int node_count);

    int node_count() const { return n_; }

    // Adds a forward arc with the given capacity and a reverse arc with
    // capacity 0. Capacities must be nonnegative.
    void add_arc(int from, int to, double capacity);

    struct MaxFlowResult {
        double value = 0;
        std::vector<int> source_side;  // sorted, contains s; empty on early stop
    };

    // Repeatable: flows are reset on every call. The flow collected at the
    // sink never decreases and is always achievable, so once it exceeds
    // stop_above the min cut provably does too and the search stops early,
    // returning that lower bound with an empty source side.
    MaxFlowResult max_flow_min_cut(int s, int t,
                                   double stop_above = std::numeric_limits<double>::infinity());

  private:
    struct Arc {
        int to;
        double cap;   // remaining capacity
        double cap0;  // original capacity
    };
    int n_ = 0;
    std::vector<std::vector<int>> out_;  // arc indices per node
    std::vector<Arc> arcs_;              // arc i paired with i^1
};

struct WeightedGraph {
    int n = 0;
    std::vector<std::tuple<int, int, double>> edges;  // undirected, weights >= 0
};

// Flow-equivalent tree (Gusfield): for distinct u, v the smallest parent_cut
// on the tree path between them equals the minimum u-v cut value of the
// graph. Built from n-1 max-flow calls; parent[0] = -1, parent_cut[0] = 0.
struct FlowEquivalentTree {
    std::vector<int> parent;
    std::vector<double> parent_cut;
};

FlowEquivalentTree flow_equivalent_tree(const WeightedGraph& g);

// Row-major n x n matrix of pairwise minimum cut values read off the tree;
// diagonal entries are 0.
std::vector<double> pairwise_min_cuts(const FlowEquivalentTree& tree);

struct GlobalMinCutResult {
    double value = 0;
    std::vector<int> side;  // sorted nonempty proper subset achieving the cut
};

// Stoer-Wagner minimum cut over all nonempty proper vertex subsets. Requires
// at least two vertices; on a disconnected graph returns 0 with a connected
// component as witness.
GlobalMinCutResult global_min_cut(const WeightedGraph& g);

}  // namespace ccp
