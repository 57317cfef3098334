#include "ccp/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ccp/graphalg.hpp"

namespace ccp {

void for_each_feasible(const Instance& inst,
                       const std::function<void(const EdgeLabeling&)>& fn,
                       int bound) {
    const int n = inst.vertex_count();
    if (n > bound)
        throw std::runtime_error("enumeration refused: " + std::to_string(n) +
                                 " vertices exceed bound " + std::to_string(bound));
    if (n == 0) {
        fn(EdgeLabeling{});
        return;
    }

    const int m = inst.edge_count();
    std::vector<int> label(n, 0);
    EdgeLabeling x(m, 0);

    auto visit = [&]() {
        DisjointSets ds(n);
        for (int e = 0; e < m; ++e)
            if (label[inst.edge(e).u] == label[inst.edge(e).v])
                ds.unite(inst.edge(e).u, inst.edge(e).v);
        // Blocks must be connected: all vertices of a label share one root.
        std::vector<int> root_of_label(n, -1);
        for (int v = 0; v < n; ++v) {
            int& r = root_of_label[label[v]];
            if (r == -1)
                r = ds.find(v);
            else if (r != ds.find(v))
                return;
        }
        for (int e = 0; e < m; ++e)
            x[e] = label[inst.edge(e).u] == label[inst.edge(e).v];
        fn(x);
    };

    // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[<i]).
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            visit();
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            label[i] = v;
            rec(i + 1, std::max(max_used, v));
        }
    };
    label[0] = 0;
    rec(1, 0);
}

std::vector<EdgeLabeling> enumerate_feasible(const Instance& inst, int bound) {
    std::vector<EdgeLabeling> r;
    for_each_feasible(inst, [&](const EdgeLabeling& x) { r.push_back(x); }, bound);
    return r;
}

ExactResult solve_exact(const Instance& inst, int bound) {
    ExactResult r;
    r.minimum = std::numeric_limits<double>::infinity();
    for_each_feasible(
        inst,
        [&](const EdgeLabeling& x) {
            double v = inst.objective_unchecked(x);
            if (v < r.minimum) {
                r.minimum = v;
                r.argmins.clear();
            }
            if (v == r.minimum) r.argmins.push_back(x);
        },
        bound);
    return r;
}

bool verify_persistency(const Instance& inst, const Fixations& fixations, int bound) {
    for (const auto& [e, val] : fixations.edge_values) {
        if (e < 0 || e >= inst.edge_count())
            throw std::invalid_argument("fixation edge index out of range");
        if (val > 1) throw std::invalid_argument("fixation edge value must be 0 or 1");
    }
    for (int t : fixations.triples_product0)
        if (t < 0 || t >= inst.triple_count())
            throw std::invalid_argument("fixation triple index out of range");
    for (int t : fixations.triples_product1)
        if (t < 0 || t >= inst.triple_count())
            throw std::invalid_argument("fixation triple index out of range");

    double best = std::numeric_limits<double>::infinity();
    double best_satisfying = std::numeric_limits<double>::infinity();

    for_each_feasible(
        inst,
        [&](const EdgeLabeling& x) {
            double v = inst.objective_unchecked(x);
            best = std::min(best, v);

            for (const auto& [e, val] : fixations.edge_values)
                if (x[e] != val) return;
            for (int t : fixations.triples_product0) {
                const auto& te = inst.triple_edges(t);
                if (x[te[0]] && x[te[1]] && x[te[2]]) return;
            }
            for (int t : fixations.triples_product1) {
                const auto& te = inst.triple_edges(t);
                if (!(x[te[0]] && x[te[1]] && x[te[2]])) return;
            }
            best_satisfying = std::min(best_satisfying, v);
        },
        bound);

    if (std::isinf(best_satisfying)) return false;
    if (inst.has_integral_costs()) return best_satisfying == best;
    return std::abs(best_satisfying - best) <= 1e-9;
}

}  // namespace ccp
