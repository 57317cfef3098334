#include "ccp/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccp {

double Qubo::evaluate(std::span<const std::uint8_t> y) const {
    if (static_cast<int>(y.size()) != variable_count)
        throw std::invalid_argument("assignment size does not match variable count");
    double r = constant;
    for (int p = 0; p < variable_count; ++p)
        if (y[p]) r += linear[p];
    for (const auto& [p, q, c] : quadratic)
        if (y[p] && y[q]) r += c;
    return r;
}

std::vector<double> fold_triples_into_edges(const Instance& topology,
                                            std::span<const double> edge_weights,
                                            std::span<const double> triple_weights) {
    if (static_cast<int>(edge_weights.size()) != topology.edge_count() ||
        static_cast<int>(triple_weights.size()) != topology.triple_count())
        throw std::invalid_argument("weight vector size does not match topology");
    std::vector<double> folded(edge_weights.begin(), edge_weights.end());
    for (int t = 0; t < topology.triple_count(); ++t) {
        for (int e : topology.triple_edges(t)) folded[e] += 0.5 * triple_weights[t];
    }
    return folded;
}

CutQubo cut_problem_to_qubo(const Instance& topology, std::span<const double> edge_weights,
                            int source, std::span<const int> forbidden) {
    const int n = topology.vertex_count();
    if (static_cast<int>(edge_weights.size()) != topology.edge_count())
        throw std::invalid_argument("weight vector size does not match topology");
    if (source < 0 || source >= n) throw std::invalid_argument("source out of range");

    std::vector<char> excluded(n, 0);
    excluded[source] = 1;
    for (int v : forbidden) {
        if (v < 0 || v >= n) throw std::invalid_argument("forbidden vertex out of range");
        if (v == source) throw std::invalid_argument("source cannot be forbidden");
        excluded[v] = 1;
    }

    CutQubo r;
    std::vector<int> var_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!excluded[v]) {
            var_of[v] = static_cast<int>(r.var_vertex.size());
            r.var_vertex.push_back(v);
        }
    }
    r.qubo.variable_count = static_cast<int>(r.var_vertex.size());
    r.qubo.linear.assign(r.qubo.variable_count, 0);

    for (int p = 0; p < r.qubo.variable_count; ++p) {
        int v = r.var_vertex[p];
        double sum = 0;
        double to_source = 0;
        for (const auto& [q, e] : topology.neighbors(v)) {
            sum += edge_weights[e];
            if (q == source) to_source = edge_weights[e];
        }
        r.qubo.linear[p] = sum - 2 * to_source;
    }

    for (int e = 0; e < topology.edge_count(); ++e) {
        const Edge& ed = topology.edge(e);
        int p = var_of[ed.u], q = var_of[ed.v];
        if (p >= 0 && q >= 0)
            r.qubo.quadratic.emplace_back(std::min(p, q), std::max(p, q), -2 * edge_weights[e]);
        if (ed.u == source || ed.v == source) r.qubo.constant += edge_weights[e];
    }
    return r;
}

QuboFlow qubo_to_flow(const Qubo& qubo) {
    const int k = qubo.variable_count;
    if (static_cast<int>(qubo.linear.size()) != k)
        throw std::invalid_argument("linear coefficient count does not match");

    // c''_p = c_p + 1/2 sum_q c_pq, arcs both ways with capacity -c_pq/2.
    std::vector<double> lin(qubo.linear.begin(), qubo.linear.end());
    for (const auto& [p, q, c] : qubo.quadratic) {
        if (c > 0) throw std::invalid_argument("positive quadratic coefficient: not submodular");
        if (p < 0 || q < 0 || p >= k || q >= k || p == q)
            throw std::invalid_argument("invalid quadratic pair");
        lin[p] += 0.5 * c;
        lin[q] += 0.5 * c;
    }

    QuboFlow r{FlowNetwork(k + 2), k, k + 1, qubo.constant};
    for (int p = 0; p < k; ++p) {
        if (lin[p] < 0) {
            r.network.add_arc(r.s, p, -lin[p]);
            r.constant += lin[p];
        } else if (lin[p] > 0) {
            r.network.add_arc(p, r.t, lin[p]);
        }
    }
    for (const auto& [p, q, c] : qubo.quadratic) {
        if (c < 0) {
            r.network.add_arc(p, q, -0.5 * c);
            r.network.add_arc(q, p, -0.5 * c);
        }
    }
    return r;
}

QuboMinimum minimize_submodular_qubo(const Qubo& qubo, double stop_above) {
    QuboFlow qf = qubo_to_flow(qubo);
    QuboMinimum r;
    if (qf.constant > stop_above) {  // even zero flow already exceeds it
        r.value = qf.constant;
        r.aborted = true;
        return r;
    }
    auto mf = qf.network.max_flow_min_cut(qf.s, qf.t, stop_above - qf.constant);
    r.value = mf.value + qf.constant;
    if (mf.source_side.empty()) {
        r.aborted = true;
        return r;
    }
    r.assignment.assign(qubo.variable_count, 0);
    for (int v : mf.source_side)
        if (v < qubo.variable_count) r.assignment[v] = 1;
    return r;
}

ConstrainedCutResult min_constrained_cut(const Instance& topology,
                                         std::span<const double> edge_weights,
                                         std::span<const double> triple_weights,
                                         int source, std::span<const int> forbidden,
                                         double stop_above) {
    std::vector<double> folded = fold_triples_into_edges(topology, edge_weights, triple_weights);
    return min_constrained_cut_folded(topology, folded, source, forbidden, stop_above);
}

ConstrainedCutResult min_constrained_cut_folded(const Instance& topology,
                                                std::span<const double> folded_edge_weights,
                                                int source, std::span<const int> forbidden,
                                                double stop_above) {
    if (forbidden.empty())
        throw std::invalid_argument("forbidden set must be nonempty");
    for (double w : folded_edge_weights)
        if (w < 0) throw std::invalid_argument("cut weights must be nonnegative");

    CutQubo cq = cut_problem_to_qubo(topology, folded_edge_weights, source, forbidden);
    QuboMinimum qm = minimize_submodular_qubo(cq.qubo, stop_above);

    ConstrainedCutResult r;
    r.value = qm.value;
    if (qm.aborted) {
        r.aborted = true;
        return r;
    }
    r.source_set.push_back(source);
    for (int p = 0; p < cq.qubo.variable_count; ++p)
        if (qm.assignment[p]) r.source_set.push_back(cq.var_vertex[p]);
    std::sort(r.source_set.begin(), r.source_set.end());
    return r;
}

}  // namespace ccp
