#pragma once

#include <random>
#include <tuple>
#include <vector>

#include "ccp/instance.hpp"

// Deterministic random inputs shared by the property tests.
namespace ccp::testing {

// Random instance with integer costs in [-3,3]: vertex pairs become edges
// with the given density, triples are all 3-cliques of the sampled edges.
inline Instance random_instance(std::mt19937_64& rng, int n, double density) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> cost(-3, 3);
    std::vector<std::tuple<int, int, double>> edges;
    std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < density) {
                edges.emplace_back(u, v, cost(rng));
                has[u][v] = 1;
            }
    std::vector<std::tuple<int, int, int, double>> triples;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (has[u][v] && has[u][w] && has[v][w]) triples.emplace_back(u, v, w, cost(rng));
    return Instance(n, std::move(edges), std::move(triples));
}

// Random feasible labeling: blocks are the components of a random edge
// subset, so every block is connected by construction.
inline EdgeLabeling random_feasible_labeling(std::mt19937_64& rng, const Instance& inst,
                                             double keep = 0.4) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> comp(inst.vertex_count());
    for (int v = 0; v < inst.vertex_count(); ++v) comp[v] = v;
    auto find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (int e = 0; e < inst.edge_count(); ++e)
        if (coin(rng) < keep) comp[find(inst.edge(e).u)] = find(inst.edge(e).v);
    EdgeLabeling x(inst.edge_count(), 0);
    for (int e = 0; e < inst.edge_count(); ++e)
        x[e] = find(inst.edge(e).u) == find(inst.edge(e).v) ? 1 : 0;
    return x;
}

// Random nonempty vertex subset.
inline std::vector<int> random_subset(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (coin(rng) < 0.4) out.push_back(v);
    if (out.empty()) out.push_back(static_cast<int>(rng() % n));
    return out;
}

}  // namespace ccp::testing
