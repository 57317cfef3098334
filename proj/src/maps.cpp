#include "ccp/maps.hpp"

#include <map>
#include <stdexcept>

#include "ccp/graphalg.hpp"

namespace ccp {

namespace {

std::vector<char> member_mask(const Instance& inst, std::span<const int> U) {
    std::vector<char> in(inst.vertex_count(), 0);
    for (int v : U) {
        if (v < 0 || v >= inst.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    return in;
}

}  // namespace

EdgeLabeling cut_map(const Instance& inst, const EdgeLabeling& x, std::span<const int> U) {
    if (static_cast<int>(x.size()) != inst.edge_count())
        throw std::invalid_argument("labeling size does not match edge count");
    std::vector<char> in = member_mask(inst, U);
    EdgeLabeling r = x;
    for (int e = 0; e < inst.edge_count(); ++e)
        if (in[inst.edge(e).u] != in[inst.edge(e).v]) r[e] = 0;
    return r;
}

EdgeLabeling join_map(const Instance& inst, const EdgeLabeling& x, std::span<const int> U) {
    if (static_cast<int>(x.size()) != inst.edge_count())
        throw std::invalid_argument("labeling size does not match edge count");
    std::vector<char> in = member_mask(inst, U);
    DisjointSets ds(inst.vertex_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
        const Edge& ed = inst.edge(e);
        if (x[e] || (in[ed.u] && in[ed.v])) ds.unite(ed.u, ed.v);
    }
    EdgeLabeling r(inst.edge_count(), 0);
    for (int e = 0; e < inst.edge_count(); ++e)
        r[e] = ds.find(inst.edge(e).u) == ds.find(inst.edge(e).v);
    return r;
}

ContractionResult contract_edge(const Instance& inst, int e) {
    if (e < 0 || e >= inst.edge_count())
        throw std::invalid_argument("edge index out of range");
    const int i = inst.edge(e).u;
    const int j = inst.edge(e).v;  // i < j, i survives
    const int n = inst.vertex_count();

    std::vector<int> vmap(n);
    for (int v = 0; v < n; ++v) vmap[v] = v < j ? v : (v == j ? i : v - 1);

    auto is_ij = [&](int v) { return v == i || v == j; };

    std::map<std::pair<int, int>, double> new_edges;
    for (int k = 0; k < inst.edge_count(); ++k) {
        if (k == e) continue;
        const Edge& ed = inst.edge(k);
        int a = vmap[ed.u], b = vmap[ed.v];
        if (a > b) std::swap(a, b);
        new_edges[{a, b}] += inst.edge_cost(k);
    }

    std::map<std::tuple<int, int, int>, double> new_triples;
    for (int t = 0; t < inst.triple_count(); ++t) {
        const Triple& tr = inst.triple(t);
        int cnt = is_ij(tr.u) + is_ij(tr.v) + is_ij(tr.w);
        if (cnt == 2) {
            // triple through both endpoints folds into the merged edge
            int p = !is_ij(tr.u) ? tr.u : (!is_ij(tr.v) ? tr.v : tr.w);
            int a = vmap[p], b = i;
            if (a > b) std::swap(a, b);
            new_edges[{a, b}] += inst.triple_cost(t);
        } else {
            std::array<int, 3> m{vmap[tr.u], vmap[tr.v], vmap[tr.w]};
            std::sort(m.begin(), m.end());
            new_triples[{m[0], m[1], m[2]}] += inst.triple_cost(t);
        }
    }

    std::vector<std::tuple<int, int, double>> edges;
    edges.reserve(new_edges.size());
    for (const auto& [key, c] : new_edges) edges.emplace_back(key.first, key.second, c);
    std::vector<std::tuple<int, int, int, double>> triples;
    triples.reserve(new_triples.size());
    for (const auto& [key, c] : new_triples)
        triples.emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);

    return {Instance(n - 1, std::move(edges), std::move(triples),
                     inst.offset() + inst.edge_cost(e)),
            std::move(vmap),
            {i, j}};
}

}  // namespace ccp
