#include "ccp/instance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "ccp/graphalg.hpp"

namespace ccp {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string triple_str(int u, int v, int w) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
}

std::uint64_t pair_key(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Instance::Instance(int vertex_count,
                   std::vector<std::tuple<int, int, double>> edges,
                   std::vector<std::tuple<int, int, int, double>> triples,
                   double offset)
    : n_(vertex_count), offset_(offset) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be nonnegative");

    auto check_vertex = [&](int v) {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    };

    for (auto& [u, v, c] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("edge " + pair_str(u, v) + " has identical endpoints");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        auto& [u, v, c] = edges[i];
        if (std::get<0>(edges[i - 1]) == u && std::get<1>(edges[i - 1]) == v)
            throw std::invalid_argument("duplicate edge " + pair_str(u, v));
    }

    edges_.reserve(edges.size());
    edge_cost_.reserve(edges.size());
    std::unordered_map<std::uint64_t, int> edge_index;
    edge_index.reserve(edges.size() * 2);
    adj_.assign(n_, {});
    for (auto& [u, v, c] : edges) {
        int e = static_cast<int>(edges_.size());
        edges_.push_back({u, v});
        edge_cost_.push_back(c);
        edge_index.emplace(pair_key(u, v), e);
        adj_[u].emplace_back(v, e);
        adj_[v].emplace_back(u, e);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());

    for (auto& [u, v, w, c] : triples) {
        check_vertex(u);
        check_vertex(v);
        check_vertex(w);
        std::array<int, 3> s{u, v, w};
        std::sort(s.begin(), s.end());
        if (s[0] == s[1] || s[1] == s[2])
            throw std::invalid_argument("triple " + triple_str(u, v, w) +
                                        " has repeated vertices");
        u = s[0];
        v = s[1];
        w = s[2];
    }
    std::sort(triples.begin(), triples.end());
    for (std::size_t i = 1; i < triples.size(); ++i) {
        if (std::get<0>(triples[i - 1]) == std::get<0>(triples[i]) &&
            std::get<1>(triples[i - 1]) == std::get<1>(triples[i]) &&
            std::get<2>(triples[i - 1]) == std::get<2>(triples[i]))
            throw std::invalid_argument("duplicate triple " +
                                        triple_str(std::get<0>(triples[i]),
                                                   std::get<1>(triples[i]),
                                                   std::get<2>(triples[i])));
    }

    triples_.reserve(triples.size());
    triple_cost_.reserve(triples.size());
    triple_edges_.reserve(triples.size());
    edge_triples_.assign(edges_.size(), {});
    for (auto& [u, v, w, c] : triples) {
        std::array<int, 3> te;
        std::array<std::pair<int, int>, 3> sides{{{u, v}, {u, w}, {v, w}}};
        for (int s = 0; s < 3; ++s) {
            auto it = edge_index.find(pair_key(sides[s].first, sides[s].second));
            if (it == edge_index.end())
                throw std::invalid_argument("triple " + triple_str(u, v, w) +
                                            " is not a 3-clique: missing edge " +
                                            pair_str(sides[s].first, sides[s].second));
            te[s] = it->second;
        }
        int t = static_cast<int>(triples_.size());
        triples_.push_back({u, v, w});
        triple_cost_.push_back(c);
        triple_edges_.push_back(te);
        for (int e : te) edge_triples_[e].push_back(t);
    }
}

std::optional<int> Instance::find_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    if (u > v) std::swap(u, v);
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, 0));
    if (it != a.end() && it->first == v) return it->second;
    return std::nullopt;
}

std::optional<int> Instance::find_triple(int u, int v, int w) const {
    std::array<int, 3> s{u, v, w};
    std::sort(s.begin(), s.end());
    Triple key{s[0], s[1], s[2]};
    auto it = std::lower_bound(triples_.begin(), triples_.end(), key,
                               [](const Triple& a, const Triple& b) {
                                   return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
                               });
    if (it != triples_.end() && *it == key)
        return static_cast<int>(it - triples_.begin());
    return std::nullopt;
}

bool Instance::is_feasible(const EdgeLabeling& x) const {
    if (static_cast<int>(x.size()) != edge_count())
        throw std::invalid_argument("labeling size does not match edge count");
    DisjointSets ds(n_);
    for (int e = 0; e < edge_count(); ++e)
        if (x[e]) ds.unite(edges_[e].u, edges_[e].v);
    for (int e = 0; e < edge_count(); ++e)
        if (!x[e] && ds.find(edges_[e].u) == ds.find(edges_[e].v)) return false;
    return true;
}

double Instance::objective(const EdgeLabeling& x) const {
    if (!is_feasible(x))
        throw std::invalid_argument("objective is defined on feasible labelings only");
    return objective_unchecked(x);
}

double Instance::objective_unchecked(const EdgeLabeling& x) const {
    double r = offset_;
    for (int e = 0; e < edge_count(); ++e)
        if (x[e]) r += edge_cost_[e];
    for (int t = 0; t < triple_count(); ++t) {
        const auto& te = triple_edges_[t];
        if (x[te[0]] && x[te[1]] && x[te[2]]) r += triple_cost_[t];
    }
    return r;
}

bool Instance::has_integral_costs() const {
    auto integral = [](double c) { return std::rint(c) == c; };
    if (!integral(offset_)) return false;
    for (double c : edge_cost_)
        if (!integral(c)) return false;
    for (double c : triple_cost_)
        if (!integral(c)) return false;
    return true;
}

std::vector<int> Instance::boundary_edges(std::span<const int> U) const {
    std::vector<char> in(n_, 0);
    for (int v : U) {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    std::vector<int> r;
    for (int e = 0; e < edge_count(); ++e)
        if (in[edges_[e].u] != in[edges_[e].v]) r.push_back(e);
    return r;
}

std::vector<int> Instance::boundary_edges(std::span<const int> U,
                                          std::span<const int> Uprime) const {
    std::vector<char> side(n_, 0);
    for (int v : U) {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        side[v] = 1;
    }
    for (int v : Uprime) {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        if (side[v] == 1)
            throw std::invalid_argument("boundary sets overlap at vertex " + std::to_string(v));
        side[v] = 2;
    }
    std::vector<int> r;
    for (int e = 0; e < edge_count(); ++e) {
        int a = side[edges_[e].u], b = side[edges_[e].v];
        if ((a == 1 && b == 2) || (a == 2 && b == 1)) r.push_back(e);
    }
    return r;
}

std::vector<int> Instance::triples_cut_by(std::span<const int> edge_indices) const {
    std::vector<char> mark(edge_count(), 0);
    for (int e : edge_indices) {
        if (e < 0 || e >= edge_count())
            throw std::invalid_argument("edge index " + std::to_string(e) + " out of range");
        mark[e] = 1;
    }
    std::vector<int> r;
    for (int t = 0; t < triple_count(); ++t) {
        const auto& te = triple_edges_[t];
        if (mark[te[0]] || mark[te[1]] || mark[te[2]]) r.push_back(t);
    }
    return r;
}

EdgeLabeling labeling_from_partition(const Instance& inst, const Partition& partition) {
    std::vector<int> block(inst.vertex_count(), -1);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        for (int v : partition[b]) {
            if (v < 0 || v >= inst.vertex_count())
                throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
            if (block[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in more than one block");
            block[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < inst.vertex_count(); ++v)
        if (block[v] == -1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " not covered");

    DisjointSets ds(inst.vertex_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
        const Edge& ed = inst.edge(e);
        if (block[ed.u] == block[ed.v]) ds.unite(ed.u, ed.v);
    }
    for (const auto& blk : partition) {
        for (int v : blk)
            if (ds.find(v) != ds.find(blk[0]))
                throw std::invalid_argument("block containing vertex " + std::to_string(blk[0]) +
                                            " is not connected");
    }

    EdgeLabeling x(inst.edge_count(), 0);
    for (int e = 0; e < inst.edge_count(); ++e)
        x[e] = block[inst.edge(e).u] == block[inst.edge(e).v];
    return x;
}

Partition partition_from_labeling(const Instance& inst, const EdgeLabeling& x) {
    if (!inst.is_feasible(x))
        throw std::invalid_argument("labeling is not feasible");
    DisjointSets ds(inst.vertex_count());
    for (int e = 0; e < inst.edge_count(); ++e)
        if (x[e]) ds.unite(inst.edge(e).u, inst.edge(e).v);
    std::vector<std::vector<int>> by_root(inst.vertex_count());
    for (int v = 0; v < inst.vertex_count(); ++v) by_root[ds.find(v)].push_back(v);
    Partition p;
    for (auto& blk : by_root)
        if (!blk.empty()) p.push_back(std::move(blk));
    return p;
}

double MulticutInstance::objective(const std::vector<std::uint8_t>& z,
                                   const std::vector<std::uint8_t>& y) const {
    if (z.size() != edge_costs.size() || y.size() != triple_costs.size())
        throw std::invalid_argument("labeling size does not match");
    double r = offset;
    for (std::size_t e = 0; e < z.size(); ++e)
        if (z[e]) r += -edge_costs[e];
    for (std::size_t t = 0; t < y.size(); ++t)
        if (y[t]) r += -triple_costs[t];
    return r;
}

MulticutInstance to_cubic_multicut(const Instance& inst) {
    MulticutInstance mc;
    mc.vertex_count = inst.vertex_count();
    mc.offset = inst.offset();
    double total = 2 * inst.offset();
    mc.edges.reserve(inst.edge_count());
    mc.edge_costs.reserve(inst.edge_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
        mc.edges.push_back(inst.edge(e));
        mc.edge_costs.push_back(-inst.edge_cost(e));
        total += inst.edge_cost(e);
    }
    mc.triples.reserve(inst.triple_count());
    mc.triple_costs.reserve(inst.triple_count());
    for (int t = 0; t < inst.triple_count(); ++t) {
        mc.triples.push_back(inst.triple(t));
        mc.triple_costs.push_back(-inst.triple_cost(t));
        total += inst.triple_cost(t);
    }
    mc.constant = total;
    return mc;
}

}  // namespace ccp
