#include "ccp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ccp/graphalg.hpp"

namespace ccp {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t x = seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64_at(seed, stream));
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
    double u = uniform01(rng);
    const double v = uniform01(rng);
    if (u <= 0) u = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

namespace {

constexpr std::uint64_t kTopologyStream = 0;
constexpr std::uint64_t kCostStream = 1;

// All 3-cliques of the graph, ascending; adjacency lists must be sorted.
std::vector<std::array<int, 3>> all_triangles(int n, const std::vector<std::vector<int>>& adj,
                                              const std::vector<Edge>& edges) {
    std::vector<std::array<int, 3>> out;
    for (const Edge& e : edges) {
        const auto& a = adj[e.u];
        const auto& b = adj[e.v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) {
                ++i;
            } else if (a[i] > b[j]) {
                ++j;
            } else {
                if (a[i] > e.v) out.push_back({e.u, e.v, a[i]});
                ++i;
                ++j;
            }
        }
    }
    std::sort(out.begin(), out.end());
    (void)n;
    return out;
}

}  // namespace

GeneratedPartition gen_partition(const PartitionConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be positive");
    if (cfg.edge_probability < 0 || cfg.edge_probability > 1)
        throw std::invalid_argument("edge probability must lie in [0,1]");
    if (cfg.alpha < 0 || cfg.alpha > 1) throw std::invalid_argument("alpha must lie in [0,1]");
    if (cfg.beta < 0 || cfg.beta > 1) throw std::invalid_argument("beta must lie in [0,1]");

    const int n = 8 * cfg.n;
    const std::array<int, 4> sizes{cfg.n, 2 * cfg.n, 2 * cfg.n, 3 * cfg.n};
    std::vector<int> block_of(n);
    Partition planted;
    int next = 0;
    for (int b = 0; b < 4; ++b) {
        std::vector<int> block(sizes[b]);
        for (int i = 0; i < sizes[b]; ++i) {
            block[i] = next;
            block_of[next++] = b;
        }
        planted.push_back(std::move(block));
    }

    auto topo = seeded_engine(cfg.seed, kTopologyStream);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(topo) < cfg.edge_probability) edges.push_back({u, v});

    // Connect each block: scan its pairs in ascending order and add any
    // pair whose endpoints the block-internal edges do not yet connect.
    {
        DisjointSets ds(n);
        for (const Edge& e : edges)
            if (block_of[e.u] == block_of[e.v]) ds.unite(e.u, e.v);
        for (const auto& block : planted)
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = i + 1; j < block.size(); ++j)
                    if (ds.unite(block[i], block[j])) edges.push_back({block[i], block[j]});
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    const auto triangles = all_triangles(n, adj, edges);

    const double sigma = 0.1 + cfg.alpha * 0.3;
    const double mean_in = -1 + cfg.alpha;
    const double mean_out = 1 - cfg.alpha;
    auto cost = seeded_engine(cfg.seed, kCostStream);

    std::vector<std::tuple<int, int, double>> edge_costs;
    edge_costs.reserve(edges.size());
    for (const Edge& e : edges) {
        const double mean = block_of[e.u] == block_of[e.v] ? mean_in : mean_out;
        edge_costs.emplace_back(e.u, e.v,
                                (1 - cfg.beta) * (mean + sigma * standard_normal(cost)));
    }
    std::vector<std::tuple<int, int, int, double>> triple_costs;
    triple_costs.reserve(triangles.size());
    for (const auto& t : triangles) {
        const bool inside =
            block_of[t[0]] == block_of[t[1]] && block_of[t[0]] == block_of[t[2]];
        const double mean = inside ? mean_in : mean_out;
        triple_costs.emplace_back(t[0], t[1], t[2],
                                  cfg.beta * (mean + sigma * standard_normal(cost)));
    }

    return {Instance(n, std::move(edge_costs), std::move(triple_costs)), std::move(planted)};
}

std::array<std::array<double, 2>, 9> geometric_triangle_corners() {
    // Three unit-side equilateral triangles (circumradius 1/sqrt(3)) at
    // well-separated centers with distinct orientations.
    constexpr std::array<std::array<double, 2>, 3> centers{{{0, 0}, {2.5, 0}, {1.25, 2.2}}};
    constexpr std::array<double, 3> orientation{0, 0.7, 1.4};
    const double r = 1.0 / std::sqrt(3.0);
    std::array<std::array<double, 2>, 9> corners{};
    for (int t = 0; t < 3; ++t)
        for (int j = 0; j < 3; ++j) {
            const double phi = orientation[t] + j * 2.0 * std::numbers::pi / 3.0;
            corners[3 * t + j] = {centers[t][0] + r * std::cos(phi),
                                  centers[t][1] + r * std::sin(phi)};
        }
    return corners;
}

double triple_cost_geometric(const std::array<double, 2>& p, const std::array<double, 2>& q,
                             const std::array<double, 2>& r, double sigma) {
    if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
    auto dist = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
        return std::hypot(a[0] - b[0], a[1] - b[1]);
    };
    const double dpq = dist(p, q), dpr = dist(p, r), dqr = dist(q, r);
    const double dmax = std::max({dpq, dpr, dqr});
    const double dmin = std::min({dpq, dpr, dqr});
    if (dmax <= 4 * sigma) return -1 + dmax / (4 * sigma);
    if (dmin <= 4 * sigma) return 0;

    auto angle = [](const std::array<double, 2>& at, const std::array<double, 2>& b,
                    const std::array<double, 2>& c) {
        const double ux = b[0] - at[0], uy = b[1] - at[1];
        const double vx = c[0] - at[0], vy = c[1] - at[1];
        const double d = std::hypot(ux, uy) * std::hypot(vx, vy);
        return std::acos(std::clamp((ux * vx + uy * vy) / d, -1.0, 1.0));
    };
    const double third = std::numbers::pi / 3.0;
    const double d = std::abs(angle(p, q, r) - third) + std::abs(angle(q, p, r) - third) +
                     std::abs(angle(r, p, q) - third);
    if (d <= std::numbers::pi / 6.0) return -1 + 6.0 * d / std::numbers::pi;
    return (6.0 / 7.0) * (d - std::numbers::pi / 6.0) / std::numbers::pi;
}

GeneratedGeometric gen_geometric(const GeometricConfig& cfg) {
    if (cfg.points_per_vertex < 1)
        throw std::invalid_argument("points per vertex must be positive");
    if (cfg.sigma <= 0) throw std::invalid_argument("sigma must be positive");

    const auto corners = geometric_triangle_corners();
    const int m = cfg.points_per_vertex;
    const int n = 9 * m;
    auto topo = seeded_engine(cfg.seed, kTopologyStream);

    std::vector<std::array<double, 2>> pts(n);
    std::vector<int> triangle_of(n);
    for (int c = 0; c < 9; ++c)
        for (int i = 0; i < m; ++i) {
            const int v = c * m + i;
            pts[v] = {corners[c][0] + cfg.sigma * standard_normal(topo),
                      corners[c][1] + cfg.sigma * standard_normal(topo)};
            triangle_of[v] = c / 3;
        }

    std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
    auto dist = [&](int a, int b) {
        return std::hypot(pts[a][0] - pts[b][0], pts[a][1] - pts[b][1]);
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (triangle_of[u] == triangle_of[v]) has[u][v] = 1;

    if (cfg.neighbor_count < 0 || cfg.neighbor_count >= n - 1) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) has[u][v] = 1;
    } else if (cfg.neighbor_count > 0) {
        const int k = cfg.neighbor_count;
        std::vector<std::pair<double, int>> by_dist(n - 1);
        for (int p = 0; p < n; ++p) {
            int idx = 0;
            for (int q = 0; q < n; ++q)
                if (q != p) by_dist[idx++] = {dist(p, q), q};
            std::sort(by_dist.begin(), by_dist.end());
            for (int i = 0; i < k; ++i) {
                const int q = by_dist[i].second;  // nearest
                has[std::min(p, q)][std::max(p, q)] = 1;
            }
            for (int i = 0; i < k; ++i) {
                const int q = by_dist[n - 2 - i].second;  // farthest
                has[std::min(p, q)][std::max(p, q)] = 1;
            }
        }
    }

    std::vector<std::tuple<int, int, double>> edges;
    std::vector<std::vector<int>> adj(n);
    std::vector<Edge> edge_list;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has[u][v]) {
                edges.emplace_back(u, v, 0.0);
                edge_list.push_back({u, v});
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
    const auto triangles = all_triangles(n, adj, edge_list);

    std::vector<std::tuple<int, int, int, double>> triples;
    triples.reserve(triangles.size());
    for (const auto& t : triangles)
        triples.emplace_back(t[0], t[1], t[2],
                             triple_cost_geometric(pts[t[0]], pts[t[1]], pts[t[2]], cfg.sigma));

    return {Instance(n, std::move(edges), std::move(triples)), std::move(pts)};
}

}  // namespace ccp
