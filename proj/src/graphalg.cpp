#include "ccp/graphalg.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace ccp {

DisjointSets::DisjointSets(int n) : parent_(n), size_(n, 1), components_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
}

int DisjointSets::find(int v) {
    int root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
        int next = parent_[v];
        parent_[v] = root;
        v = next;
    }
    return root;
}

bool DisjointSets::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
}

int DisjointSets::size(int v) { return size_[find(v)]; }

std::vector<int> connected_components(int n, const std::vector<std::pair<int, int>>& edges) {
    DisjointSets ds(n);
    for (const auto& [u, v] : edges) ds.unite(u, v);
    std::vector<int> id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = ds.find(v);
        if (id[r] == -1) id[r] = next++;
        id[v] = id[r];
    }
    return id;
}

FlowNetwork::FlowNetwork(int node_count) : n_(node_count), out_(node_count) {
    if (node_count < 0) throw std::invalid_argument("node count must be nonnegative");
}

void FlowNetwork::add_arc(int from, int to, double capacity) {
    int n = node_count();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("arc endpoint out of range");
    if (capacity < 0) throw std::invalid_argument("arc capacity must be nonnegative");
    out_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity, capacity});
    out_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
}

FlowNetwork::MaxFlowResult FlowNetwork::max_flow_min_cut(int s, int t, double stop_above) {
    int n = node_count();
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw std::invalid_argument("source or sink out of range");
    if (s == t) throw std::invalid_argument("source equals sink");

    for (auto& a : arcs_) a.cap = a.cap0;

    std::vector<int> height(n, 0);
    std::vector<double> excess(n, 0);
    std::vector<std::size_t> cur(n, 0);
    std::vector<int> count(2 * n + 1, 0);
    std::deque<int> active;

    height[s] = n;
    count[0] = n - 1;
    count[n] = 1;

    auto push = [&](int arc_idx) {
        const int u = arcs_[arc_idx ^ 1].to;
        const int v = arcs_[arc_idx].to;
        double delta = std::min(excess[u], arcs_[arc_idx].cap);
        arcs_[arc_idx].cap -= delta;
        arcs_[arc_idx ^ 1].cap += delta;
        excess[u] -= delta;
        if (excess[v] == 0 && v != s && v != t && delta > 0) active.push_back(v);
        excess[v] += delta;
    };

    for (int ai : out_[s]) {
        if ((ai & 1) == 0 && arcs_[ai].cap > 0) {
            excess[s] += arcs_[ai].cap;
            push(ai);
        }
    }

    auto relabel = [&](int u) {
        int old = height[u];
        int h = 2 * n;
        for (int ai : out_[u])
            if (arcs_[ai].cap > 0) h = std::min(h, height[arcs_[ai].to] + 1);
        --count[old];
        height[u] = h;
        ++count[h];
        if (count[old] == 0 && old > 0 && old < n) {
            // Gap: heights strictly between old and n cannot reach t anymore.
            for (int v = 0; v < n; ++v) {
                if (v == s) continue;
                if (height[v] > old && height[v] < n) {
                    --count[height[v]];
                    height[v] = n + 1;
                    ++count[height[v]];
                }
            }
        }
        cur[u] = 0;
    };

    while (!active.empty()) {
        if (excess[t] > stop_above) {
            MaxFlowResult r;
            r.value = excess[t];
            return r;
        }
        int u = active.front();
        active.pop_front();
        if (u == s || u == t) continue;
        while (excess[u] > 0) {
            if (cur[u] == out_[u].size()) {
                relabel(u);
                if (excess[u] > 0) active.push_back(u);
                break;
            }
            int ai = out_[u][cur[u]];
            if (arcs_[ai].cap > 0 && height[u] == height[arcs_[ai].to] + 1)
                push(ai);
            else
                ++cur[u];
        }
    }

    MaxFlowResult r;
    r.value = excess[t];

    std::vector<char> vis(n, 0);
    std::deque<int> queue{s};
    vis[s] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int ai : out_[u]) {
            if (arcs_[ai].cap > 0 && !vis[arcs_[ai].to]) {
                vis[arcs_[ai].to] = 1;
                queue.push_back(arcs_[ai].to);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (vis[v]) r.source_side.push_back(v);
    return r;
}

FlowEquivalentTree flow_equivalent_tree(const WeightedGraph& g) {
    const int n = g.n;
    if (n < 1) throw std::invalid_argument("flow-equivalent tree needs at least one vertex");
    FlowNetwork net(n);
    for (const auto& [u, v, w] : g.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("invalid edge in weighted graph");
        if (w < 0) throw std::invalid_argument("edge weights must be nonnegative");
        if (w > 0) {
            net.add_arc(u, v, w);
            net.add_arc(v, u, w);
        }
    }

    FlowEquivalentTree tree;
    tree.parent.assign(n, 0);
    tree.parent_cut.assign(n, 0);
    tree.parent[0] = -1;
    std::vector<char> side(n, 0);
    for (int i = 1; i < n; ++i) {
        auto mf = net.max_flow_min_cut(i, tree.parent[i]);
        tree.parent_cut[i] = mf.value;
        std::fill(side.begin(), side.end(), 0);
        for (int v : mf.source_side) side[v] = 1;
        for (int j = i + 1; j < n; ++j)
            if (side[j] && tree.parent[j] == tree.parent[i]) tree.parent[j] = i;
    }
    return tree;
}

std::vector<double> pairwise_min_cuts(const FlowEquivalentTree& tree) {
    const int n = static_cast<int>(tree.parent.size());
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (int v = 1; v < n; ++v) {
        adj[v].emplace_back(tree.parent[v], tree.parent_cut[v]);
        adj[tree.parent[v]].emplace_back(v, tree.parent_cut[v]);
    }
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> stack;
    for (int u = 0; u < n; ++u) {
        double* row = m.data() + static_cast<std::size_t>(u) * n;
        std::fill(row, row + n, -1.0);  // -1 marks unvisited, cuts are >= 0
        stack.assign(1, u);
        row[u] = std::numeric_limits<double>::infinity();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [w, cut] : adj[v]) {
                if (row[w] >= 0) continue;
                row[w] = std::min(row[v], cut);
                stack.push_back(w);
            }
        }
        row[u] = 0;
    }
    return m;
}

GlobalMinCutResult global_min_cut(const WeightedGraph& g) {
    if (g.n < 2) throw std::invalid_argument("global min cut needs at least two vertices");

    {
        DisjointSets ds(g.n);
        for (const auto& [u, v, w] : g.edges) {
            if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
                throw std::invalid_argument("invalid edge in weighted graph");
            if (w < 0) throw std::invalid_argument("edge weights must be nonnegative");
            ds.unite(u, v);
        }
        if (ds.component_count() > 1) {
            GlobalMinCutResult r;
            int root = ds.find(0);
            for (int v = 0; v < g.n; ++v)
                if (ds.find(v) == root) r.side.push_back(v);
            return r;
        }
    }

    int n = g.n;
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0));
    for (const auto& [u, v, weight] : g.edges) {
        w[u][v] += weight;
        w[v][u] += weight;
    }

    std::vector<std::vector<int>> merged(n);
    for (int v = 0; v < n; ++v) merged[v] = {v};
    std::vector<char> alive(n, 1);

    GlobalMinCutResult best;
    best.value = std::numeric_limits<double>::infinity();

    for (int phase = 0; phase < n - 1; ++phase) {
        std::vector<char> in_a(n, 0);
        std::vector<double> key(n, 0);
        int start = -1;
        for (int v = 0; v < n && start < 0; ++v)
            if (alive[v]) start = v;
        in_a[start] = 1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && !in_a[v]) key[v] = w[start][v];

        int prev = start, last = start;
        int remaining = 0;
        for (int v = 0; v < n; ++v)
            if (alive[v]) ++remaining;

        for (int step = 1; step < remaining; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (!alive[v] || in_a[v]) continue;
                if (pick == -1 || key[v] > key[pick]) pick = v;
            }
            in_a[pick] = 1;
            prev = last;
            last = pick;
            for (int v = 0; v < n; ++v)
                if (alive[v] && !in_a[v]) key[v] += w[pick][v];
        }

        double cut_of_phase = key[last];
        if (cut_of_phase < best.value) {
            best.value = cut_of_phase;
            best.side = merged[last];
        }

        // merge last into prev
        alive[last] = 0;
        merged[prev].insert(merged[prev].end(), merged[last].begin(), merged[last].end());
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || v == prev) continue;
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
    }

    std::sort(best.side.begin(), best.side.end());
    return best;
}

}  // namespace ccp
