#include "ccp/conditions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "ccp/graphalg.hpp"
#include "ccp/reductions.hpp"

namespace ccp {

namespace {

constexpr std::array<std::string_view, kConditionCount> kNames{
    "separation",         "edge_cut",           "triplet_cut",
    "subset_join",        "edge_join",          "triangle_edge_join",
    "edge_subgraph_join", "triplet_subgraph_join", "triplet_join",
};

// Largest vertex count for which the quadratic pairwise cut tables are
// precomputed.
constexpr int kPairwiseTableCap = 1024;

// Safety margin when rejecting via a pairwise table entry: entries near the
// decision boundary fall through to the exact computation, so float noise
// between the two evaluation orders can never flip an accept.
constexpr double kTableGuard = 1e-9;

std::vector<double> pairwise_table(const Instance& inst, const std::vector<double>& folded) {
    WeightedGraph g;
    g.n = inst.vertex_count();
    for (int e = 0; e < inst.edge_count(); ++e)
        if (folded[e] > 0) g.edges.emplace_back(inst.edge(e).u, inst.edge(e).v, folded[e]);
    return pairwise_min_cuts(flow_equivalent_tree(g));
}

// Sum of negative costs of the distinct triples containing at least one of
// the given edges.
double negative_triple_mass(const Instance& inst, std::vector<int> triple_ids) {
    std::sort(triple_ids.begin(), triple_ids.end());
    triple_ids.erase(std::unique(triple_ids.begin(), triple_ids.end()), triple_ids.end());
    double sum = 0;
    for (int t : triple_ids) sum += std::min(inst.triple_cost(t), 0.0);
    return sum;
}

// Negative boundary mass of the vertex set {verts...}: sum of negative costs
// over boundary edges plus over distinct triples containing a boundary edge.
double negative_boundary_mass(const Instance& inst, std::span<const int> verts) {
    std::vector<char> in(inst.vertex_count(), 0);
    for (int v : verts) in[v] = 1;
    double sum = 0;
    std::vector<int> tri;
    for (int v : verts) {
        for (const auto& [p, e] : inst.neighbors(v)) {
            if (in[p]) continue;
            sum += std::min(inst.edge_cost(e), 0.0);
            for (int t : inst.triples_of_edge(e)) tri.push_back(t);
        }
    }
    return sum + negative_triple_mass(inst, std::move(tri));
}

}  // namespace

std::string_view condition_name(ConditionKind kind) {
    return kNames[static_cast<int>(kind)];
}

std::optional<ConditionKind> condition_from_name(std::string_view name) {
    for (int i = 0; i < kConditionCount; ++i)
        if (kNames[i] == name) return static_cast<ConditionKind>(i);
    return std::nullopt;
}

ConditionContext::ConditionContext(const Instance& inst) {
    std::vector<double> eneg(inst.edge_count()), eabs(inst.edge_count());
    std::vector<double> tneg(inst.triple_count()), tabs(inst.triple_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
        eneg[e] = neg(inst.edge_cost(e));
        eabs[e] = std::abs(inst.edge_cost(e));
        total_pos_edges += pos(inst.edge_cost(e));
    }
    for (int t = 0; t < inst.triple_count(); ++t) {
        tneg[t] = neg(inst.triple_cost(t));
        tabs[t] = std::abs(inst.triple_cost(t));
        total_pos_triples += pos(inst.triple_cost(t));
    }
    folded_neg = fold_triples_into_edges(inst, eneg, tneg);
    folded_abs = fold_triples_into_edges(inst, eabs, tabs);
    if (inst.vertex_count() >= 2 && inst.vertex_count() <= kPairwiseTableCap) {
        pairwise_neg = pairwise_table(inst, folded_neg);
        pairwise_abs = pairwise_table(inst, folded_abs);
        pairwise_n = inst.vertex_count();
    }
}

SeparationResult check_subset_separation(const Instance& inst) {
    DisjointSets ds(inst.vertex_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
        bool keep = inst.edge_cost(e) < 0;
        if (!keep)
            for (int t : inst.triples_of_edge(e))
                if (inst.triple_cost(t) < 0) {
                    keep = true;
                    break;
                }
        if (keep) ds.unite(inst.edge(e).u, inst.edge(e).v);
    }

    SeparationResult r;
    std::vector<int> group_of(inst.vertex_count(), -1);
    for (int v = 0; v < inst.vertex_count(); ++v) {
        int root = ds.find(v);
        if (group_of[root] == -1) {
            group_of[root] = static_cast<int>(r.groups.size());
            r.groups.emplace_back();
        }
        group_of[v] = group_of[root];
        r.groups[group_of[v]].push_back(v);
    }
    for (int e = 0; e < inst.edge_count(); ++e)
        if (group_of[inst.edge(e).u] != group_of[inst.edge(e).v]) r.cut_edges.push_back(e);
    return r;
}

std::optional<Certificate> check_edge_cut(const Instance& inst, const ConditionContext& ctx,
                                          int e, double slack) {
    double lhs = pos(inst.edge_cost(e));
    if (lhs <= 0) return std::nullopt;
    if (ctx.neg_cut_between(inst.edge(e).u, inst.edge(e).v) - kTableGuard > lhs - slack)
        return std::nullopt;
    std::array<int, 1> forbidden{inst.edge(e).v};
    auto cut =
        min_constrained_cut_folded(inst, ctx.folded_neg, inst.edge(e).u, forbidden, lhs - slack);
    double margin = lhs - cut.value;
    if (margin < slack) return std::nullopt;
    Certificate c;
    c.kind = ConditionKind::edge_cut;
    c.edge = e;
    c.witness = std::move(cut.source_set);
    c.margin = margin;
    return c;
}

std::optional<Certificate> check_triplet_cut(const Instance& inst, const ConditionContext& ctx,
                                             int t, double slack) {
    const Triple& tr = inst.triple(t);
    const auto& te = inst.triple_edges(t);  // uv, uw, vw
    // apex, its two incident triangle edges, the two opposite vertices
    const std::array<std::tuple<int, int, int, int, int>, 3> cases{{
        {tr.u, te[0], te[1], tr.v, tr.w},
        {tr.v, te[0], te[2], tr.u, tr.w},
        {tr.w, te[1], te[2], tr.u, tr.v},
    }};
    for (const auto& [apex, e1, e2, b1, b2] : cases) {
        double lhs = pos(inst.triple_cost(t)) + pos(inst.edge_cost(e1)) + pos(inst.edge_cost(e2));
        if (lhs <= 0) continue;
        double lb = std::max(ctx.neg_cut_between(apex, b1), ctx.neg_cut_between(apex, b2));
        if (lb - kTableGuard > lhs - slack) continue;
        std::array<int, 2> forbidden{b1, b2};
        auto cut = min_constrained_cut_folded(inst, ctx.folded_neg, apex, forbidden, lhs - slack);
        double margin = lhs - cut.value;
        if (margin < slack) continue;
        Certificate c;
        c.kind = ConditionKind::triplet_cut;
        c.triple = t;
        c.witness = std::move(cut.source_set);
        c.margin = margin;
        return c;
    }
    return std::nullopt;
}

std::optional<Certificate> check_edge_join(const Instance& inst, const ConditionContext& ctx,
                                           int e, double slack) {
    double lhs = 2 * neg(inst.edge_cost(e));
    for (int t : inst.triples_of_edge(e)) lhs += neg(inst.triple_cost(t));
    if (lhs <= 0) return std::nullopt;
    if (ctx.abs_cut_between(inst.edge(e).u, inst.edge(e).v) - kTableGuard > lhs - slack)
        return std::nullopt;
    std::array<int, 1> forbidden{inst.edge(e).v};
    auto cut =
        min_constrained_cut_folded(inst, ctx.folded_abs, inst.edge(e).u, forbidden, lhs - slack);
    double margin = lhs - cut.value;
    if (margin < slack) return std::nullopt;
    Certificate c;
    c.kind = ConditionKind::edge_join;
    c.edge = e;
    c.witness = std::move(cut.source_set);
    c.margin = margin;
    return c;
}

std::optional<Certificate> check_triplet_join(const Instance& inst, const ConditionContext& ctx,
                                              int t, double slack) {
    const Triple& tr = inst.triple(t);
    const auto& te = inst.triple_edges(t);
    const double cuv = inst.edge_cost(te[0]);
    const double cuw = inst.edge_cost(te[1]);
    const double cvw = inst.edge_cost(te[2]);
    // Best objective the triangle itself can reach without joining all
    // three vertices: nothing joined, or exactly one pair joined.
    const double best_rest = std::min({0.0, cuv, cuw, cvw});
    const double common = best_rest - ctx.total_pos_edges - ctx.total_pos_triples;

    const std::array<std::tuple<int, int, int, int, int>, 3> cases{{
        {tr.u, te[0], te[1], tr.v, tr.w},
        {tr.v, te[0], te[2], tr.u, tr.w},
        {tr.w, te[1], te[2], tr.u, tr.v},
    }};
    for (const auto& [apex, e1, e2, b1, b2] : cases) {
        int opposite = te[0] ^ te[1] ^ te[2] ^ e1 ^ e2;
        double lhs = 2 * neg(inst.triple_cost(t)) + 2 * neg(inst.edge_cost(e1)) +
                     2 * neg(inst.edge_cost(e2)) + neg(inst.edge_cost(opposite)) + common;
        if (lhs <= 0) continue;
        double lb = std::max(ctx.neg_cut_between(apex, b1), ctx.neg_cut_between(apex, b2));
        if (lb - kTableGuard > lhs - slack) continue;
        std::array<int, 2> forbidden{b1, b2};
        auto cut = min_constrained_cut_folded(inst, ctx.folded_neg, apex, forbidden, lhs - slack);
        double margin = lhs - cut.value;
        if (margin < slack) continue;
        Certificate c;
        c.kind = ConditionKind::triplet_join;
        c.triple = t;
        c.witness = std::move(cut.source_set);
        c.margin = margin;
        return c;
    }
    return std::nullopt;
}

std::optional<Certificate> check_triangle_edge_join(const Instance& inst,
                                                    const ConditionContext& ctx, int t,
                                                    double slack) {
    const Triple& tr = inst.triple(t);  // i < j < k, certifies x_ik = 1
    const auto& te = inst.triple_edges(t);
    const int i = tr.u, j = tr.v, k = tr.w;
    const double ct = inst.triple_cost(t);
    const double cij = inst.edge_cost(te[0]);
    const double cik = inst.edge_cost(te[1]);
    const double cjk = inst.edge_cost(te[2]);

    // Local inequality: the whole triangle plus the negative mass on its
    // boundary, excluding triples through the triangle's own edges.
    double rhs3 = 0;
    const std::array<int, 3> ijk{i, j, k};
    auto inside = [&](int v) { return v == i || v == j || v == k; };
    for (int a : ijk) {
        for (const auto& [p, e] : inst.neighbors(a)) {
            if (inside(p)) continue;
            rhs3 -= neg(inst.edge_cost(e));
            for (int t2 : inst.triples_of_edge(e)) {
                const Triple& q = inst.triple(t2);
                int r = q.u ^ q.v ^ q.w ^ a ^ p;
                if (!inside(r) && p < r) rhs3 -= neg(inst.triple_cost(t2));
            }
        }
    }
    double margin3 = rhs3 - (ct + cij + cik + cjk);
    if (margin3 < slack) return std::nullopt;

    std::vector<int> tri1 = inst.triples_of_edge(te[0]);
    tri1.insert(tri1.end(), inst.triples_of_edge(te[1]).begin(),
                inst.triples_of_edge(te[1]).end());
    double lhs1 =
        neg(ct) + 2 * neg(cij) + 2 * neg(cik) - negative_triple_mass(inst, std::move(tri1));
    if (lhs1 <= 0) return std::nullopt;
    if (std::max(ctx.abs_cut_between(i, j), ctx.abs_cut_between(i, k)) - kTableGuard >
        lhs1 - slack)
        return std::nullopt;
    std::array<int, 2> forb1{j, k};
    auto cut1 = min_constrained_cut_folded(inst, ctx.folded_abs, i, forb1, lhs1 - slack);
    double margin1 = lhs1 - cut1.value;
    if (margin1 < slack) return std::nullopt;

    std::vector<int> tri2 = inst.triples_of_edge(te[2]);
    tri2.insert(tri2.end(), inst.triples_of_edge(te[1]).begin(),
                inst.triples_of_edge(te[1]).end());
    double lhs2 =
        neg(ct) + 2 * neg(cjk) + 2 * neg(cik) - negative_triple_mass(inst, std::move(tri2));
    if (lhs2 <= 0) return std::nullopt;
    if (std::max(ctx.abs_cut_between(k, i), ctx.abs_cut_between(k, j)) - kTableGuard >
        lhs2 - slack)
        return std::nullopt;
    std::array<int, 2> forb2{i, j};
    auto cut2 = min_constrained_cut_folded(inst, ctx.folded_abs, k, forb2, lhs2 - slack);
    double margin2 = lhs2 - cut2.value;
    if (margin2 < slack) return std::nullopt;

    Certificate c;
    c.kind = ConditionKind::triangle_edge_join;
    c.edge = te[1];
    c.triple = t;
    c.witness = std::move(cut1.source_set);
    c.witness2 = std::move(cut2.source_set);
    c.margin = std::min({margin1, margin2, margin3});
    return c;
}

std::optional<Certificate> check_edge_subgraph_join(const Instance& inst, int e, double slack) {
    const Edge& ed = inst.edge(e);
    std::array<int, 2> pair{ed.u, ed.v};
    double rhs = negative_boundary_mass(inst, pair);
    double margin = rhs - inst.edge_cost(e);
    if (margin < slack) return std::nullopt;
    Certificate c;
    c.kind = ConditionKind::edge_subgraph_join;
    c.edge = e;
    c.witness = {ed.u, ed.v};
    c.margin = margin;
    return c;
}

std::optional<Certificate> check_triplet_subgraph_join(const Instance& inst, int t,
                                                       double slack) {
    const Triple& tr = inst.triple(t);
    const auto& te = inst.triple_edges(t);
    const double ct = inst.triple_cost(t);
    const double cij = inst.edge_cost(te[0]);
    const double cik = inst.edge_cost(te[1]);
    const double cjk = inst.edge_cost(te[2]);

    double margin = std::min({-(cij + cik), -(cij + cjk), -(cik + cjk), -(cij + cik + cjk),
                              -(cij + cik + cjk + 0.5 * ct)});
    if (margin >= slack) {
        std::array<int, 3> ijk{tr.u, tr.v, tr.w};
        double b = negative_boundary_mass(inst, ijk);
        margin = std::min({margin, b - (cij + cik + ct), b - (cjk + cik + ct)});
    }
    if (margin < slack) return std::nullopt;
    Certificate c;
    c.kind = ConditionKind::triplet_subgraph_join;
    c.edge = te[1];
    c.triple = t;
    c.witness = {tr.u, tr.v, tr.w};
    c.margin = margin;
    return c;
}

std::optional<Certificate> find_subset_join(const Instance& inst, double slack) {
    const int n = inst.vertex_count();
    std::set<std::vector<int>> tried;

    for (int seed = 0; seed < inst.edge_count(); ++seed) {
        if (inst.edge_cost(seed) > 0) continue;

        std::vector<char> in(n, 0);
        std::vector<int> members{inst.edge(seed).u, inst.edge(seed).v};
        in[members[0]] = in[members[1]] = 1;

        // A vertex may enter if it touches the set and keeps every internal
        // pair and triple cost nonpositive.
        auto admissible = [&](int x) {
            bool adjacent = false;
            for (const auto& [p, e] : inst.neighbors(x)) {
                if (!in[p]) continue;
                adjacent = true;
                if (inst.edge_cost(e) > 0) return false;
                for (int t2 : inst.triples_of_edge(e)) {
                    const Triple& q = inst.triple(t2);
                    int r = q.u ^ q.v ^ q.w ^ x ^ p;
                    if (in[r] && inst.triple_cost(t2) > 0) return false;
                }
            }
            return adjacent;
        };

        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 0; x < n; ++x) {
                if (in[x]) continue;
                if (admissible(x)) {
                    in[x] = 1;
                    members.push_back(x);
                    grew = true;
                }
            }
        }
        std::sort(members.begin(), members.end());
        if (!tried.insert(members).second) continue;

        // Folded internal weights; nonnegative because internal costs are.
        std::vector<int> local(n, -1);
        for (std::size_t a = 0; a < members.size(); ++a) local[members[a]] = static_cast<int>(a);
        WeightedGraph g;
        g.n = static_cast<int>(members.size());
        for (int v : members) {
            for (const auto& [p, e] : inst.neighbors(v)) {
                if (v >= p || !in[p]) continue;
                double w = inst.edge_cost(e);
                for (int t2 : inst.triples_of_edge(e)) {
                    const Triple& q = inst.triple(t2);
                    int r = q.u ^ q.v ^ q.w ^ v ^ p;
                    if (in[r]) w += 0.5 * inst.triple_cost(t2);
                }
                g.edges.emplace_back(local[v], local[p], -w);
            }
        }
        double mincut = global_min_cut(g).value;

        double boundary = negative_boundary_mass(inst, members);
        double margin = mincut + boundary;  // boundary <= 0
        if (margin < slack) continue;

        Certificate c;
        c.kind = ConditionKind::subset_join;
        c.witness = members;
        c.margin = margin;
        return c;
    }
    return std::nullopt;
}

}  // namespace ccp
