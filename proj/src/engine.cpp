#include "ccp/engine.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccp/instance_io.hpp"
#include "ccp/maps.hpp"
#include "ccp/oracle.hpp"

namespace ccp {

EngineConfig::EngineConfig() : join_order(default_join_order()) { enabled.fill(true); }

std::vector<ConditionKind> EngineConfig::default_join_order() {
    return {ConditionKind::subset_join,           ConditionKind::edge_join,
            ConditionKind::triangle_edge_join,    ConditionKind::edge_subgraph_join,
            ConditionKind::triplet_subgraph_join, ConditionKind::triplet_join};
}

namespace {

void append_set(std::string& out, const std::vector<int>& s) {
    out += '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    out += '}';
}

bool is_join(ConditionKind k) {
    switch (k) {
        case ConditionKind::subset_join:
        case ConditionKind::edge_join:
        case ConditionKind::triangle_edge_join:
        case ConditionKind::edge_subgraph_join:
        case ConditionKind::triplet_subgraph_join:
        case ConditionKind::triplet_join:
            return true;
        default:
            return false;
    }
}

}  // namespace

std::string format_event(const Event& ev) {
    std::string out{condition_name(ev.kind)};
    out += ' ';
    if (ev.target.empty()) {
        out += '-';
    } else if (ev.kind == ConditionKind::subset_join) {
        append_set(out, ev.target);
    } else {
        for (std::size_t i = 0; i < ev.target.size(); ++i) {
            if (i) out += '-';
            out += std::to_string(ev.target[i]);
        }
    }
    out += ' ';
    if (ev.witnesses.empty()) {
        out += '-';
    } else {
        for (std::size_t i = 0; i < ev.witnesses.size(); ++i) {
            if (i) out += '|';
            append_set(out, ev.witnesses[i]);
        }
    }
    out += ' ';
    out += format_number(ev.margin);
    return out;
}

PersistencyState::PersistencyState(Instance original)
    : original_(std::move(original)),
      edge_status_(original_.edge_count(), EdgeStatus::free_edge),
      triple_product0_(original_.triple_count(), 0),
      triple_product1_(original_.triple_count(), 0),
      representative_(original_.vertex_count()),
      component_(original_.vertex_count(), 0) {
    for (int v = 0; v < original_.vertex_count(); ++v) representative_[v] = v;
}

Instance PersistencyState::reduced_instance() const {
    int base = 0;
    std::vector<std::tuple<int, int, double>> edges;
    std::vector<std::tuple<int, int, int, double>> triples;
    double off = 0;
    for (const auto& [leaf, groups] : leaves_) {
        for (int e = 0; e < leaf.edge_count(); ++e)
            edges.emplace_back(leaf.edge(e).u + base, leaf.edge(e).v + base, leaf.edge_cost(e));
        for (int t = 0; t < leaf.triple_count(); ++t)
            triples.emplace_back(leaf.triple(t).u + base, leaf.triple(t).v + base,
                                 leaf.triple(t).w + base, leaf.triple_cost(t));
        off += leaf.offset();
        base += leaf.vertex_count();
    }
    return Instance(base, std::move(edges), std::move(triples), off);
}

bool PersistencyState::fully_fixed() const {
    return std::all_of(edge_status_.begin(), edge_status_.end(),
                       [](EdgeStatus s) { return s != EdgeStatus::free_edge; });
}

EdgeLabeling PersistencyState::implied_labeling() const {
    EdgeLabeling x(edge_status_.size(), 0);
    for (std::size_t e = 0; e < edge_status_.size(); ++e)
        if (edge_status_[e] == EdgeStatus::fixed_1) x[e] = 1;
    return x;
}

Partition PersistencyState::recovered_partition() const {
    const int n = original_.vertex_count();
    std::vector<std::vector<int>> members(n);
    for (int v = 0; v < n; ++v) members[representative_[v]].push_back(v);
    Partition blocks;
    for (int v = 0; v < n; ++v)
        if (!members[v].empty()) blocks.push_back(std::move(members[v]));
    return blocks;
}

EngineStats PersistencyState::stats() const {
    EngineStats s;
    s.runtime = runtime_;
    const int ne = original_.edge_count();
    const int nt = original_.triple_count();
    int fe = 0;
    for (EdgeStatus st : edge_status_)
        if (st != EdgeStatus::free_edge) ++fe;
    s.fixed_edge_fraction = ne == 0 ? 1.0 : static_cast<double>(fe) / ne;
    int ft = 0;
    for (int t = 0; t < nt; ++t) {
        if (triple_product0_[t] || triple_product1_[t]) {
            ++ft;
            continue;
        }
        const auto& te = original_.triple_edges(t);
        if (edge_status_[te[0]] != EdgeStatus::free_edge &&
            edge_status_[te[1]] != EdgeStatus::free_edge &&
            edge_status_[te[2]] != EdgeStatus::free_edge)
            ++ft;
    }
    s.fixed_triple_fraction = nt == 0 ? 1.0 : static_cast<double>(ft) / nt;
    return s;
}

void PersistencyState::write_event_log(std::ostream& out) const {
    for (const Event& ev : events_) out << format_event(ev) << '\n';
}

std::string PersistencyState::event_log() const {
    std::ostringstream out;
    write_event_log(out);
    return out.str();
}

bool PersistencyState::verify(int bound) const {
    Fixations f;
    for (std::size_t e = 0; e < edge_status_.size(); ++e) {
        if (edge_status_[e] == EdgeStatus::free_edge) continue;
        f.edge_values.emplace_back(static_cast<int>(e),
                                   edge_status_[e] == EdgeStatus::fixed_1 ? 1 : 0);
    }
    for (std::size_t t = 0; t < triple_product0_.size(); ++t) {
        if (triple_product0_[t]) f.triples_product0.push_back(static_cast<int>(t));
        if (triple_product1_[t]) f.triples_product1.push_back(static_cast<int>(t));
    }
    return verify_persistency(original_, f, bound);
}

class Reducer {
  public:
    Reducer(const Instance& inst, const EngineConfig& cfg) : cfg_(cfg), state_(inst) {
        if (cfg_.time_limit.count() > 0)
            deadline_ = std::chrono::steady_clock::now() + cfg_.time_limit;
    }

    PersistencyState run() {
        const auto t0 = std::chrono::steady_clock::now();
        WorkItem root;
        root.inst = state_.original_;
        root.orig_of.resize(root.inst.vertex_count());
        for (int v = 0; v < root.inst.vertex_count(); ++v) root.orig_of[v] = {v};
        queue_.push_back(std::move(root));
        while (!queue_.empty()) {
            WorkItem item = std::move(queue_.front());
            queue_.pop_front();
            process(std::move(item));
        }
        finalize();
        state_.runtime_ = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - t0);
        return std::move(state_);
    }

  private:
    struct WorkItem {
        Instance inst;
        std::vector<std::vector<int>> orig_of;  // sorted original vertices per working vertex
    };

    bool out_of_time() {
        if (!deadline_) return false;
        if (!state_.timed_out_ && std::chrono::steady_clock::now() > *deadline_)
            state_.timed_out_ = true;
        return state_.timed_out_;
    }

    void process(WorkItem item) {
        for (;;) {
            if (out_of_time()) break;
            if (item.inst.vertex_count() <= 1) break;
            if (cfg_.is_enabled(ConditionKind::separation)) {
                auto sep = check_subset_separation(item.inst);
                if (sep.groups.size() > 1) {
                    split(std::move(item), sep);
                    return;
                }
            }
            if (!try_joins(item)) break;
        }
        cut_phase(item);
        retire(std::move(item));
    }

    void split(WorkItem item, const SeparationResult& sep) {
        Event ev;
        ev.kind = ConditionKind::separation;
        for (const auto& g : sep.groups) ev.witnesses.push_back(orig_union(item, g));
        state_.events_.push_back(std::move(ev));

        for (int e : sep.cut_edges) {
            const Edge& ed = item.inst.edge(e);
            fix_orig_edges_between(item.orig_of[ed.u], item.orig_of[ed.v], EdgeStatus::fixed_0);
        }

        const Instance& g0 = item.inst;
        std::vector<int> group_of(g0.vertex_count(), -1);
        std::vector<int> local(g0.vertex_count(), -1);
        for (std::size_t gi = 0; gi < sep.groups.size(); ++gi)
            for (std::size_t i = 0; i < sep.groups[gi].size(); ++i) {
                group_of[sep.groups[gi][i]] = static_cast<int>(gi);
                local[sep.groups[gi][i]] = static_cast<int>(i);
            }

        std::vector<std::vector<std::tuple<int, int, double>>> edges(sep.groups.size());
        std::vector<std::vector<std::tuple<int, int, int, double>>> triples(sep.groups.size());
        for (int e = 0; e < g0.edge_count(); ++e) {
            const Edge& ed = g0.edge(e);
            if (group_of[ed.u] == group_of[ed.v])
                edges[group_of[ed.u]].emplace_back(local[ed.u], local[ed.v], g0.edge_cost(e));
        }
        for (int t = 0; t < g0.triple_count(); ++t) {
            const Triple& tr = g0.triple(t);
            if (group_of[tr.u] == group_of[tr.v] && group_of[tr.u] == group_of[tr.w])
                triples[group_of[tr.u]].emplace_back(local[tr.u], local[tr.v], local[tr.w],
                                                     g0.triple_cost(t));
        }

        // The parent's offset rides on the first part.
        for (std::size_t gi = 0; gi < sep.groups.size(); ++gi) {
            WorkItem child;
            child.inst = Instance(static_cast<int>(sep.groups[gi].size()), std::move(edges[gi]),
                                  std::move(triples[gi]), gi == 0 ? g0.offset() : 0.0);
            child.orig_of.resize(sep.groups[gi].size());
            for (std::size_t i = 0; i < sep.groups[gi].size(); ++i)
                child.orig_of[i] = std::move(item.orig_of[sep.groups[gi][i]]);
            queue_.push_back(std::move(child));
        }
    }

    bool try_joins(WorkItem& item) {
        ConditionContext ctx(item.inst);
        for (ConditionKind k : cfg_.join_order) {
            if (!cfg_.is_enabled(k)) continue;
            if (out_of_time()) return false;
            switch (k) {
                case ConditionKind::subset_join:
                    if (auto c = find_subset_join(item.inst, cfg_.slack)) {
                        apply_subset_join(item, *c);
                        return true;
                    }
                    break;
                case ConditionKind::edge_join:
                    for (int e = 0; e < item.inst.edge_count(); ++e)
                        if (auto c = check_edge_join(item.inst, ctx, e, cfg_.slack)) {
                            apply_edge_fix(item, *c);
                            return true;
                        }
                    break;
                case ConditionKind::triangle_edge_join:
                    for (int t = 0; t < item.inst.triple_count(); ++t)
                        if (auto c = check_triangle_edge_join(item.inst, ctx, t, cfg_.slack)) {
                            apply_edge_fix(item, *c);
                            return true;
                        }
                    break;
                case ConditionKind::edge_subgraph_join:
                    for (int e = 0; e < item.inst.edge_count(); ++e)
                        if (auto c = check_edge_subgraph_join(item.inst, e, cfg_.slack)) {
                            apply_edge_fix(item, *c);
                            return true;
                        }
                    break;
                case ConditionKind::triplet_subgraph_join:
                    for (int t = 0; t < item.inst.triple_count(); ++t)
                        if (auto c = check_triplet_subgraph_join(item.inst, t, cfg_.slack)) {
                            apply_edge_fix(item, *c);
                            return true;
                        }
                    break;
                case ConditionKind::triplet_join:
                    for (int t = 0; t < item.inst.triple_count(); ++t)
                        if (auto c = check_triplet_join(item.inst, ctx, t, cfg_.slack)) {
                            apply_triplet_join(item, *c);
                            return true;
                        }
                    break;
                default:
                    throw std::invalid_argument("join order contains a non-join condition");
            }
        }
        return false;
    }

    void apply_edge_fix(WorkItem& item, const Certificate& cert) {
        const Edge& ed = item.inst.edge(cert.edge);
        Event ev;
        ev.kind = cert.kind;
        ev.target = {item.orig_of[ed.u][0], item.orig_of[ed.v][0]};
        add_witnesses(ev, item, cert);
        ev.margin = cert.margin;
        state_.events_.push_back(std::move(ev));
        contract_working_edge(item, cert.edge);
    }

    void apply_subset_join(WorkItem& item, const Certificate& cert) {
        Event ev;
        ev.kind = ConditionKind::subset_join;
        ev.target = orig_union(item, cert.witness);
        ev.margin = cert.margin;
        state_.events_.push_back(std::move(ev));

        // Spanning tree of the joined set, contracted in BFS discovery order
        // from the smallest member; ids are tracked across contractions.
        const int n = item.inst.vertex_count();
        std::vector<char> in(n, 0);
        for (int v : cert.witness) in[v] = 1;
        std::vector<char> seen(n, 0);
        std::vector<std::pair<int, int>> tree;
        std::deque<int> bfs{cert.witness.front()};
        seen[cert.witness.front()] = 1;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            for (const auto& [p, e] : item.inst.neighbors(u)) {
                if (!in[p] || seen[p]) continue;
                seen[p] = 1;
                tree.emplace_back(u, p);
                bfs.push_back(p);
            }
        }
        if (tree.size() + 1 != cert.witness.size())
            throw std::logic_error("joined set is not connected");

        std::vector<int> cur(n);
        for (int v = 0; v < n; ++v) cur[v] = v;
        for (auto [u, p] : tree) {
            int a = cur[u], b = cur[p];
            if (a > b) std::swap(a, b);
            auto e = item.inst.find_edge(a, b);
            if (!e) throw std::logic_error("joined set lost an internal edge");
            contract_working_edge(item, *e);
            for (int v = 0; v < n; ++v) {
                int c = cur[v];
                cur[v] = c < b ? c : (c == b ? a : c - 1);
            }
        }
    }

    void apply_triplet_join(WorkItem& item, const Certificate& cert) {
        const Triple tr = item.inst.triple(cert.triple);
        Event ev;
        ev.kind = ConditionKind::triplet_join;
        ev.target = {item.orig_of[tr.u][0], item.orig_of[tr.v][0], item.orig_of[tr.w][0]};
        add_witnesses(ev, item, cert);
        ev.margin = cert.margin;
        state_.events_.push_back(std::move(ev));

        mark_orig_triples(item, tr, EventProduct::one);

        const auto& te = item.inst.triple_edges(cert.triple);
        contract_working_edge(item, te[0]);  // uv; u < v so u keeps its id
        const int w2 = tr.w - 1;             // u < v < w, so w slides down by one
        auto e2 = item.inst.find_edge(tr.u, w2);
        if (!e2) throw std::logic_error("joined triple lost its third edge");
        contract_working_edge(item, *e2);
    }

    void cut_phase(WorkItem& item) {
        const bool do_edges = cfg_.is_enabled(ConditionKind::edge_cut);
        const bool do_triples = cfg_.is_enabled(ConditionKind::triplet_cut);
        if ((!do_edges && !do_triples) || item.inst.edge_count() == 0) return;
        if (out_of_time()) return;

        ConditionContext ctx(item.inst);
        CutScanResult res =
            cfg_.threads == 1
                ? scan_cut_conditions(item.inst, ctx, cfg_.slack, do_edges, do_triples)
                : scan_cut_conditions_omp(item.inst, ctx, cfg_.slack, do_edges, do_triples,
                                          cfg_.threads);

        for (std::size_t e = 0; e < res.edge_certs.size(); ++e) {
            if (!res.edge_certs[e]) continue;
            const Certificate& c = *res.edge_certs[e];
            const Edge& ed = item.inst.edge(static_cast<int>(e));
            Event ev;
            ev.kind = c.kind;
            ev.target = {item.orig_of[ed.u][0], item.orig_of[ed.v][0]};
            add_witnesses(ev, item, c);
            ev.margin = c.margin;
            state_.events_.push_back(std::move(ev));
            fix_orig_edges_between(item.orig_of[ed.u], item.orig_of[ed.v], EdgeStatus::fixed_0);
        }
        for (std::size_t t = 0; t < res.triple_certs.size(); ++t) {
            if (!res.triple_certs[t]) continue;
            const Certificate& c = *res.triple_certs[t];
            const Triple& tr = item.inst.triple(static_cast<int>(t));
            Event ev;
            ev.kind = c.kind;
            ev.target = {item.orig_of[tr.u][0], item.orig_of[tr.v][0], item.orig_of[tr.w][0]};
            add_witnesses(ev, item, c);
            ev.margin = c.margin;
            state_.events_.push_back(std::move(ev));
            mark_orig_triples(item, tr, EventProduct::zero);
        }
    }

    void retire(WorkItem item) {
        state_.accumulated_offset_ += item.inst.offset();
        state_.leaves_.emplace_back(std::move(item.inst), std::move(item.orig_of));
    }

    void finalize() {
        int comp = 0;
        for (const auto& [leaf, groups] : state_.leaves_) {
            for (const auto& g : groups)
                for (int v : g) {
                    state_.representative_[v] = g.front();
                    state_.component_[v] = comp;
                }
            ++comp;
        }
    }

    std::vector<int> orig_union(const WorkItem& item, const std::vector<int>& verts) const {
        std::vector<int> out;
        for (int v : verts)
            out.insert(out.end(), item.orig_of[v].begin(), item.orig_of[v].end());
        std::sort(out.begin(), out.end());
        return out;
    }

    void add_witnesses(Event& ev, const WorkItem& item, const Certificate& cert) const {
        if (!cert.witness.empty()) ev.witnesses.push_back(orig_union(item, cert.witness));
        if (!cert.witness2.empty()) ev.witnesses.push_back(orig_union(item, cert.witness2));
    }

    void set_edge_status(int e, EdgeStatus s) {
        EdgeStatus& cur = state_.edge_status_[e];
        if (cur == s) return;
        if (cur != EdgeStatus::free_edge) throw std::logic_error("contradictory edge fixation");
        cur = s;
    }

    void fix_orig_edges_between(const std::vector<int>& a, const std::vector<int>& b,
                                EdgeStatus s) {
        for (int p : a)
            for (int q : b)
                if (auto e = state_.original_.find_edge(p, q)) set_edge_status(*e, s);
    }

    enum class EventProduct { zero, one };

    void mark_orig_triples(const WorkItem& item, const Triple& tr, EventProduct value) {
        auto& flags = value == EventProduct::one ? state_.triple_product1_
                                                 : state_.triple_product0_;
        const auto& other = value == EventProduct::one ? state_.triple_product0_
                                                       : state_.triple_product1_;
        for (int a : item.orig_of[tr.u])
            for (int b : item.orig_of[tr.v])
                for (int c : item.orig_of[tr.w])
                    if (auto t = state_.original_.find_triple(a, b, c)) {
                        if (other[*t])
                            throw std::logic_error("contradictory triple certificate");
                        flags[*t] = 1;
                    }
    }

    void contract_working_edge(WorkItem& item, int e) {
        const Edge ed = item.inst.edge(e);
        fix_orig_edges_between(item.orig_of[ed.u], item.orig_of[ed.v], EdgeStatus::fixed_1);
        ContractionResult res = contract_edge(item.inst, e);
        std::vector<std::vector<int>> merged(item.orig_of.size() - 1);
        for (std::size_t v = 0; v < item.orig_of.size(); ++v) {
            auto& dst = merged[res.vertex_map[v]];
            if (dst.empty()) {
                dst = std::move(item.orig_of[v]);
            } else {
                const auto mid = dst.size();
                dst.insert(dst.end(), item.orig_of[v].begin(), item.orig_of[v].end());
                std::inplace_merge(dst.begin(), dst.begin() + mid, dst.end());
            }
        }
        item.inst = std::move(res.reduced);
        item.orig_of = std::move(merged);
    }

    const EngineConfig& cfg_;
    PersistencyState state_;
    std::deque<WorkItem> queue_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

PersistencyState reduce(const Instance& inst, const EngineConfig& config) {
    for (ConditionKind k : config.join_order)
        if (!is_join(k)) throw std::invalid_argument("join order contains a non-join condition");
    Reducer r(inst, config);
    return r.run();
}

CutScanResult scan_cut_conditions(const Instance& inst, const ConditionContext& ctx,
                                  double slack, bool do_edges, bool do_triples) {
    CutScanResult r;
    if (do_edges) {
        r.edge_certs.resize(inst.edge_count());
        for (int e = 0; e < inst.edge_count(); ++e)
            r.edge_certs[e] = check_edge_cut(inst, ctx, e, slack);
    }
    if (do_triples) {
        r.triple_certs.resize(inst.triple_count());
        for (int t = 0; t < inst.triple_count(); ++t)
            r.triple_certs[t] = check_triplet_cut(inst, ctx, t, slack);
    }
    return r;
}

CutScanResult scan_cut_conditions_omp(const Instance& inst, const ConditionContext& ctx,
                                      double slack, bool do_edges, bool do_triples,
                                      int threads) {
#ifndef _OPENMP
    (void)threads;
    return scan_cut_conditions(inst, ctx, slack, do_edges, do_triples);
#else
    CutScanResult r;
    if (threads <= 0) threads = omp_get_max_threads();
    const int ne = do_edges ? inst.edge_count() : 0;
    const int nt = do_triples ? inst.triple_count() : 0;
    if (do_edges) r.edge_certs.resize(inst.edge_count());
    if (do_triples) r.triple_certs.resize(inst.triple_count());
#pragma omp parallel num_threads(threads)
    {
#pragma omp for schedule(dynamic, 8) nowait
        for (int e = 0; e < ne; ++e) r.edge_certs[e] = check_edge_cut(inst, ctx, e, slack);
#pragma omp for schedule(dynamic, 8)
        for (int t = 0; t < nt; ++t) r.triple_certs[t] = check_triplet_cut(inst, ctx, t, slack);
    }
    return r;
#endif
}

}  // namespace ccp
