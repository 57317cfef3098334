#pragma once

#include <array>
#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccp/conditions.hpp"
#include "ccp/instance.hpp"

// Fixed-point driver. Per sub-instance: split into independent components,
// then joins (each certificate contracts the instance and restarts the
// scan), and only at the very end one simultaneous pass of cut conditions.
// Joins never follow cuts, so the union of all recorded certificates is
// satisfied by a common optimal labeling of the original instance.
namespace ccp {

enum class EdgeStatus : std::uint8_t { free_edge, fixed_0, fixed_1 };

struct EngineConfig {
    std::array<bool, kConditionCount> enabled;
    std::vector<ConditionKind> join_order;  // joins only, tried in this order
    double slack = 0;
    std::chrono::nanoseconds time_limit{0};  // 0 = unlimited
    // 1 = serial reference path; 0 = one thread per core; n = n threads.
    int threads = 0;

    EngineConfig();
    bool is_enabled(ConditionKind k) const { return enabled[static_cast<int>(k)]; }
    static std::vector<ConditionKind> default_join_order();
};

// One applied certificate, mapped back to original vertices at record time.
struct Event {
    ConditionKind kind{};
    std::vector<int> target;  // 2 vertices = edge, 3 = triple, more = joined set
    std::vector<std::vector<int>> witnesses;
    double margin = 0;
};

// "<condition> <target> <witness> <margin>"
std::string format_event(const Event& ev);

struct EngineStats {
    double fixed_edge_fraction = 0;
    // Counts triples carrying a product certificate or with all three edges
    // fixed; 1 when the instance has no triples.
    double fixed_triple_fraction = 0;
    std::chrono::nanoseconds runtime{0};
};

class PersistencyState {
  public:
    PersistencyState() = default;
    explicit PersistencyState(Instance original);

    const Instance& original() const { return original_; }
    EdgeStatus edge_status(int e) const { return edge_status_[e]; }
    bool triple_product0(int t) const { return triple_product0_[t]; }
    bool triple_product1(int t) const { return triple_product1_[t]; }
    const std::vector<Event>& events() const { return events_; }
    double accumulated_offset() const { return accumulated_offset_; }
    bool timed_out() const { return timed_out_; }
    // Group leader (smallest member) of the merged group containing v.
    int representative(int v) const { return representative_[v]; }
    // Independent sub-problem id of v, refined by every separation.
    int component(int v) const { return component_[v]; }

    // Remaining sub-instances after all reductions, with their original
    // vertices; their offsets sum to accumulated_offset().
    const std::vector<std::pair<Instance, std::vector<std::vector<int>>>>& leaves() const {
        return leaves_;
    }
    // Disjoint union of the leaves.
    Instance reduced_instance() const;

    bool fully_fixed() const;
    // Labeling with every fixed_1 edge at 1 and every other edge at 0;
    // meaningful when fully_fixed().
    EdgeLabeling implied_labeling() const;
    // Blocks of vertices merged through fixed_1 edges.
    Partition recovered_partition() const;

    EngineStats stats() const;
    void write_event_log(std::ostream& out) const;
    std::string event_log() const;

    // Exhaustive check that some global minimizer satisfies every recorded
    // fixation. Refuses instances larger than the bound.
    bool verify(int bound = 12) const;

  private:
    friend class Reducer;
    Instance original_;
    std::vector<EdgeStatus> edge_status_;
    std::vector<std::uint8_t> triple_product0_;
    std::vector<std::uint8_t> triple_product1_;
    std::vector<int> representative_;
    std::vector<int> component_;
    std::vector<Event> events_;
    std::vector<std::pair<Instance, std::vector<std::vector<int>>>> leaves_;
    double accumulated_offset_ = 0;
    bool timed_out_ = false;
    std::chrono::nanoseconds runtime_{0};
};

PersistencyState reduce(const Instance& inst, const EngineConfig& config = EngineConfig());

// One simultaneous pass of the cut conditions; certificates are indexed by
// edge/triple so any execution order merges deterministically. The _omp
// variant is the parallel kernel, the plain one the serial reference.
struct CutScanResult {
    std::vector<std::optional<Certificate>> edge_certs;
    std::vector<std::optional<Certificate>> triple_certs;
};

CutScanResult scan_cut_conditions(const Instance& inst, const ConditionContext& ctx,
                                  double slack, bool do_edges, bool do_triples);
CutScanResult scan_cut_conditions_omp(const Instance& inst, const ConditionContext& ctx,
                                      double slack, bool do_edges, bool do_triples,
                                      int threads);

}  // namespace ccp
