#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "msep/instance.hpp"

namespace msep {

// Lazy-deletion min-priority queue over nodes. Entries carry a version
// number; stale entries (version below the node's latest) are skipped on
// pop. Ties break toward the lowest node id.
class VersionedQueue {
public:
    explicit VersionedQueue(std::size_t node_count) : latest_(node_count, 0) {}

    void push(NodeId node, double priority) {
        heap_.emplace(priority, node, ++latest_[node]);
    }

    // pops the freshest minimum; false when no fresh entry remains
    bool pop(NodeId& node, double& priority) {
        while (!heap_.empty()) {
            const auto [p, v, version] = heap_.top();
            heap_.pop();
            if (version != latest_[v]) continue;
            node = v;
            priority = p;
            return true;
        }
        return false;
    }

    void invalidate(NodeId node) { ++latest_[node]; }

private:
    using Entry = std::tuple<double, NodeId, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
    std::vector<std::uint32_t> latest_;
};

struct LocalSearchResult {
    Separator separator;
    double initial_objective = 0.0;
    double final_objective = 0.0;
    std::vector<double> trace;  // objective at start plus after every committed move
    std::vector<NodeId> committed;  // nodes moved, in order
    std::int64_t moves = 0;
    // moves popped but rejected after recomputation (GSG only)
    std::int64_t rejected_moves = 0;
    // false when GSG ran on an instance with a repulsive non-edge
    // interaction, where a committed move need not be the best one
    bool greedy_exactness_guaranteed = true;
};

struct GssOptions {
    std::optional<Separator> initial;    // default: all of V
    bool stop_on_zero_potential = false; // prose variant: stop at p >= 0 instead of p > 0
    bool audit_state = false;            // re-derive the objective from scratch after each move
};

struct GsgOptions {
    bool stop_on_zero_potential = false;
    bool audit_state = false;
    // called whenever a popped node's potential is recomputed exactly
    std::function<void(NodeId node, double cached, double exact)> on_recompute;
};

// Greedy separator shrinking: start from S = V (or the given separator),
// repeatedly remove the node of most negative potential, contracting the
// freed node with adjacent non-separator components and merging parallel
// interactions.
LocalSearchResult gss(const MspInstance& instance, const GssOptions& options = {});

// Greedy separator growing: start from S = empty, repeatedly insert the
// node of most negative potential. Cached potentials ignore cut-node
// effects until a node is popped, at which point its potential is
// recomputed exactly and the node is requeued if it is no longer minimal.
LocalSearchResult gsg(const MspInstance& instance, const GsgOptions& options = {});

// Objective change caused by inserting v into S (v not in S).
double insertion_delta(const MspInstance& instance, const Separator& s, NodeId v);

// Signed objective change of toggling v: insertion delta if v is outside
// S, negated removal gain if inside.
double greedy_potential(const MspInstance& instance, const Separator& s, NodeId v);

}  // namespace msep
