#include "msep/instance.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "msep/errors.hpp"

namespace msep {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

}  // namespace

MspInstance::MspInstance(Graph graph, std::vector<Interaction> interactions,
                         std::vector<double> node_costs)
    : graph_(std::move(graph)),
      interactions_(std::move(interactions)),
      node_costs_(std::move(node_costs)) {
    const NodeId n = graph_.node_count();
    if (static_cast<NodeId>(node_costs_.size()) != n)
        throw precondition_error("instance: node cost vector size mismatch");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(interactions_.size() * 2);
    interaction_adj_.resize(n);
    interaction_on_edge_.resize(interactions_.size());
    for (std::size_t i = 0; i < interactions_.size(); ++i) {
        auto& f = interactions_[i];
        if (f.u == f.v) throw precondition_error("instance: interaction with equal endpoints");
        if (f.u < 0 || f.v < 0 || f.u >= n || f.v >= n)
            throw precondition_error("instance: interaction endpoint out of range");
        if (f.u > f.v) std::swap(f.u, f.v);
        if (!seen.insert(pair_key(f.u, f.v)).second)
            throw precondition_error("instance: duplicate interaction {" + std::to_string(f.u) +
                                     "," + std::to_string(f.v) + "}");
        interaction_adj_[f.u].push_back(static_cast<std::int32_t>(i));
        interaction_adj_[f.v].push_back(static_cast<std::int32_t>(i));
        interaction_on_edge_[i] = graph_.has_edge(f.u, f.v) ? 1 : 0;
    }
}

PartialAssignment PartialAssignment::all_star(const MspInstance& instance) {
    PartialAssignment x;
    x.node_labels.assign(instance.node_count(), Tri::Star);
    x.interaction_labels.assign(instance.interactions().size(), Tri::Star);
    return x;
}

std::vector<std::int32_t> separated_interactions(const MspInstance& instance, const Separator& s) {
    const auto label = components(instance.graph(), s);
    std::vector<std::int32_t> out;
    const auto& fs = instance.interactions();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& f = fs[i];
        if (s.contains(f.u) || s.contains(f.v) || label[f.u] != label[f.v])
            out.push_back(static_cast<std::int32_t>(i));
    }
    return out;
}

double objective(const MspInstance& instance, const Separator& s) {
    double total = 0.0;
    for (NodeId v = 0; v < instance.node_count(); ++v)
        if (s.contains(v)) total += instance.node_costs()[v];
    const auto label = components(instance.graph(), s);
    for (const auto& f : instance.interactions())
        if (s.contains(f.u) || s.contains(f.v) || label[f.u] != label[f.v]) total += f.cost;
    return total;
}

SolutionVector characteristic_vector(const MspInstance& instance, const Separator& s) {
    SolutionVector x;
    x.node_bits.assign(s.mask().begin(), s.mask().end());
    x.interaction_bits.assign(instance.interactions().size(), 0);
    for (std::int32_t i : separated_interactions(instance, s)) x.interaction_bits[i] = 1;
    return x;
}

bool consistency_zero_star(const MspInstance& instance, const PartialAssignment& x) {
    const auto& fs = instance.interactions();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (x.interaction_labels[i] == Tri::One)
            throw precondition_error("consistency_zero_star: interaction labeled 1");

    // S = nodes labeled 1; x is consistent iff no 0-labeled interaction is
    // separated by S.
    std::vector<char> removed(instance.node_count(), 0);
    for (NodeId v = 0; v < instance.node_count(); ++v)
        if (x.node_labels[v] == Tri::One) removed[v] = 1;
    const auto label = components(instance.graph(), removed);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (x.interaction_labels[i] != Tri::Zero) continue;
        const auto& f = fs[i];
        if (removed[f.u] || removed[f.v] || label[f.u] != label[f.v]) return false;
    }
    return true;
}

bool consistency_one_star(const MspInstance& instance, const PartialAssignment& x) {
    const auto& fs = instance.interactions();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!instance.interaction_is_edge(static_cast<std::int32_t>(i)) &&
            x.interaction_labels[i] == Tri::Zero)
            throw precondition_error("consistency_one_star: non-edge interaction labeled 0");

    const NodeId n = instance.node_count();
    // A 0-labeled edge-interaction forces both endpoints out of the
    // separator; a 1-labeled endpoint is an immediate contradiction.
    std::vector<char> forced_out(n, 0);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (x.interaction_labels[i] != Tri::Zero) continue;
        const auto& f = fs[i];
        if (x.node_labels[f.u] == Tri::One || x.node_labels[f.v] == Tri::One) return false;
        forced_out[f.u] = 1;
        forced_out[f.v] = 1;
    }

    // Maximal candidate separator: nodes labeled 1 or * except the forced
    // ones. 1-labeled interactions must be separated by it.
    std::vector<char> sep(n, 0);
    for (NodeId v = 0; v < n; ++v)
        sep[v] = (x.node_labels[v] != Tri::Zero && !forced_out[v]) ? 1 : 0;
    const auto label = components(instance.graph(), sep);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (x.interaction_labels[i] != Tri::One) continue;
        const auto& f = fs[i];
        const bool separated = sep[f.u] || sep[f.v] || label[f.u] != label[f.v];
        if (!separated) return false;
    }
    return true;
}

}  // namespace msep
