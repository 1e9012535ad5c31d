#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "msep/graph.hpp"

namespace msep {

struct Interaction {
    NodeId u = 0;
    NodeId v = 0;
    double cost = 0.0;
};

// A multi-separator problem instance: graph, interactions F with costs,
// and per-node costs. Interactions may or may not coincide with edges.
// Immutable after construction; duplicates in F are rejected because F
// is a set of node pairs.
class MspInstance {
public:
    MspInstance() = default;
    MspInstance(Graph graph, std::vector<Interaction> interactions, std::vector<double> node_costs);

    const Graph& graph() const { return graph_; }
    const std::vector<Interaction>& interactions() const { return interactions_; }
    const std::vector<double>& node_costs() const { return node_costs_; }
    NodeId node_count() const { return graph_.node_count(); }
    std::int64_t interaction_count() const { return static_cast<std::int64_t>(interactions_.size()); }

    // indices of interactions incident to v
    std::span<const std::int32_t> interactions_at(NodeId v) const { return interaction_adj_[v]; }

    // true iff interaction f coincides with an edge of the graph
    bool interaction_is_edge(std::int32_t f) const { return interaction_on_edge_[f] != 0; }

private:
    Graph graph_;
    std::vector<Interaction> interactions_;
    std::vector<double> node_costs_;
    std::vector<std::vector<std::int32_t>> interaction_adj_;
    std::vector<char> interaction_on_edge_;
};

struct SolutionVector {
    std::vector<char> node_bits;
    std::vector<char> interaction_bits;

    bool operator==(const SolutionVector&) const = default;
};

enum class Tri : char { Zero = 0, One = 1, Star = 2 };

// Partial assignment of {0,1,*} labels to all of V and F.
struct PartialAssignment {
    std::vector<Tri> node_labels;
    std::vector<Tri> interaction_labels;

    static PartialAssignment all_star(const MspInstance& instance);
};

// Indices into instance.interactions() of the pairs separated by S,
// computed from a single components() pass.
std::vector<std::int32_t> separated_interactions(const MspInstance& instance, const Separator& s);

// Sum of separator node costs plus costs of separated interactions.
double objective(const MspInstance& instance, const Separator& s);

SolutionVector characteristic_vector(const MspInstance& instance, const Separator& s);

// Linear-time consistency decider for the case that every interaction is
// labeled 0 or *. Throws precondition_error if some interaction carries
// label 1.
bool consistency_zero_star(const MspInstance& instance, const PartialAssignment& x);

// Linear-time consistency decider for the case that every interaction in
// F \ E is labeled 1 or *. Throws precondition_error otherwise.
bool consistency_one_star(const MspInstance& instance, const PartialAssignment& x);

}  // namespace msep
