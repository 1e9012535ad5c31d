#pragma once

#include <cstdint>
#include <vector>

#include "msep/instance.hpp"

namespace msep {

// Lifted multicut instance: base graph G with edge costs, plus lifted
// node pairs (non-edges) with costs.
class LmpInstance {
public:
    LmpInstance() = default;
    LmpInstance(Graph graph, std::vector<double> edge_costs, std::vector<Interaction> lifted);

    const Graph& graph() const { return graph_; }
    const std::vector<double>& edge_costs() const { return edge_costs_; }  // aligned with graph().edges()
    const std::vector<Interaction>& lifted() const { return lifted_; }

private:
    Graph graph_;
    std::vector<double> edge_costs_;
    std::vector<Interaction> lifted_;
};

struct MspOptimum {
    Separator separator;
    double value = 0.0;
};

struct QuboTerm {
    int i = 0;  // 0-based, i <= j
    int j = 0;
    double q = 0.0;
};

struct QuboOptimum {
    double value = 0.0;
    std::vector<char> assignment;
};

// Exhaustive reference solvers. Size guards are hard errors; these are
// test oracles, never used on the production path.

// All 2^|V| subsets; ties broken by lexicographically smallest member
// list. Guard: |V| <= 20.
MspOptimum brute_force_msp(const MspInstance& instance);

// All partitions of V (restricted growth strings), filtered to those
// whose blocks induce connected subgraphs; returns the minimal cut cost.
// Guard: |V| <= 10.
double brute_force_lmp(const LmpInstance& instance);

// True iff some separator extends the fixed labels of x. Guard: |V| <= 15.
bool brute_force_consistency(const MspInstance& instance, const PartialAssignment& x);

// Maximizes sum q_ij x_i x_j over x in {0,1}^n; ties broken by the
// lexicographically smallest assignment vector (x_0,...,x_{n-1}).
// Guard: n <= 20.
QuboOptimum brute_force_qubo(const std::vector<QuboTerm>& terms, int n);

// Evaluates the lifted multicut cost of the partition given by per-node
// block labels, without feasibility filtering. Exposed for reduction
// round-trip checks.
double lmp_partition_cost(const LmpInstance& instance, const std::vector<NodeId>& block);

double qubo_value(const std::vector<QuboTerm>& terms, const std::vector<char>& assignment);

}  // namespace msep
