#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msep/instance.hpp"
#include "msep/oracle.hpp"

namespace msep {

// Each reduction relates optimal values by
//   source_value = value_sign * (target_value - value_offset)
// and carries enough layout information to map solutions back.

struct MspToLmpResult {
    LmpInstance target;
    double value_offset = 0.0;
    double value_sign = 1.0;
    NodeId source_nodes = 0;  // target node v < n is the original v, n+v its copy,
                              // 2n+e the node of source edge e (graph().edges() order)

    NodeId copy_of(NodeId v) const { return source_nodes + v; }
    NodeId edge_node(std::int64_t e) const {
        return 2 * source_nodes + static_cast<NodeId>(e);
    }
    // the lifted multicut corresponding to a source separator, as per-node
    // block labels of the target graph
    std::vector<NodeId> multicut_blocks(const MspInstance& source, const Separator& s) const;
};

MspToLmpResult msp_to_lmp(const MspInstance& instance);

struct LmpToMspResult {
    MspInstance target;
    double value_offset = 0.0;
    double value_sign = 1.0;
    NodeId source_nodes = 0;  // target node v < n is the original v, n+e the node of edge e

    NodeId edge_node(std::int64_t e) const { return source_nodes + static_cast<NodeId>(e); }
    // separator representing a lifted multicut given by source block labels
    Separator separator_of(const LmpInstance& source, const std::vector<NodeId>& blocks) const;
};

LmpToMspResult lmp_to_msp(const LmpInstance& instance);

struct QuboToMspResult {
    MspInstance target;
    double value_offset = 0.0;  // sum of all coefficients
    double value_sign = -1.0;

    // x -> 1 - x
    std::vector<char> assignment_of(const Separator& s) const;
    Separator separator_of(const std::vector<char>& assignment) const;
};

QuboToMspResult qubo_to_msp(const std::vector<QuboTerm>& terms, int n);

struct SteinerToMspResult {
    MspInstance target;
    double value_offset = 0.0;  // -W
    double value_sign = 1.0;

    // Steiner node set T = V \ S
    std::vector<NodeId> tree_of(const Separator& s) const;
};

// Node-weighted Steiner tree over (graph, terminals, weights >= 0): the
// value identity requires at least two terminals; with a single terminal
// the construction degenerates (F is empty and nothing ties the terminal
// to the non-separator side).
SteinerToMspResult steiner_to_msp(const Graph& graph, const std::vector<NodeId>& terminals,
                                  const std::vector<double>& node_weights);

struct MtvsToMspResult {
    MspInstance target;
    double value_offset = 0.0;  // -|F| (W+1)
    double value_sign = 1.0;
};

// Multi-terminal vertex separator: terminals pairwise non-adjacent,
// weights >= 0.
MtvsToMspResult mtvs_to_msp(const Graph& graph, const std::vector<NodeId>& terminals,
                            const std::vector<double>& node_weights);

// 3-literal clause: DIMACS-style literals, +-(variable+1), never 0.
using Clause3 = std::array<int, 3>;

struct Sat3Gadget {
    MspInstance instance;
    PartialAssignment assignment;
    NodeId source = 0;  // node s
    NodeId sink = 0;    // node t
    // literal node of occurrence j of clause i: 2 + 3i + j with s=0, t=1
    NodeId literal_node(int clause, int position) const { return 2 + 3 * clause + position; }
};

// Consistency gadget: the partial assignment is consistent iff the
// formula is satisfiable. The (s,t) interaction is pinned to 0, every
// pair of contradictory literal occurrences to 1.
Sat3Gadget sat3_to_consistency(const std::vector<Clause3>& formula);

}  // namespace msep
