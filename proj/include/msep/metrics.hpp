#pragma once

#include <cstdint>
#include <vector>

#include "msep/graph.hpp"

namespace msep {

// Partition of a ground set into disjoint nonempty blocks.
struct Partition {
    std::vector<std::vector<NodeId>> blocks;
};

struct ProbabilityMass {
    std::vector<double> mass;  // per node; must sum to 1 (tolerance 1e-12)
};

struct ViReport {
    double vi = 0.0;
    double false_cut = 0.0;   // H(A|B), over-segmentation of the prediction A
    double false_join = 0.0;  // H(B|A)
};

// Components of V \ S plus one singleton block per separator node.
Partition induced_partition(const Graph& graph, const Separator& s);

// Same partition as per-node block labels (block count returned); avoids
// materializing singleton blocks on large grids.
std::vector<NodeId> induced_partition_labels(const Graph& graph, const Separator& s,
                                             NodeId* block_count = nullptr);

// Variation of information with base-2 logarithms. A is the prediction,
// B the truth. Ground sets must match; zero-mass blocks contribute 0.
ViReport vi(const Partition& a, const Partition& b, const ProbabilityMass& p);

// Label-array core used by the heavy paths; label -1 excludes a node
// from the ground set (both arrays must agree on exclusion).
ViReport vi_from_labels(const std::vector<NodeId>& a, const std::vector<NodeId>& b,
                        const std::vector<double>& mass);

// Variation of information between separator-induced weighted partitions
// with singletons: both partitions over all of V, separator and
// non-separator nodes of the truth each carrying half the mass.
// Errors when the truth separator is empty or all of V.
ViReport viws(const Graph& graph, const Separator& predicted, const Separator& truth);

// Variation of information over mutually non-separator nodes with
// uniform mass; all-zero report when no such node exists.
ViReport vins(const Graph& graph, const Separator& predicted, const Separator& truth);

}  // namespace msep
