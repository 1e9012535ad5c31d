#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace msep {

using NodeId = std::int32_t;

namespace perf {
// Operation counters used by tests to assert linear-time bounds.
extern thread_local std::uint64_t components_calls;
extern thread_local std::uint64_t components_ops;
void reset();
}  // namespace perf

// Undirected simple graph over dense node ids 0..n-1 with sorted
// adjacency lists. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const { return static_cast<NodeId>(adjacency_.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
    NodeId degree(NodeId v) const { return static_cast<NodeId>(adjacency_[v].size()); }
    bool has_edge(NodeId u, NodeId v) const;

    // canonical (u < v) edge list, sorted lexicographically
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

// Node subset of a graph, stored as a mask plus member count.
class Separator {
public:
    Separator() = default;
    explicit Separator(NodeId node_count) : mask_(node_count, 0) {}
    Separator(NodeId node_count, std::span<const NodeId> members);

    static Separator full(NodeId node_count);

    NodeId node_count() const { return static_cast<NodeId>(mask_.size()); }
    NodeId size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(NodeId v) const { return mask_[v] != 0; }
    void insert(NodeId v);
    void erase(NodeId v);
    const std::vector<char>& mask() const { return mask_; }
    std::vector<NodeId> members() const;

    bool operator==(const Separator&) const = default;

private:
    std::vector<char> mask_;
    NodeId count_ = 0;
};

// Component labels of the subgraph induced by the non-removed nodes.
// Removed nodes are labeled -1; labels are dense from 0 and assigned by
// BFS from the lowest unvisited id, so results are deterministic.
std::vector<NodeId> components(const Graph& graph, const std::vector<char>& removed);
std::vector<NodeId> components(const Graph& graph, const Separator& removed);

// True iff u and v are separated by S: u in S, v in S, or every uv-path
// meets S.
bool is_separated(const Graph& graph, const Separator& sep, NodeId u, NodeId v);

// 3-D grid of voxels with 6-connectivity. Node ids are row-major with x
// fastest: id = x + nx*(y + ny*z). This layout is load-bearing for the
// volume file formats.
struct Grid3 {
    int nx = 0, ny = 0, nz = 0;
    Graph graph;

    NodeId index(int x, int y, int z) const {
        return static_cast<NodeId>(x + static_cast<std::int64_t>(nx) * (y + static_cast<std::int64_t>(ny) * z));
    }
    void coord(NodeId id, int& x, int& y, int& z) const {
        x = static_cast<int>(id % nx);
        y = static_cast<int>((id / nx) % ny);
        z = static_cast<int>(id / (static_cast<std::int64_t>(nx) * ny));
    }
    std::int64_t voxel_count() const { return static_cast<std::int64_t>(nx) * ny * nz; }
};

Grid3 grid3(int nx, int ny, int nz);

}  // namespace msep
