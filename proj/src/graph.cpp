#include "msep/graph.hpp"

#include <algorithm>
#include <string>

#include "msep/errors.hpp"

namespace msep {

namespace perf {
thread_local std::uint64_t components_calls = 0;
thread_local std::uint64_t components_ops = 0;
void reset() {
    components_calls = 0;
    components_ops = 0;
}
}  // namespace perf

Graph::Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges) {
    if (node_count < 0) throw precondition_error("graph: negative node count");
    adjacency_.resize(node_count);
    for (auto& [u, v] : edges) {
        if (u == v) throw precondition_error("graph: self-loop at node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= node_count || v >= node_count)
            throw precondition_error("graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw precondition_error("graph: duplicate edge");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Separator::Separator(NodeId node_count, std::span<const NodeId> members) : mask_(node_count, 0) {
    for (NodeId v : members) {
        if (v < 0 || v >= node_count) throw precondition_error("separator: member out of range");
        if (!mask_[v]) {
            mask_[v] = 1;
            ++count_;
        }
    }
}

Separator Separator::full(NodeId node_count) {
    Separator s(node_count);
    std::fill(s.mask_.begin(), s.mask_.end(), char(1));
    s.count_ = node_count;
    return s;
}

void Separator::insert(NodeId v) {
    if (!mask_[v]) {
        mask_[v] = 1;
        ++count_;
    }
}

void Separator::erase(NodeId v) {
    if (mask_[v]) {
        mask_[v] = 0;
        --count_;
    }
}

std::vector<NodeId> Separator::members() const {
    std::vector<NodeId> out;
    out.reserve(count_);
    for (NodeId v = 0; v < node_count(); ++v)
        if (mask_[v]) out.push_back(v);
    return out;
}

std::vector<NodeId> components(const Graph& graph, const std::vector<char>& removed) {
    ++perf::components_calls;
    const NodeId n = graph.node_count();
    std::vector<NodeId> label(n, -1);
    std::vector<NodeId> queue;
    NodeId next_label = 0;
    for (NodeId start = 0; start < n; ++start) {
        if (removed[start] || label[start] >= 0) continue;
        label[start] = next_label;
        queue.clear();
        queue.push_back(start);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const NodeId v = queue[i];
            ++perf::components_ops;
            for (NodeId w : graph.neighbors(v)) {
                ++perf::components_ops;
                if (!removed[w] && label[w] < 0) {
                    label[w] = next_label;
                    queue.push_back(w);
                }
            }
        }
        ++next_label;
    }
    return label;
}

std::vector<NodeId> components(const Graph& graph, const Separator& removed) {
    return components(graph, removed.mask());
}

bool is_separated(const Graph& graph, const Separator& sep, NodeId u, NodeId v) {
    if (sep.contains(u) || sep.contains(v)) return true;
    const auto label = components(graph, sep);
    return label[u] != label[v];
}

Grid3 grid3(int nx, int ny, int nz) {
    if (nx < 1 || ny < 1 || nz < 1) throw precondition_error("grid3: dimensions must be >= 1");
    Grid3 g;
    g.nx = nx;
    g.ny = ny;
    g.nz = nz;
    const std::int64_t n = g.voxel_count();
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(3 * n));
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) {
                const NodeId id = g.index(x, y, z);
                if (x + 1 < nx) edges.emplace_back(id, g.index(x + 1, y, z));
                if (y + 1 < ny) edges.emplace_back(id, g.index(x, y + 1, z));
                if (z + 1 < nz) edges.emplace_back(id, g.index(x, y, z + 1));
            }
    g.graph = Graph(static_cast<NodeId>(n), std::move(edges));
    return g;
}

}  // namespace msep
