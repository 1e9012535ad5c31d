#pragma once

// Shared test helpers: random instance generators and slow reference
// implementations that stay independent of the library's production code
// paths.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "msep/instance.hpp"
#include "msep/metrics.hpp"
#include "msep/rng.hpp"

namespace msep::test {

// random connected graph: random tree plus extra edges
inline Graph random_connected_graph(RngStream& rng, NodeId n, double extra_edge_prob = 0.3) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::set<std::pair<NodeId, NodeId>> seen;
    for (NodeId v = 1; v < n; ++v) {
        const NodeId parent = static_cast<NodeId>(rng.below(v));
        edges.emplace_back(parent, v);
        seen.insert({parent, v});
    }
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (!seen.count({u, v}) && rng.next_double() < extra_edge_prob) {
                edges.emplace_back(u, v);
                seen.insert({u, v});
            }
    return Graph(n, std::move(edges));
}

inline MspInstance random_instance(RngStream& rng, NodeId n, int max_interactions,
                                   double cost_lo = -1.0, double cost_hi = 1.0) {
    Graph graph = random_connected_graph(rng, n);
    std::vector<double> costs(n);
    for (auto& c : costs) c = rng.uniform(cost_lo, cost_hi);
    std::set<std::pair<NodeId, NodeId>> used;
    std::vector<Interaction> interactions;
    const int want = max_interactions == 0 ? 0 : static_cast<int>(rng.below(max_interactions + 1));
    int guard = 0;
    while (static_cast<int>(interactions.size()) < want && ++guard < 200) {
        NodeId u = static_cast<NodeId>(rng.below(n));
        NodeId v = static_cast<NodeId>(rng.below(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) continue;
        interactions.push_back({u, v, rng.uniform(cost_lo, cost_hi)});
    }
    return MspInstance(std::move(graph), std::move(interactions), std::move(costs));
}

// exhaustive uv-path existence avoiding a node set; independent of the
// library's components()
inline bool path_exists_avoiding(const Graph& graph, const std::vector<char>& avoid, NodeId u,
                                 NodeId v) {
    if (avoid[u] || avoid[v]) return false;
    std::vector<char> visited(graph.node_count(), 0);
    std::vector<NodeId> stack{u};
    visited[u] = 1;
    while (!stack.empty()) {
        const NodeId a = stack.back();
        stack.pop_back();
        if (a == v) return true;
        for (NodeId w : graph.neighbors(a))
            if (!avoid[w] && !visited[w]) {
                visited[w] = 1;
                stack.push_back(w);
            }
    }
    return false;
}

// slow reference entropy: builds the block mass maps directly
inline double reference_vi(const Partition& a, const Partition& b,
                           const std::vector<double>& mass) {
    auto block_of = [](const Partition& p, NodeId v) -> int {
        for (std::size_t i = 0; i < p.blocks.size(); ++i)
            for (NodeId w : p.blocks[i])
                if (w == v) return static_cast<int>(i);
        return -1;
    };
    std::vector<NodeId> ground;
    for (const auto& block : a.blocks) ground.insert(ground.end(), block.begin(), block.end());
    std::map<int, double> pa, pb;
    std::map<std::pair<int, int>, double> pab;
    for (NodeId v : ground) {
        const int ia = block_of(a, v), ib = block_of(b, v);
        pa[ia] += mass[v];
        pb[ib] += mass[v];
        pab[{ia, ib}] += mass[v];
    }
    auto h = [](double p) { return p > 0 ? -p * std::log2(p) : 0.0; };
    double ha = 0, hb = 0, hab = 0;
    for (auto& [k, p] : pa) ha += h(p);
    for (auto& [k, p] : pb) hb += h(p);
    for (auto& [k, p] : pab) hab += h(p);
    return 2 * hab - ha - hb;
}

// 4-path golden instance used across tests: nodes a-b-c-d with costs
// 6,4,3,2, edge interactions 1,1,7 and a long-range interaction (a,d)
// of -8; its optimum is -2 at {b}
inline MspInstance four_path_instance() {
    Graph graph(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<Interaction> interactions{
        {0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 7.0}, {0, 3, -8.0}};
    return MspInstance(std::move(graph), std::move(interactions), {6.0, 4.0, 3.0, 2.0});
}

}  // namespace msep::test
