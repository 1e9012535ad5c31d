#include "msep/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "msep/errors.hpp"

namespace msep {

LmpInstance::LmpInstance(Graph graph, std::vector<double> edge_costs,
                         std::vector<Interaction> lifted)
    : graph_(std::move(graph)), edge_costs_(std::move(edge_costs)), lifted_(std::move(lifted)) {
    if (edge_costs_.size() != graph_.edges().size())
        throw precondition_error("lmp: edge cost vector size mismatch");
    std::unordered_set<std::uint64_t> seen;
    for (auto& f : lifted_) {
        if (f.u == f.v) throw precondition_error("lmp: lifted pair with equal endpoints");
        if (f.u < 0 || f.v < 0 || f.u >= graph_.node_count() || f.v >= graph_.node_count())
            throw precondition_error("lmp: lifted endpoint out of range");
        if (f.u > f.v) std::swap(f.u, f.v);
        if (graph_.has_edge(f.u, f.v)) throw precondition_error("lmp: lifted pair coincides with an edge");
        const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.u)) << 32) |
                                  static_cast<std::uint32_t>(f.v);
        if (!seen.insert(key).second) throw precondition_error("lmp: duplicate lifted pair");
    }
}

MspOptimum brute_force_msp(const MspInstance& instance) {
    const NodeId n = instance.node_count();
    if (n > 20) throw precondition_error("brute_force_msp: instance too large (|V| > 20)");
    MspOptimum best;
    bool have = false;
    std::vector<NodeId> best_members;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Separator s(n);
        std::vector<NodeId> members;
        for (NodeId v = 0; v < n; ++v)
            if (mask & (1u << v)) {
                s.insert(v);
                members.push_back(v);
            }
        const double value = objective(instance, s);
        if (!have || value < best.value ||
            (value == best.value && std::lexicographical_compare(members.begin(), members.end(),
                                                                 best_members.begin(),
                                                                 best_members.end()))) {
            have = true;
            best.value = value;
            best.separator = s;
            best_members = std::move(members);
        }
    }
    return best;
}

double lmp_partition_cost(const LmpInstance& instance, const std::vector<NodeId>& block) {
    double cost = 0.0;
    const auto& edges = instance.graph().edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (block[edges[e].first] != block[edges[e].second]) cost += instance.edge_costs()[e];
    for (const auto& f : instance.lifted())
        if (block[f.u] != block[f.v]) cost += f.cost;
    return cost;
}

namespace {

bool blocks_connected(const Graph& graph, const std::vector<NodeId>& block, NodeId block_count) {
    // every block must induce a connected subgraph
    std::vector<char> removed(graph.node_count(), 0);
    for (NodeId b = 0; b < block_count; ++b) {
        for (NodeId v = 0; v < graph.node_count(); ++v) removed[v] = block[v] != b;
        bool any = false;
        NodeId comps = 0;
        const auto label = components(graph, removed);
        for (NodeId v = 0; v < graph.node_count(); ++v) {
            if (block[v] != b) continue;
            any = true;
            comps = std::max(comps, static_cast<NodeId>(label[v] + 1));
        }
        if (any && comps > 1) return false;
    }
    return true;
}

}  // namespace

double brute_force_lmp(const LmpInstance& instance) {
    const NodeId n = instance.graph().node_count();
    if (n > 10) throw precondition_error("brute_force_lmp: instance too large (|V| > 10)");
    // enumerate set partitions via restricted growth strings
    std::vector<NodeId> block(n, 0);
    double best = 0.0;
    bool have = false;
    while (true) {
        NodeId block_count = 0;
        for (NodeId v = 0; v < n; ++v) block_count = std::max(block_count, static_cast<NodeId>(block[v] + 1));
        if (blocks_connected(instance.graph(), block, block_count)) {
            const double cost = lmp_partition_cost(instance, block);
            if (!have || cost < best) {
                best = cost;
                have = true;
            }
        }
        // next restricted growth string
        NodeId i = n - 1;
        for (; i > 0; --i) {
            NodeId max_prefix = 0;
            for (NodeId j = 0; j < i; ++j) max_prefix = std::max(max_prefix, block[j]);
            if (block[i] <= max_prefix) {
                ++block[i];
                std::fill(block.begin() + i + 1, block.end(), 0);
                break;
            }
            block[i] = 0;
        }
        if (i == 0) break;
    }
    return best;
}

bool brute_force_consistency(const MspInstance& instance, const PartialAssignment& x) {
    const NodeId n = instance.node_count();
    if (n > 15) throw precondition_error("brute_force_consistency: instance too large (|V| > 15)");
    std::vector<NodeId> free_nodes;
    Separator base(n);
    for (NodeId v = 0; v < n; ++v) {
        if (x.node_labels[v] == Tri::One) base.insert(v);
        if (x.node_labels[v] == Tri::Star) free_nodes.push_back(v);
    }
    const std::size_t k = free_nodes.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        Separator s = base;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) s.insert(free_nodes[i]);
        const auto xs = characteristic_vector(instance, s);
        bool ok = true;
        for (std::size_t f = 0; f < instance.interactions().size() && ok; ++f) {
            if (x.interaction_labels[f] == Tri::Star) continue;
            const char want = x.interaction_labels[f] == Tri::One ? 1 : 0;
            ok = xs.interaction_bits[f] == want;
        }
        if (ok) return true;
    }
    return false;
}

double qubo_value(const std::vector<QuboTerm>& terms, const std::vector<char>& assignment) {
    double value = 0.0;
    for (const auto& t : terms)
        if (assignment[t.i] && assignment[t.j]) value += t.q;
    return value;
}

QuboOptimum brute_force_qubo(const std::vector<QuboTerm>& terms, int n) {
    if (n > 20) throw precondition_error("brute_force_qubo: instance too large (n > 20)");
    for (const auto& t : terms)
        if (t.i < 0 || t.j < t.i || t.j >= n) throw precondition_error("brute_force_qubo: bad term indices");
    QuboOptimum best;
    bool have = false;
    std::vector<char> assignment(n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i) assignment[i] = (mask >> i) & 1u;
        const double value = qubo_value(terms, assignment);
        if (!have || value > best.value ||
            (value == best.value &&
             std::lexicographical_compare(assignment.begin(), assignment.end(),
                                          best.assignment.begin(), best.assignment.end()))) {
            have = true;
            best.value = value;
            best.assignment = assignment;
        }
    }
    return best;
}

}  // namespace msep
