#include "msep/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "msep/errors.hpp"

namespace msep {

namespace {

bool connected(const Graph& graph) {
    if (graph.node_count() == 0) return true;
    const std::vector<char> nothing(graph.node_count(), 0);
    const auto label = components(graph, nothing);
    return *std::max_element(label.begin(), label.end()) == 0;
}

double sum_abs(const MspInstance& instance) {
    double s = 0.0;
    for (double c : instance.node_costs()) s += std::fabs(c);
    for (const auto& f : instance.interactions()) s += std::fabs(f.cost);
    return s;
}

}  // namespace

MspToLmpResult msp_to_lmp(const MspInstance& instance) {
    const NodeId n = instance.node_count();
    if (n < 2) throw precondition_error("msp_to_lmp: single-node instances are trivial, not reduced");
    if (!connected(instance.graph())) throw precondition_error("msp_to_lmp: graph must be connected");

    const auto& edges = instance.graph().edges();
    const std::int64_t m = static_cast<std::int64_t>(edges.size());
    const double big = 1.0 + sum_abs(instance);

    NodeId max_degree = 0;
    for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, instance.graph().degree(v));
    if (big * static_cast<double>(n) * std::max<NodeId>(max_degree, 1) > 0x1p52)
        throw precondition_error("msp_to_lmp: constructed costs would exceed exact double range");

    MspToLmpResult result;
    result.source_nodes = n;
    result.value_offset = -2.0 * big * static_cast<double>(m) * static_cast<double>(n - 1);

    // nodes: originals, copies, one node per edge
    const NodeId total = 2 * n + static_cast<NodeId>(m);
    std::vector<std::pair<NodeId, NodeId>> new_edges;
    std::vector<std::pair<std::pair<NodeId, NodeId>, double>> keyed_costs;
    auto add_edge = [&](NodeId a, NodeId b, double c) {
        if (a > b) std::swap(a, b);
        new_edges.emplace_back(a, b);
        keyed_costs.push_back({{a, b}, c});
    };
    for (NodeId v = 0; v < n; ++v)
        add_edge(v, result.copy_of(v), big * instance.graph().degree(v));
    for (std::int64_t e = 0; e < m; ++e) {
        const auto [u, w] = edges[e];
        add_edge(u, result.edge_node(e), big + instance.node_costs()[u] / instance.graph().degree(u));
        add_edge(w, result.edge_node(e), big + instance.node_costs()[w] / instance.graph().degree(w));
    }

    std::vector<Interaction> lifted;
    for (const auto& f : instance.interactions()) lifted.push_back({f.u, f.v, f.cost});
    for (std::int64_t e = 0; e < m; ++e) {
        const auto [u, w] = edges[e];
        lifted.push_back({result.copy_of(u), result.edge_node(e), -big * n});
        lifted.push_back({result.copy_of(w), result.edge_node(e), -big * n});
    }

    Graph target_graph(total, std::move(new_edges));
    // align costs with the canonical edge order of the target graph
    std::vector<double> ordered(target_graph.edges().size());
    for (const auto& [key, cost] : keyed_costs) {
        const auto it =
            std::lower_bound(target_graph.edges().begin(), target_graph.edges().end(), key);
        ordered[static_cast<std::size_t>(it - target_graph.edges().begin())] = cost;
    }
    result.target = LmpInstance(std::move(target_graph), std::move(ordered), std::move(lifted));
    return result;
}

std::vector<NodeId> MspToLmpResult::multicut_blocks(const MspInstance& source,
                                                    const Separator& s) const {
    // phi(S): a separator node pairs with its copy, a non-separator node
    // loses its copy (singleton) and groups with its component plus the
    // adjacent edge nodes; an edge node with both endpoints separated is
    // a singleton
    const NodeId n = source.node_count();
    const auto& edges = source.graph().edges();
    const auto label = components(source.graph(), s);
    const NodeId total = 2 * n + static_cast<NodeId>(edges.size());
    std::vector<NodeId> block(total);
    NodeId next = 0;
    std::vector<NodeId> comp_block(n, -1);
    for (NodeId v = 0; v < n; ++v) {
        if (s.contains(v)) {
            block[v] = next++;
            block[copy_of(v)] = block[v];
        } else {
            if (comp_block[label[v]] < 0) comp_block[label[v]] = next++;
            block[v] = comp_block[label[v]];
            block[copy_of(v)] = next++;
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, w] = edges[e];
        if (!s.contains(u))
            block[edge_node(static_cast<std::int64_t>(e))] = block[u];
        else if (!s.contains(w))
            block[edge_node(static_cast<std::int64_t>(e))] = block[w];
        else
            block[edge_node(static_cast<std::int64_t>(e))] = next++;
    }
    return block;
}

LmpToMspResult lmp_to_msp(const LmpInstance& instance) {
    if (!connected(instance.graph())) throw precondition_error("lmp_to_msp: graph must be connected");
    const NodeId n = instance.graph().node_count();
    const auto& edges = instance.graph().edges();
    const std::int64_t m = static_cast<std::int64_t>(edges.size());

    double big = 1.0;
    for (double c : instance.edge_costs()) big += std::fabs(c);
    for (const auto& f : instance.lifted()) big += std::fabs(f.cost);

    LmpToMspResult result;
    result.source_nodes = n;
    result.value_offset = 0.0;

    const NodeId total = n + static_cast<NodeId>(m);
    std::vector<std::pair<NodeId, NodeId>> new_edges;
    for (std::int64_t e = 0; e < m; ++e) {
        new_edges.emplace_back(edges[e].first, result.edge_node(e));
        new_edges.emplace_back(edges[e].second, result.edge_node(e));
    }
    std::vector<double> node_costs(total);
    for (NodeId v = 0; v < n; ++v) node_costs[v] = big * static_cast<double>(m);
    for (std::int64_t e = 0; e < m; ++e) node_costs[result.edge_node(e)] = big;

    std::vector<Interaction> interactions;
    for (std::int64_t e = 0; e < m; ++e)
        interactions.push_back({edges[e].first, edges[e].second, instance.edge_costs()[e] - big});
    for (const auto& f : instance.lifted()) interactions.push_back({f.u, f.v, f.cost});

    result.target =
        MspInstance(Graph(total, std::move(new_edges)), std::move(interactions), std::move(node_costs));
    return result;
}

Separator LmpToMspResult::separator_of(const LmpInstance& source,
                                       const std::vector<NodeId>& blocks) const {
    const auto& edges = source.graph().edges();
    Separator s(source_nodes + static_cast<NodeId>(edges.size()));
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (blocks[edges[e].first] != blocks[edges[e].second])
            s.insert(edge_node(static_cast<std::int64_t>(e)));
    return s;
}

QuboToMspResult qubo_to_msp(const std::vector<QuboTerm>& terms, int n) {
    if (n < 1) throw precondition_error("qubo_to_msp: need n >= 1");
    std::vector<double> diagonal(n, 0.0);
    std::vector<std::pair<NodeId, NodeId>> support;
    std::vector<double> support_cost;
    double offset = 0.0;
    for (const auto& t : terms) {
        if (t.i < 0 || t.j < t.i || t.j >= n) throw precondition_error("qubo_to_msp: bad term indices");
        offset += t.q;
        if (t.i == t.j) {
            diagonal[t.i] += t.q;
        } else if (t.q != 0.0) {
            support.emplace_back(t.i, t.j);
            support_cost.push_back(t.q);
        }
    }
    Graph graph(n, support);
    if (!connected(graph))
        throw precondition_error("qubo_to_msp: nonzero support is disconnected; reduce per component");

    // E = F: one interaction per support edge, in canonical edge order
    std::vector<Interaction> interactions;
    for (std::size_t k = 0; k < support.size(); ++k) {
        auto [a, b] = support[k];
        if (a > b) std::swap(a, b);
        interactions.push_back({a, b, support_cost[k]});
    }

    QuboToMspResult result;
    result.value_offset = offset;
    result.target = MspInstance(std::move(graph), std::move(interactions), std::move(diagonal));
    return result;
}

std::vector<char> QuboToMspResult::assignment_of(const Separator& s) const {
    std::vector<char> x(s.node_count());
    for (NodeId v = 0; v < s.node_count(); ++v) x[v] = s.contains(v) ? 0 : 1;
    return x;
}

Separator QuboToMspResult::separator_of(const std::vector<char>& assignment) const {
    Separator s(static_cast<NodeId>(assignment.size()));
    for (NodeId v = 0; v < s.node_count(); ++v)
        if (!assignment[v]) s.insert(v);
    return s;
}

SteinerToMspResult steiner_to_msp(const Graph& graph, const std::vector<NodeId>& terminals,
                                  const std::vector<double>& node_weights) {
    if (terminals.empty()) throw precondition_error("steiner_to_msp: need at least one terminal");
    if (!connected(graph)) throw precondition_error("steiner_to_msp: graph must be connected");
    double total_weight = 0.0;
    for (double w : node_weights) {
        if (w < 0.0) throw precondition_error("steiner_to_msp: negative node weight");
        total_weight += w;
    }
    std::vector<double> costs(node_weights.size());
    for (std::size_t v = 0; v < costs.size(); ++v) costs[v] = -node_weights[v];
    std::vector<Interaction> interactions;
    for (std::size_t k = 1; k < terminals.size(); ++k)
        interactions.push_back({terminals[0], terminals[k], total_weight + 1.0});

    SteinerToMspResult result;
    result.value_offset = -total_weight;
    result.target = MspInstance(graph, std::move(interactions), std::move(costs));
    return result;
}

std::vector<NodeId> SteinerToMspResult::tree_of(const Separator& s) const {
    std::vector<NodeId> tree;
    for (NodeId v = 0; v < s.node_count(); ++v)
        if (!s.contains(v)) tree.push_back(v);
    return tree;
}

MtvsToMspResult mtvs_to_msp(const Graph& graph, const std::vector<NodeId>& terminals,
                            const std::vector<double>& node_weights) {
    if (!connected(graph)) throw precondition_error("mtvs_to_msp: graph must be connected");
    double total_weight = 0.0;
    for (double w : node_weights) {
        if (w < 0.0) throw precondition_error("mtvs_to_msp: negative node weight");
        total_weight += w;
    }
    for (std::size_t a = 0; a < terminals.size(); ++a)
        for (std::size_t b = a + 1; b < terminals.size(); ++b)
            if (graph.has_edge(terminals[a], terminals[b]))
                throw precondition_error("mtvs_to_msp: adjacent terminals have no feasible separator");

    const double big = total_weight + 1.0;
    std::vector<double> costs(node_weights);
    for (NodeId u : terminals) costs[u] = big;
    std::vector<Interaction> interactions;
    for (std::size_t a = 0; a < terminals.size(); ++a)
        for (std::size_t b = a + 1; b < terminals.size(); ++b)
            interactions.push_back({terminals[a], terminals[b], -big});

    MtvsToMspResult result;
    result.value_offset = -static_cast<double>(interactions.size()) * big;
    result.target = MspInstance(graph, std::move(interactions), std::move(costs));
    return result;
}

Sat3Gadget sat3_to_consistency(const std::vector<Clause3>& formula) {
    const int clauses = static_cast<int>(formula.size());
    if (clauses == 0) throw precondition_error("sat3_to_consistency: empty formula");
    for (const auto& clause : formula)
        for (int lit : clause)
            if (lit == 0) throw precondition_error("sat3_to_consistency: zero literal");

    Sat3Gadget gadget;
    gadget.source = 0;
    gadget.sink = 1;
    const NodeId n = 2 + 3 * clauses;

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int j = 0; j < 3; ++j) edges.emplace_back(gadget.source, gadget.literal_node(0, j));
    for (int i = 0; i + 1 < clauses; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                edges.emplace_back(gadget.literal_node(i, j), gadget.literal_node(i + 1, k));
    for (int j = 0; j < 3; ++j) edges.emplace_back(gadget.literal_node(clauses - 1, j), gadget.sink);

    std::vector<Interaction> interactions;
    interactions.push_back({gadget.source, gadget.sink, 0.0});
    // every pair of contradictory literal occurrences, same column included
    for (int i = 0; i < clauses; ++i)
        for (int j = 0; j < 3; ++j)
            for (int i2 = i; i2 < clauses; ++i2)
                for (int j2 = (i2 == i ? j + 1 : 0); j2 < 3; ++j2)
                    if (formula[i][j] == -formula[i2][j2])
                        interactions.push_back(
                            {gadget.literal_node(i, j), gadget.literal_node(i2, j2), 0.0});

    gadget.instance = MspInstance(Graph(n, std::move(edges)), std::move(interactions),
                                  std::vector<double>(n, 0.0));

    gadget.assignment = PartialAssignment::all_star(gadget.instance);
    gadget.assignment.node_labels[gadget.source] = Tri::Zero;
    gadget.assignment.node_labels[gadget.sink] = Tri::Zero;
    gadget.assignment.interaction_labels[0] = Tri::Zero;  // (s,t) stays connected
    for (std::size_t f = 1; f < gadget.instance.interactions().size(); ++f)
        gadget.assignment.interaction_labels[f] = Tri::One;
    return gadget;
}

}  // namespace msep
