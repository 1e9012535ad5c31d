#include "msep/metrics.hpp"

#include <cmath>
#include <unordered_map>

#include "msep/errors.hpp"

namespace msep {

Partition induced_partition(const Graph& graph, const Separator& s) {
    NodeId block_count = 0;
    const auto label = induced_partition_labels(graph, s, &block_count);
    Partition p;
    p.blocks.resize(block_count);
    for (NodeId v = 0; v < graph.node_count(); ++v) p.blocks[label[v]].push_back(v);
    return p;
}

std::vector<NodeId> induced_partition_labels(const Graph& graph, const Separator& s,
                                             NodeId* block_count) {
    auto label = components(graph, s);
    NodeId next = 0;
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (label[v] >= 0) next = std::max(next, static_cast<NodeId>(label[v] + 1));
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (label[v] < 0) label[v] = next++;  // singleton per separator node, ascending
    if (block_count) *block_count = next;
    return label;
}

namespace {

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

ViReport vi_from_labels(const std::vector<NodeId>& a, const std::vector<NodeId>& b,
                        const std::vector<double>& mass) {
    if (a.size() != b.size() || a.size() != mass.size())
        throw precondition_error("vi: label/mass size mismatch");
    std::unordered_map<NodeId, double> mass_a, mass_b;
    std::unordered_map<std::uint64_t, double> mass_ab;
    mass_ab.reserve(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
        if ((a[v] < 0) != (b[v] < 0))
            throw precondition_error("vi: partitions cover different ground sets");
        if (a[v] < 0) continue;
        mass_a[a[v]] += mass[v];
        mass_b[b[v]] += mass[v];
        const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a[v])) << 32) |
                                  static_cast<std::uint32_t>(b[v]);
        mass_ab[key] += mass[v];
    }
    double h_a = 0.0, h_b = 0.0, h_ab = 0.0;
    for (const auto& [k, p] : mass_a) h_a += entropy_term(p);
    for (const auto& [k, p] : mass_b) h_b += entropy_term(p);
    for (const auto& [k, p] : mass_ab) h_ab += entropy_term(p);
    ViReport r;
    r.false_cut = std::max(0.0, h_ab - h_b);
    r.false_join = std::max(0.0, h_ab - h_a);
    r.vi = r.false_cut + r.false_join;
    return r;
}

ViReport vi(const Partition& a, const Partition& b, const ProbabilityMass& p) {
    NodeId ground = 0;
    for (const auto& block : a.blocks)
        for (NodeId v : block) ground = std::max(ground, static_cast<NodeId>(v + 1));
    for (const auto& block : b.blocks)
        for (NodeId v : block) ground = std::max(ground, static_cast<NodeId>(v + 1));
    std::vector<NodeId> la(ground, -1), lb(ground, -1);
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        for (NodeId v : a.blocks[i]) la[v] = static_cast<NodeId>(i);
    for (std::size_t i = 0; i < b.blocks.size(); ++i)
        for (NodeId v : b.blocks[i]) lb[v] = static_cast<NodeId>(i);
    if (static_cast<NodeId>(p.mass.size()) < ground)
        throw precondition_error("vi: probability mass smaller than ground set");
    std::vector<double> mass(ground, 0.0);
    for (NodeId v = 0; v < ground; ++v) mass[v] = p.mass[v];
    return vi_from_labels(la, lb, mass);
}

ViReport viws(const Graph& graph, const Separator& predicted, const Separator& truth) {
    const NodeId n = graph.node_count();
    const NodeId t = truth.size();
    if (t == 0 || t == n)
        throw precondition_error(
            "viws: truth separator is empty or all of V; the class-balanced mass is undefined, "
            "use vi with uniform mass instead");
    const double sep_mass = 0.5 / static_cast<double>(t);
    const double non_mass = 0.5 / static_cast<double>(n - t);
    std::vector<double> mass(n);
    for (NodeId v = 0; v < n; ++v) mass[v] = truth.contains(v) ? sep_mass : non_mass;
    const auto la = induced_partition_labels(graph, predicted);
    const auto lb = induced_partition_labels(graph, truth);
    return vi_from_labels(la, lb, mass);
}

ViReport vins(const Graph& graph, const Separator& predicted, const Separator& truth) {
    const NodeId n = graph.node_count();
    std::vector<char> keep(n, 0);
    std::int64_t count = 0;
    for (NodeId v = 0; v < n; ++v) {
        keep[v] = !predicted.contains(v) && !truth.contains(v);
        count += keep[v];
    }
    if (count == 0) return ViReport{};  // documented degeneracy
    auto la = induced_partition_labels(graph, predicted);
    auto lb = induced_partition_labels(graph, truth);
    std::vector<double> mass(n, 0.0);
    const double u = 1.0 / static_cast<double>(count);
    for (NodeId v = 0; v < n; ++v) {
        if (keep[v]) {
            mass[v] = u;
        } else {
            la[v] = -1;
            lb[v] = -1;
        }
    }
    return vi_from_labels(la, lb, mass);
}

}  // namespace msep
