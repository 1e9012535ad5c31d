#include "msep/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "msep/errors.hpp"

namespace msep {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

void audit_objective(const MspInstance& instance, const Separator& s, double running) {
    const double reference = objective(instance, s);
    const double scale = std::max(1.0, std::fabs(reference));
    if (std::fabs(reference - running) > 1e-9 * scale)
        throw std::logic_error("local search state audit failed: objective mismatch");
}

// Shared contraction state for GSS. Non-separator nodes are grouped into
// components by a union-find; interactions are rekeyed onto component
// roots with parallel costs summed. Each component root also tracks the
// separator nodes adjacent to it.
class GssState {
public:
    GssState(const MspInstance& instance, const Separator& initial)
        : instance_(instance),
          graph_(instance.graph()),
          sep_(initial),
          parent_(instance.node_count()),
          fadj_(instance.node_count()),
          boundary_(instance.node_count()),
          stamp_(instance.node_count(), 0) {
        const NodeId n = instance.node_count();
        for (NodeId v = 0; v < n; ++v) parent_[v] = v;

        // group pre-existing non-separator nodes into components
        const auto label = components(graph_, sep_);
        std::unordered_map<NodeId, NodeId> rep;  // component label -> root
        for (NodeId v = 0; v < n; ++v) {
            if (sep_.contains(v)) continue;
            auto [it, inserted] = rep.try_emplace(label[v], v);
            if (!inserted) parent_[v] = it->second;
        }

        // key surviving interactions on current endpoints, summing
        // parallels; interactions inside one component are gone for good
        const auto& fs = instance.interactions();
        for (const auto& f : fs) {
            const NodeId a = current_id(f.u);
            const NodeId b = current_id(f.v);
            if (a == b) continue;
            add_cost(a, b, f.cost);
        }

        // component boundaries: separator nodes adjacent to the component
        for (NodeId v = 0; v < n; ++v) {
            if (sep_.contains(v)) continue;
            const NodeId r = find(v);
            for (NodeId w : graph_.neighbors(v))
                if (sep_.contains(w)) boundary_[r].push_back(w);
        }
        for (NodeId v = 0; v < n; ++v)
            if (!sep_.contains(v) && find(v) == v) dedupe_boundary(v);
    }

    const Separator& separator() const { return sep_; }

    bool in_separator(NodeId v) const { return sep_.contains(v); }

    double potential(NodeId u) {
        // p_u = -c_u - sum of interaction costs inside {u} + adjacent components
        collect_neighborhood(u);
        double p = -instance_.node_costs()[u];
        for (std::size_t i = 0; i < nhood_.size(); ++i)
            for (std::size_t j = i + 1; j < nhood_.size(); ++j) {
                const auto it = fcost_.find(pair_key(nhood_[i], nhood_[j]));
                if (it != fcost_.end()) p -= it->second;
            }
        return p;
    }

    // Removes v from the separator, contracts it with adjacent
    // components, and returns the separator nodes whose potential needs
    // recomputation (the boundary of the merged component).
    const std::vector<NodeId>& remove_and_contract(NodeId v) {
        sep_.erase(v);

        merge_members_.clear();
        merge_members_.push_back(v);
        ++stamp_epoch_;
        stamp_[v] = stamp_epoch_;
        for (NodeId w : graph_.neighbors(v)) {
            if (sep_.contains(w)) continue;
            const NodeId r = find(w);
            if (stamp_[r] != stamp_epoch_) {
                stamp_[r] = stamp_epoch_;
                merge_members_.push_back(r);
            }
        }

        // root choice: largest interaction list, so rekeying merges the
        // smaller lists into the bigger one
        NodeId base = merge_members_[0];
        for (NodeId m : merge_members_)
            if (fadj_[m].size() > fadj_[base].size()) base = m;
        for (NodeId m : merge_members_)
            if (m != base) parent_[m] = base;

        // rekey interactions of the swallowed members
        for (NodeId m : merge_members_) {
            if (m == base) continue;
            for (NodeId p : fadj_[m]) {
                const auto it = fcost_.find(pair_key(m, p));
                if (it == fcost_.end()) continue;  // counterpart already processed
                const double c = it->second;
                fcost_.erase(it);
                if (find(p) == base) continue;  // now internal, drop
                auto [dst, inserted] = fcost_.try_emplace(pair_key(base, p), 0.0);
                dst->second += c;
                if (inserted) {
                    fadj_[base].push_back(p);
                    fadj_[p].push_back(base);
                }
            }
            fadj_[m].clear();
            fadj_[m].shrink_to_fit();
        }
        // purge stale partners from the surviving list
        std::erase_if(fadj_[base], [&](NodeId p) {
            return find(p) == base || fcost_.find(pair_key(base, p)) == fcost_.end();
        });

        // merged boundary: union of member boundaries plus v's separator
        // neighbors, minus nodes that have left the separator
        merged_boundary_.clear();
        ++stamp_epoch_;
        auto push_boundary = [&](NodeId w) {
            if (sep_.contains(w) && stamp_[w] != stamp_epoch_) {
                stamp_[w] = stamp_epoch_;
                merged_boundary_.push_back(w);
            }
        };
        for (NodeId w : graph_.neighbors(v)) push_boundary(w);
        for (NodeId m : merge_members_) {
            for (NodeId w : boundary_[m]) push_boundary(w);
            if (m != base) {
                boundary_[m].clear();
                boundary_[m].shrink_to_fit();
            }
        }
        boundary_[base] = merged_boundary_;
        return boundary_[base];
    }

private:
    NodeId find(NodeId v) {
        NodeId root = v;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[v] != root) {
            const NodeId next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    NodeId current_id(NodeId v) { return sep_.contains(v) ? v : find(v); }

    void add_cost(NodeId a, NodeId b, double c) {
        auto [it, inserted] = fcost_.try_emplace(pair_key(a, b), 0.0);
        it->second += c;
        if (inserted) {
            fadj_[a].push_back(b);
            fadj_[b].push_back(a);
        }
    }

    void collect_neighborhood(NodeId u) {
        nhood_.clear();
        nhood_.push_back(u);
        ++stamp_epoch_;
        stamp_[u] = stamp_epoch_;
        for (NodeId w : graph_.neighbors(u)) {
            if (sep_.contains(w)) continue;
            const NodeId r = find(w);
            if (stamp_[r] != stamp_epoch_) {
                stamp_[r] = stamp_epoch_;
                nhood_.push_back(r);
            }
        }
    }

    void dedupe_boundary(NodeId r) {
        auto& b = boundary_[r];
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }

    const MspInstance& instance_;
    const Graph& graph_;
    Separator sep_;
    std::vector<NodeId> parent_;
    std::unordered_map<std::uint64_t, double> fcost_;  // interaction costs on current ids
    std::vector<std::vector<NodeId>> fadj_;            // interaction partners on current ids
    std::vector<std::vector<NodeId>> boundary_;        // per root: adjacent separator nodes
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_epoch_ = 0;
    std::vector<NodeId> nhood_;
    std::vector<NodeId> merge_members_;
    std::vector<NodeId> merged_boundary_;
};

}  // namespace

LocalSearchResult gss(const MspInstance& instance, const GssOptions& options) {
    const NodeId n = instance.node_count();
    Separator initial = options.initial.value_or(Separator::full(n));
    if (initial.node_count() != n) throw precondition_error("gss: initial separator size mismatch");

    LocalSearchResult result;
    result.initial_objective = objective(instance, initial);
    result.trace.push_back(result.initial_objective);

    GssState state(instance, initial);
    VersionedQueue queue(n);
    for (NodeId v = 0; v < n; ++v)
        if (initial.contains(v)) queue.push(v, state.potential(v));

    double obj = result.initial_objective;
    NodeId v = 0;
    double p = 0.0;
    while (queue.pop(v, p)) {
        if (!state.in_separator(v)) continue;
        if (options.stop_on_zero_potential ? (p >= 0.0) : (p > 0.0)) break;
        obj += p;
        result.trace.push_back(obj);
        result.committed.push_back(v);
        ++result.moves;
        const auto& touched = state.remove_and_contract(v);
        for (NodeId u : touched) queue.push(u, state.potential(u));
        if (options.audit_state) audit_objective(instance, state.separator(), obj);
    }

    result.separator = state.separator();
    result.final_objective = obj;
    return result;
}

LocalSearchResult gsg(const MspInstance& instance, const GsgOptions& options) {
    const NodeId n = instance.node_count();
    const auto& fs = instance.interactions();
    const auto& graph = instance.graph();

    LocalSearchResult result;
    result.initial_objective = 0.0;  // S = empty pays nothing
    result.trace.push_back(0.0);
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!instance.interaction_is_edge(static_cast<std::int32_t>(i)) && fs[i].cost < 0.0)
            result.greedy_exactness_guaranteed = false;

    std::vector<char> alive(n, 1);
    std::vector<char> f_alive(fs.size(), 1);
    {
        // interactions already separated by the empty separator exist
        // only on disconnected inputs
        const std::vector<char> nothing(n, 0);
        const auto label = components(graph, nothing);
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (label[fs[i].u] != label[fs[i].v]) f_alive[i] = 0;
    }

    std::vector<double> potential(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        potential[v] = instance.node_costs()[v];
        for (std::int32_t fi : instance.interactions_at(v))
            if (f_alive[fi]) potential[v] += fs[fi].cost;
    }

    // cut-node records: nodes whose cached potential counts interaction f
    std::vector<std::vector<NodeId>> cut_nodes(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (f_alive[i]) cut_nodes[i] = {fs[i].u, fs[i].v};

    VersionedQueue queue(n);
    for (NodeId v = 0; v < n; ++v) queue.push(v, potential[v]);

    // epoch bumps on every committed insertion; a cached potential is
    // exact iff recomputed in the current epoch
    std::int64_t epoch = 1;
    std::vector<std::int64_t> exact_at(n, 0);
    std::vector<std::vector<std::int32_t>> pending_cut(n);

    // scratch for the cut probe, reused across pops
    std::vector<std::int64_t> visit_epoch(n, 0);
    std::vector<std::int32_t> region_of(n, 0);
    std::vector<std::int64_t> f_seen(fs.size(), 0);
    std::int64_t probe_epoch = 0;
    std::vector<NodeId> sources;
    std::vector<std::int32_t> parent;
    std::vector<std::vector<NodeId>> frontier, region_nodes;
    std::vector<std::size_t> head;

    auto find_region = [&](std::int32_t r) {
        while (parent[r] != r) r = parent[r] = parent[parent[r]];
        return r;
    };

    // Exact potential of v: interactions with endpoint v are always
    // separated by inserting v; others only if v cuts its component.
    // The probe grows one region per live neighbor in lockstep, merging
    // regions on contact. A region whose frontier empties is a complete
    // component of the graph without v, i.e. a separated side; the probe
    // stops once at most one region is still open, so its cost tracks
    // the small sides and merge distances rather than full detours.
    auto recompute = [&](NodeId v) {
        auto& cut = pending_cut[v];
        cut.clear();
        ++probe_epoch;
        for (std::int32_t fi : instance.interactions_at(v))
            if (f_alive[fi]) {
                cut.push_back(fi);
                f_seen[fi] = probe_epoch;
            }

        sources.clear();
        for (NodeId w : graph.neighbors(v))
            if (alive[w]) sources.push_back(w);
        const std::int32_t k = static_cast<std::int32_t>(sources.size());

        if (k > 1) {
            visit_epoch[v] = probe_epoch;  // acts as removed

            parent.resize(k);
            if (static_cast<std::int32_t>(frontier.size()) < k) {
                frontier.resize(k);
                region_nodes.resize(k);
            }
            head.assign(k, 0);
            std::int32_t region_count = k;
            for (std::int32_t i = 0; i < k; ++i) {
                parent[i] = i;
                frontier[i].clear();
                region_nodes[i].clear();
                const NodeId s = sources[i];
                visit_epoch[s] = probe_epoch;
                region_of[s] = i;
                frontier[i].push_back(s);
                region_nodes[i].push_back(s);
            }

            auto merge = [&](std::int32_t a, std::int32_t b) {
                a = find_region(a);
                b = find_region(b);
                if (a == b) return a;
                // splice the smaller region into the larger
                if (frontier[a].size() - head[a] + region_nodes[a].size() <
                    frontier[b].size() - head[b] + region_nodes[b].size())
                    std::swap(a, b);
                parent[b] = a;
                for (std::size_t t = head[b]; t < frontier[b].size(); ++t)
                    frontier[a].push_back(frontier[b][t]);
                for (NodeId node : region_nodes[b]) region_nodes[a].push_back(node);
                frontier[b].clear();
                region_nodes[b].clear();
                head[b] = 0;
                --region_count;
                return a;
            };

            // sources adjacent to each other merge immediately
            for (std::int32_t i = 0; i < k && region_count > 1; ++i)
                for (NodeId w : graph.neighbors(sources[i]))
                    if (w != v && alive[w] && visit_epoch[w] == probe_epoch)
                        merge(i, region_of[w]);

            // round-robin: one node per open region per pass
            while (region_count > 1) {
                std::int32_t open_regions = 0;
                std::int32_t expanded = 0;
                for (std::int32_t i = 0; i < k && region_count > 1; ++i) {
                    if (find_region(i) != i) continue;
                    if (head[i] >= frontier[i].size()) continue;  // complete side
                    ++open_regions;
                    ++expanded;
                    const NodeId a = frontier[i][head[i]++];
                    for (NodeId w : graph.neighbors(a)) {
                        if (w == v || !alive[w]) continue;
                        const std::int32_t ra = find_region(region_of[a]);
                        if (visit_epoch[w] != probe_epoch) {
                            visit_epoch[w] = probe_epoch;
                            region_of[w] = ra;
                            frontier[ra].push_back(w);
                            region_nodes[ra].push_back(w);
                        } else {
                            merge(ra, region_of[w]);
                        }
                    }
                }
                if (expanded == 0 || open_regions <= 1) break;
            }

            if (region_count > 1) {
                // v cuts its component: every complete region is a
                // separated side; the open region plus the unexplored
                // remainder form the last one. Interactions straddling
                // sides are collected from the complete regions only.
                for (std::int32_t i = 0; i < k; ++i) {
                    if (find_region(i) != i) continue;
                    if (head[i] < frontier[i].size()) continue;  // open region: skip
                    for (NodeId a : region_nodes[i]) {
                        for (std::int32_t fi : instance.interactions_at(a)) {
                            if (!f_alive[fi] || f_seen[fi] == probe_epoch) continue;
                            const auto& f = fs[fi];
                            const NodeId b = f.u == a ? f.v : f.u;
                            if (b == v) continue;  // adjacent, already counted
                            const bool same_side =
                                visit_epoch[b] == probe_epoch && find_region(region_of[b]) == i;
                            if (!same_side) {
                                f_seen[fi] = probe_epoch;
                                cut.push_back(fi);
                            }
                        }
                    }
                }
            }
        }

        double p = instance.node_costs()[v];
        for (std::int32_t fi : cut) {
            p += fs[fi].cost;
            auto& cn = cut_nodes[fi];
            if (std::find(cn.begin(), cn.end(), v) == cn.end()) cn.push_back(v);
        }
        potential[v] = p;
        exact_at[v] = epoch;
        return p;
    };

    double obj = 0.0;
    Separator sep(n);
    NodeId v = 0;
    double p = 0.0;
    while (queue.pop(v, p)) {
        if (!alive[v]) continue;
        if (options.stop_on_zero_potential ? (p >= 0.0) : (p > 0.0)) break;
        if (exact_at[v] != epoch) {
            const double refreshed = recompute(v);
            if (options.on_recompute) options.on_recompute(v, p, refreshed);
            queue.push(v, refreshed);  // reinsert, then re-pop decides
            if (refreshed != p) ++result.rejected_moves;
            continue;
        }
        // commit: delete v, retire the separated interactions, and
        // discount them from every recorded cut-node's cached potential
        alive[v] = 0;
        sep.insert(v);
        obj += p;
        result.trace.push_back(obj);
        result.committed.push_back(v);
        ++result.moves;
        ++epoch;
        ++probe_epoch;  // reuse visit_epoch as a touched-node stamp below
        std::vector<NodeId> touched;
        for (std::int32_t fi : pending_cut[v]) {
            f_alive[fi] = 0;
            for (NodeId u : cut_nodes[fi]) {
                if (!alive[u]) continue;
                potential[u] -= fs[fi].cost;
                if (visit_epoch[u] != probe_epoch) {
                    visit_epoch[u] = probe_epoch;
                    touched.push_back(u);
                }
            }
        }
        for (NodeId u : touched) queue.push(u, potential[u]);
        if (options.audit_state) audit_objective(instance, sep, obj);
    }

    result.separator = sep;
    result.final_objective = obj;
    return result;
}

double insertion_delta(const MspInstance& instance, const Separator& s, NodeId v) {
    if (s.contains(v)) throw precondition_error("insertion_delta: node already in separator");
    const auto before = components(instance.graph(), s);
    Separator grown = s;
    grown.insert(v);
    const auto after = components(instance.graph(), grown);
    double delta = instance.node_costs()[v];
    for (const auto& f : instance.interactions()) {
        const bool sep_before = s.contains(f.u) || s.contains(f.v) || before[f.u] != before[f.v];
        if (sep_before) continue;
        const bool sep_after =
            grown.contains(f.u) || grown.contains(f.v) || after[f.u] != after[f.v];
        if (sep_after) delta += f.cost;
    }
    return delta;
}

double greedy_potential(const MspInstance& instance, const Separator& s, NodeId v) {
    if (!s.contains(v)) return insertion_delta(instance, s, v);
    Separator shrunk = s;
    shrunk.erase(v);
    return -insertion_delta(instance, shrunk, v);
}

}  // namespace msep
