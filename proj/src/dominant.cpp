#include "msep/dominant.hpp"

#include <algorithm>
#include <cmath>

#include "msep/errors.hpp"

namespace msep {

namespace {

std::vector<double> all_costs(const MspInstance& instance) {
    std::vector<double> costs = instance.node_costs();
    costs.reserve(costs.size() + instance.interactions().size());
    for (const auto& f : instance.interactions()) costs.push_back(f.cost);
    return costs;
}

bool dominant_magnitudes(std::vector<double> mags) {
    std::sort(mags.begin(), mags.end());
    // prefix[i] = sum of mags[0..i-1]; strictly-smaller sum found by
    // lower_bound over the sorted magnitudes
    std::vector<double> prefix(mags.size() + 1, 0.0);
    for (std::size_t i = 0; i < mags.size(); ++i) prefix[i + 1] = prefix[i] + mags[i];
    for (double m : mags) {
        const auto it = std::lower_bound(mags.begin(), mags.end(), m);
        const double smaller_sum = prefix[static_cast<std::size_t>(it - mags.begin())];
        if (!(m > smaller_sum)) return false;
    }
    return true;
}

}  // namespace

bool is_absolute_dominant(const std::vector<double>& costs) {
    std::vector<double> mags(costs.size());
    for (std::size_t i = 0; i < costs.size(); ++i) mags[i] = std::fabs(costs[i]);
    return dominant_magnitudes(std::move(mags));
}

bool is_absolute_dominant(const MspInstance& instance) {
    return is_absolute_dominant(all_costs(instance));
}

std::vector<double> costs_from_preference(const PreferenceSpec& spec) {
    const std::size_t n = spec.order.size();
    if (n > 52) throw precondition_error("costs_from_preference: order longer than 52 variables");
    if (spec.attractive.size() != n)
        throw precondition_error("costs_from_preference: attractive flags size mismatch");
    std::vector<char> seen(n, 0);
    for (std::int32_t g : spec.order) {
        if (g < 0 || static_cast<std::size_t>(g) >= n || seen[g])
            throw precondition_error("costs_from_preference: order is not a permutation");
        seen[g] = 1;
    }
    std::vector<double> costs(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t g = spec.order[i];
        const double magnitude = std::ldexp(1.0, static_cast<int>(n - 1 - i));  // 2^(n-i), 1-based i
        costs[g] = spec.attractive[g] ? magnitude : -magnitude;
    }
    return costs;
}

Separator solve_dominant(const MspInstance& instance, DominantStats* stats) {
    const NodeId n = instance.node_count();
    const std::int64_t m = instance.interaction_count();
    const auto costs = all_costs(instance);

    std::vector<double> nonzero;
    for (double c : costs)
        if (c != 0.0) nonzero.push_back(std::fabs(c));
    if (!dominant_magnitudes(std::move(nonzero)))
        throw precondition_error("solve_dominant: costs are not absolute dominant");

    bool all_nonneg = true;
    bool nonedge_nonpos = true;
    for (std::int64_t i = 0; i < m; ++i) {
        const double c = instance.interactions()[i].cost;
        if (c < 0.0) all_nonneg = false;
        if (!instance.interaction_is_edge(static_cast<std::int32_t>(i)) && c > 0.0)
            nonedge_nonpos = false;
    }
    // Regime fixed at entry; exactly one decider applies throughout.
    enum class Regime { ZeroStar, OneStar };
    Regime regime;
    if (all_nonneg)
        regime = Regime::ZeroStar;
    else if (nonedge_nonpos)
        regime = Regime::OneStar;
    else
        throw precondition_error(
            "solve_dominant: interactions have mixed signs outside the two tractable regimes");

    // Variables in descending |c|; ties by lowest id (only zero costs can
    // tie), so zeros land at the end.
    std::vector<std::int32_t> order(costs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int32_t>(i);
    std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return std::fabs(costs[a]) > std::fabs(costs[b]);
    });

    PartialAssignment x = PartialAssignment::all_star(instance);
    std::vector<char> final_one(costs.size(), 0);

    auto label_of = [&](std::int32_t g) -> Tri& {
        return g < n ? x.node_labels[g] : x.interaction_labels[g - n];
    };

    for (std::int32_t g : order) {
        const double c = costs[g];
        Tri tentative;
        if (c > 0.0)
            tentative = Tri::Zero;
        else if (c < 0.0)
            tentative = Tri::One;
        else if (regime == Regime::OneStar && g >= n &&
                 !instance.interaction_is_edge(g - static_cast<std::int32_t>(n)))
            tentative = Tri::One;  // keeps non-edge labels in {1,*}
        else
            tentative = Tri::Zero;

        label_of(g) = tentative;
        if (stats) ++stats->consistency_checks;
        const bool ok = regime == Regime::ZeroStar ? consistency_zero_star(instance, x)
                                                   : consistency_one_star(instance, x);
        if (ok) {
            final_one[g] = tentative == Tri::One;
        } else {
            // every consistent extension takes the opposite value
            label_of(g) = Tri::Star;
            final_one[g] = tentative == Tri::Zero;
        }
    }

    Separator s(n);
    for (NodeId v = 0; v < n; ++v)
        if (final_one[v]) s.insert(v);
    return s;
}

}  // namespace msep
