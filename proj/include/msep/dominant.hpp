#pragma once

#include <cstdint>
#include <vector>

#include "msep/instance.hpp"

namespace msep {

// Variables of an instance are indexed 0..|V|-1 for nodes followed by
// |V|..|V|+|F|-1 for interactions, in instance order.

// Strict priority order over V u F plus an attractive/repulsive split.
struct PreferenceSpec {
    std::vector<std::int32_t> order;  // permutation of variable ids, most important first
    std::vector<char> attractive;     // per variable id; complement is repulsive
};

// True iff |c_g| strictly exceeds the sum of all strictly smaller
// magnitudes, for every variable. A zero cost fails the inequality
// (0 > 0 is false), so any instance with a zero-cost variable is not
// absolute dominant under this exact definition.
bool is_absolute_dominant(const MspInstance& instance);
bool is_absolute_dominant(const std::vector<double>& costs);

// c_{g_i} = +-2^(n-i) by attractive/repulsive membership; the result is
// absolute dominant. Requires n <= 52 so all values are exact doubles.
std::vector<double> costs_from_preference(const PreferenceSpec& spec);

struct DominantStats {
    std::int64_t consistency_checks = 0;
};

// Exact solver for absolute dominant costs in the two tractable regimes:
// all interaction costs >= 0, or all non-edge interaction costs <= 0.
// Zero-cost variables are tolerated (they never change the objective):
// the nonzero costs must be absolute dominant on their own, zeros are
// processed last.
Separator solve_dominant(const MspInstance& instance, DominantStats* stats = nullptr);

}  // namespace msep
