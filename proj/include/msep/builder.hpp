#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msep/instance.hpp"
#include "msep/volume.hpp"

namespace msep {

using Offset = std::array<int, 3>;

// Canonical offsets (first nonzero coordinate positive) whose Euclidean
// length rounds to `distance`.
std::vector<Offset> offsets_with_rounded_length(int distance);

// The fixed 16-offset collection used for cell instances: the three unit
// offsets plus thirteen long-range directions.
const std::vector<Offset>& cell_offsets();

// c_v = log((1-g)/g), natural log, with g clamped to [1e-6, 1-1e-6].
std::vector<double> node_costs(const GrayVolume& gray);
double node_cost(double gray_value);

// Voxels on the digital straight line from u to v: one unit step along
// the dominant axis per sample, the other coordinates rounded. Includes
// both end points; reversing the arguments reverses the list.
std::vector<Offset> digital_line(const Offset& u, const Offset& v);

struct FilamentInstanceOptions {
    int long_range_distance = 8;
    bool include_line_endpoints = true;  // endpoints enter the median
};

// Grid instance for filament volumes: every grid edge is an interaction
// with the median line cost, plus every canonical offset pair at rounded
// distance `long_range_distance` whose median line cost is strictly
// positive.
MspInstance build_filament_instance(const GrayVolume& gray,
                                    const FilamentInstanceOptions& options = {});

struct CellInstanceOptions {
    std::vector<Offset> offsets;             // empty = cell_offsets()
    bool include_line_endpoints = true;
};

// Grid instance for cell volumes: one interaction per in-bounds (voxel,
// offset) pair costing the minimum node cost along the digital line.
MspInstance build_cell_instance(const GrayVolume& gray, const CellInstanceOptions& options = {});

// Every node and interaction cost increased by b (nodes only when
// nodes_only is set); the input instance is left untouched.
MspInstance apply_bias(const MspInstance& instance, double b, bool nodes_only = false);

}  // namespace msep
