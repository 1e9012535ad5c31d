#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "msep/graph.hpp"

namespace msep {

// Scalar fields over an m x n x k voxel grid, row-major with x fastest
// (same linearization as Grid3).

struct GrayVolume {
    int nx = 0, ny = 0, nz = 0;
    std::vector<double> values;  // in [0,1]

    std::int64_t voxel_count() const { return static_cast<std::int64_t>(nx) * ny * nz; }
    std::int64_t index(int x, int y, int z) const {
        return x + static_cast<std::int64_t>(nx) * (y + static_cast<std::int64_t>(ny) * z);
    }
    double at(int x, int y, int z) const { return values[index(x, y, z)]; }
};

// labels: 1 = separator / void / membrane, 0 = filament or cell interior
struct BinaryVolume {
    int nx = 0, ny = 0, nz = 0;
    std::vector<std::uint8_t> labels;

    std::int64_t voxel_count() const { return static_cast<std::int64_t>(nx) * ny * nz; }
    std::int64_t index(int x, int y, int z) const {
        return x + static_cast<std::int64_t>(nx) * (y + static_cast<std::int64_t>(ny) * z);
    }

    Separator separator() const;  // the label-1 node set on the matching grid
};

// Per-voxel distance to the nearest structure; voxels with no structure
// in range hold +infinity.
struct DistanceField {
    int nx = 0, ny = 0, nz = 0;
    std::vector<double> distance;

    std::int64_t voxel_count() const { return static_cast<std::int64_t>(nx) * ny * nz; }
};

inline constexpr double kNoStructure = std::numeric_limits<double>::infinity();

// Exact Euclidean distance transform (Felzenszwalb-Huttenlocher): per
// voxel, the distance in voxel units to the nearest source voxel. All
// distances are +infinity when there is no source.
std::vector<double> euclidean_distance_transform(const std::vector<char>& source, int nx, int ny,
                                                 int nz);

}  // namespace msep
