#pragma once

#include <cstdint>
#include <vector>

#include "msep/graph.hpp"
#include "msep/volume.hpp"

namespace msep {

struct WatershedParams {
    double theta_start = 0.0;
    double theta_end = 0.0;  // must be >= theta_start
};

// Seeded watershed: seeds are the connected components of {g < theta_start};
// flooding repeatedly assigns the cheapest voxel adjacent to exactly one
// label while its gray value is below theta_end. Voxels touching two or
// more labels when popped, and voxels never assigned, form the separator.
Separator watershed(const GrayVolume& gray, const WatershedParams& params);

// One full flood per theta_start. The pop sequence of a flood with a
// smaller theta_end is a prefix of the recorded one, so any theta_end
// separator can be replayed in O(V). Used by parameter sweeps.
struct FloodRecord {
    std::int64_t voxel_count = 0;
    std::vector<NodeId> seed_voxels;
    struct Event {
        NodeId voxel;
        double gray;
        bool assigned;  // false: watershed line voxel
    };
    std::vector<Event> events;
};

FloodRecord flood_record(const GrayVolume& gray, double theta_start);

Separator separator_at(const FloodRecord& record, double theta_end);

}  // namespace msep
