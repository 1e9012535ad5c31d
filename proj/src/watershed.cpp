#include "msep/watershed.hpp"

#include <limits>
#include <queue>
#include <tuple>

#include "msep/errors.hpp"

namespace msep {

namespace {

struct Flood {
    const GrayVolume& gray;
    std::int64_t n;
    std::vector<std::int32_t> label;  // 0 unlabeled, -1 line voxel, else seed label

    explicit Flood(const GrayVolume& g) : gray(g), n(g.voxel_count()), label(n, 0) {}

    template <class F>
    void for_neighbors(std::int64_t id, F&& f) const {
        const int x = static_cast<int>(id % gray.nx);
        const int y = static_cast<int>((id / gray.nx) % gray.ny);
        const int z = static_cast<int>(id / (static_cast<std::int64_t>(gray.nx) * gray.ny));
        if (x > 0) f(id - 1);
        if (x + 1 < gray.nx) f(id + 1);
        if (y > 0) f(id - gray.nx);
        if (y + 1 < gray.ny) f(id + gray.nx);
        if (z > 0) f(id - static_cast<std::int64_t>(gray.nx) * gray.ny);
        if (z + 1 < gray.nz) f(id + static_cast<std::int64_t>(gray.nx) * gray.ny);
    }

    std::vector<NodeId> seed(double theta_start) {
        std::vector<NodeId> seeds;
        std::int32_t next = 0;
        std::vector<std::int64_t> queue;
        for (std::int64_t start = 0; start < n; ++start) {
            if (label[start] != 0 || !(gray.values[start] < theta_start)) continue;
            ++next;
            label[start] = next;
            queue.assign(1, start);
            seeds.push_back(static_cast<NodeId>(start));
            for (std::size_t i = 0; i < queue.size(); ++i) {
                for_neighbors(queue[i], [&](std::int64_t w) {
                    if (label[w] == 0 && gray.values[w] < theta_start) {
                        label[w] = next;
                        queue.push_back(w);
                        seeds.push_back(static_cast<NodeId>(w));
                    }
                });
            }
        }
        return seeds;
    }

    // Runs the priority flood up to theta_end; records every pop outcome
    // when a record is given. Ties in gray value break by voxel id.
    void run(double theta_end, FloodRecord* record) {
        using Entry = std::pair<double, std::int64_t>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
        auto push_frontier = [&](std::int64_t v) {
            for_neighbors(v, [&](std::int64_t w) {
                if (label[w] == 0) heap.emplace(gray.values[w], w);
            });
        };
        for (std::int64_t v = 0; v < n; ++v)
            if (label[v] > 0) push_frontier(v);

        while (!heap.empty()) {
            const auto [g, v] = heap.top();
            heap.pop();
            if (label[v] != 0) continue;  // stale entry
            if (!(g < theta_end)) break;  // flood terminates
            std::int32_t first = 0;
            bool multi = false;
            for_neighbors(v, [&](std::int64_t w) {
                const std::int32_t lw = label[w];
                if (lw <= 0) return;
                if (first == 0)
                    first = lw;
                else if (lw != first)
                    multi = true;
            });
            if (first == 0) continue;
            if (multi) {
                label[v] = -1;  // watershed line
                if (record) record->events.push_back({static_cast<NodeId>(v), g, false});
            } else {
                label[v] = first;
                if (record) record->events.push_back({static_cast<NodeId>(v), g, true});
                push_frontier(v);
            }
        }
    }

    Separator separator() const {
        Separator s(static_cast<NodeId>(n));
        for (std::int64_t v = 0; v < n; ++v)
            if (label[v] <= 0) s.insert(static_cast<NodeId>(v));
        return s;
    }
};

}  // namespace

Separator watershed(const GrayVolume& gray, const WatershedParams& params) {
    if (params.theta_start > params.theta_end)
        throw precondition_error("watershed: theta_start must be <= theta_end");
    Flood flood(gray);
    flood.seed(params.theta_start);
    flood.run(params.theta_end, nullptr);
    return flood.separator();
}

FloodRecord flood_record(const GrayVolume& gray, double theta_start) {
    Flood flood(gray);
    FloodRecord record;
    record.voxel_count = gray.voxel_count();
    record.seed_voxels = flood.seed(theta_start);
    flood.run(std::numeric_limits<double>::infinity(), &record);
    return record;
}

Separator separator_at(const FloodRecord& record, double theta_end) {
    std::vector<char> non_separator(record.voxel_count, 0);
    for (NodeId v : record.seed_voxels) non_separator[v] = 1;
    for (const auto& e : record.events) {
        if (!(e.gray < theta_end)) break;
        if (e.assigned) non_separator[e.voxel] = 1;
    }
    Separator s(static_cast<NodeId>(record.voxel_count));
    for (std::int64_t v = 0; v < record.voxel_count; ++v)
        if (!non_separator[v]) s.insert(static_cast<NodeId>(v));
    return s;
}

}  // namespace msep
