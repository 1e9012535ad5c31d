#include "msep/builder.hpp"

#include <algorithm>
#include <cmath>

#include "msep/errors.hpp"

namespace msep {

std::vector<Offset> offsets_with_rounded_length(int distance) {
    if (distance < 1) throw precondition_error("offsets: distance must be >= 1");
    // round(|d|) == distance  <=>  (2 distance - 1)^2 < 4 |d|^2 <= (2 distance + 1)^2 - 1
    const std::int64_t lo4 = static_cast<std::int64_t>(2 * distance - 1) * (2 * distance - 1) + 1;
    const std::int64_t hi4 = static_cast<std::int64_t>(2 * distance + 1) * (2 * distance + 1) - 1;
    std::vector<Offset> out;
    const int reach = distance + 1;
    for (int dx = -reach; dx <= reach; ++dx)
        for (int dy = -reach; dy <= reach; ++dy)
            for (int dz = -reach; dz <= reach; ++dz) {
                const std::int64_t sq = static_cast<std::int64_t>(dx) * dx +
                                        static_cast<std::int64_t>(dy) * dy +
                                        static_cast<std::int64_t>(dz) * dz;
                if (4 * sq < lo4 || 4 * sq > hi4) continue;
                // canonical half space: first nonzero coordinate positive
                if (dx < 0 || (dx == 0 && dy < 0) || (dx == 0 && dy == 0 && dz < 0)) continue;
                out.push_back({dx, dy, dz});
            }
    return out;
}

const std::vector<Offset>& cell_offsets() {
    static const std::vector<Offset> offsets = {
        {1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {5, 0, 0},   {0, 5, 0},   {0, 0, 5},
        {0, 4, 4},  {0, 4, -4}, {4, 4, 0},  {4, -4, 0},  {4, 0, 4},   {4, 0, -4},
        {3, 3, 3},  {3, 3, -3}, {3, -3, 3}, {3, -3, -3},
    };
    return offsets;
}

double node_cost(double g) {
    const double clamped = std::clamp(g, 1e-6, 1.0 - 1e-6);
    return std::log((1.0 - clamped) / clamped);
}

std::vector<double> node_costs(const GrayVolume& gray) {
    std::vector<double> costs(gray.values.size());
    for (std::size_t i = 0; i < costs.size(); ++i) costs[i] = node_cost(gray.values[i]);
    return costs;
}

std::vector<Offset> digital_line(const Offset& u, const Offset& v) {
    if (u == v) throw precondition_error("digital_line: endpoints coincide");
    const int dx = v[0] - u[0], dy = v[1] - u[1], dz = v[2] - u[2];
    const int adx = std::abs(dx), ady = std::abs(dy), adz = std::abs(dz);
    // dominant axis; ties keep the lowest axis index
    int dominant;
    if (adx >= ady && adx >= adz)
        dominant = 0;
    else if (ady >= adz)
        dominant = 1;
    else
        dominant = 2;
    const int steps = dominant == 0 ? adx : dominant == 1 ? ady : adz;
    std::vector<Offset> line;
    line.reserve(steps + 1);
    const double delta[3] = {static_cast<double>(dx), static_cast<double>(dy),
                             static_cast<double>(dz)};
    for (int s = 0; s <= steps; ++s) {
        Offset p;
        for (int a = 0; a < 3; ++a) {
            if (a == dominant) {
                const int sign = delta[a] > 0 ? 1 : -1;
                p[a] = u[a] + sign * s;
            } else {
                p[a] = static_cast<int>(std::floor(u[a] + delta[a] * s / steps + 0.5));
            }
        }
        line.push_back(p);
    }
    return line;
}

namespace {

struct LineCost {
    const GrayVolume& gray;
    const std::vector<double>& costs;
    bool include_endpoints;
    mutable std::vector<double> buffer;

    void collect(const Offset& a, const Offset& b) const {
        buffer.clear();
        const auto line = digital_line(a, b);
        const std::size_t begin = include_endpoints ? 0 : 1;
        const std::size_t end = include_endpoints ? line.size() : line.size() - 1;
        for (std::size_t i = begin; i < end; ++i) {
            const auto& p = line[i];
            buffer.push_back(costs[gray.index(p[0], p[1], p[2])]);
        }
    }

    double median(const Offset& a, const Offset& b) const {
        collect(a, b);
        const std::size_t n = buffer.size();
        if (n == 0) return 0.0;
        std::sort(buffer.begin(), buffer.end());
        // even length: mean of the two central order statistics
        return n % 2 ? buffer[n / 2] : 0.5 * (buffer[n / 2 - 1] + buffer[n / 2]);
    }

    double minimum(const Offset& a, const Offset& b) const {
        collect(a, b);
        return buffer.empty() ? 0.0 : *std::min_element(buffer.begin(), buffer.end());
    }
};

}  // namespace

MspInstance build_filament_instance(const GrayVolume& gray, const FilamentInstanceOptions& options) {
    Grid3 grid = grid3(gray.nx, gray.ny, gray.nz);
    auto costs = node_costs(gray);
    const LineCost line{gray, costs, options.include_line_endpoints, {}};

    std::vector<Interaction> interactions;
    interactions.reserve(grid.graph.edges().size());
    for (const auto& [u, v] : grid.graph.edges()) {
        int ux, uy, uz, vx, vy, vz;
        grid.coord(u, ux, uy, uz);
        grid.coord(v, vx, vy, vz);
        interactions.push_back({u, v, line.median({ux, uy, uz}, {vx, vy, vz})});
    }

    const auto offsets = offsets_with_rounded_length(options.long_range_distance);
    for (int z = 0; z < gray.nz; ++z)
        for (int y = 0; y < gray.ny; ++y)
            for (int x = 0; x < gray.nx; ++x)
                for (const auto& d : offsets) {
                    const int x2 = x + d[0], y2 = y + d[1], z2 = z + d[2];
                    if (x2 < 0 || x2 >= gray.nx || y2 < 0 || y2 >= gray.ny || z2 < 0 ||
                        z2 >= gray.nz)
                        continue;
                    const double c = line.median({x, y, z}, {x2, y2, z2});
                    if (c > 0.0)
                        interactions.push_back({grid.index(x, y, z), grid.index(x2, y2, z2), c});
                }

    return MspInstance(std::move(grid.graph), std::move(interactions), std::move(costs));
}

MspInstance build_cell_instance(const GrayVolume& gray, const CellInstanceOptions& options) {
    Grid3 grid = grid3(gray.nx, gray.ny, gray.nz);
    auto costs = node_costs(gray);
    const LineCost line{gray, costs, options.include_line_endpoints, {}};
    const auto& offsets = options.offsets.empty() ? cell_offsets() : options.offsets;

    std::vector<Interaction> interactions;
    for (int z = 0; z < gray.nz; ++z)
        for (int y = 0; y < gray.ny; ++y)
            for (int x = 0; x < gray.nx; ++x)
                for (const auto& d : offsets) {
                    const int x2 = x + d[0], y2 = y + d[1], z2 = z + d[2];
                    if (x2 < 0 || x2 >= gray.nx || y2 < 0 || y2 >= gray.ny || z2 < 0 ||
                        z2 >= gray.nz)
                        continue;
                    interactions.push_back({grid.index(x, y, z), grid.index(x2, y2, z2),
                                            line.minimum({x, y, z}, {x2, y2, z2})});
                }

    return MspInstance(std::move(grid.graph), std::move(interactions), std::move(costs));
}

MspInstance apply_bias(const MspInstance& instance, double b, bool nodes_only) {
    auto costs = instance.node_costs();
    for (double& c : costs) c += b;
    auto interactions = instance.interactions();
    if (!nodes_only)
        for (auto& f : interactions) f.cost += b;
    return MspInstance(instance.graph(), std::move(interactions), std::move(costs));
}

}  // namespace msep
