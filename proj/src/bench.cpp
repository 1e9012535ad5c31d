#include "msep/bench.hpp"

#include <chrono>

#include "msep/builder.hpp"
#include "msep/errors.hpp"
#include "msep/local_search.hpp"
#include "msep/synth.hpp"

namespace msep {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

std::vector<BenchRow> run_bench(const std::string& kind, const std::vector<int>& sizes, double t,
                                const std::string& algo, std::uint64_t seed) {
    if (kind != "filaments" && kind != "cells")
        throw usage_error("bench: kind must be filaments or cells");
    const std::string solver = algo.empty() ? (kind == "filaments" ? "gsg" : "gss") : algo;
    if (solver != "gss" && solver != "gsg") throw usage_error("bench: algo must be gss or gsg");

    std::vector<BenchRow> rows;
    for (int m : sizes) {
        BenchRow row;
        row.m = m;
        row.voxels = static_cast<std::int64_t>(m) * m * m;

        auto start = std::chrono::steady_clock::now();
        GrayVolume gray;
        if (kind == "filaments") {
            FilamentParams params;
            params.m = m;
            params.d_min = 10.0 / m;
            params.r = 0.75 / m;
            // spline count scales with the cross-section capacity so small
            // volumes stay packable under the fixed 10-voxel separation
            params.n_splines = std::max(2, (m * m) / 400);
            const auto volume = synth_filaments(params, seed);
            gray = gray_from_distance(volume.distance, filament_noise(t, m), seed);
        } else {
            CellParams params;
            params.m = m;
            // seed count scales with volume so cell size stays comparable
            params.n_seeds = std::max(2, static_cast<int>(row.voxels / 16384));
            const auto volume = synth_cells(params, seed);
            gray = gray_from_distance(volume.distance, cell_noise(t), seed);
        }
        row.synth_ms = ms_since(start);

        start = std::chrono::steady_clock::now();
        const MspInstance instance = kind == "filaments" ? build_filament_instance(gray)
                                                         : build_cell_instance(gray);
        row.build_ms = ms_since(start);

        start = std::chrono::steady_clock::now();
        const LocalSearchResult result = solver == "gss" ? gss(instance) : gsg(instance);
        row.solve_ms = ms_since(start);
        row.per_voxel_us = row.solve_ms * 1000.0 / static_cast<double>(row.voxels);
        row.objective = result.final_objective;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace msep
