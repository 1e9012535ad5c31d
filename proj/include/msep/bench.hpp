#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace msep {

struct BenchRow {
    int m = 0;
    std::int64_t voxels = 0;
    double synth_ms = 0.0;
    double build_ms = 0.0;
    double solve_ms = 0.0;
    double per_voxel_us = 0.0;  // solver time per voxel
    double objective = 0.0;
};

// Synthesizes one volume per size, builds the matching instance, solves
// single-threaded, and reports wall-clock times. kind: "filaments" (gsg)
// or "cells" (gss); algo may override the default pairing.
std::vector<BenchRow> run_bench(const std::string& kind, const std::vector<int>& sizes, double t,
                                const std::string& algo, std::uint64_t seed);

}  // namespace msep
