#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msep/volume.hpp"

namespace msep {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

// Noise model: two normal distributions blended by a distance weight.
// Means and deviations interpolate linearly between their start and end
// values with the noise level t.
struct NoiseParams {
    double t = 0.0;
    double mu1_start = 0.0, mu1_end = 0.0;
    double mu2_start = 0.0, mu2_end = 0.0;
    double sigma1_start = 0.0, sigma1_end = 0.0;
    double sigma2_start = 0.0, sigma2_end = 0.0;
    double w_max = 0.9;
    double r = 1.0;  // width scale of the weight function, in distance-field units

    double mu1() const { return (1.0 - t) * mu1_start + t * mu1_end; }
    double mu2() const { return (1.0 - t) * mu2_start + t * mu2_end; }
    double sigma1() const { return (1.0 - t) * sigma1_start + t * sigma1_end; }
    double sigma2() const { return (1.0 - t) * sigma2_start + t * sigma2_end; }
};

// Parameter presets: filaments are dark structures on bright void, cells
// are dark interiors behind bright membranes.
NoiseParams filament_noise(double t, int m);
NoiseParams cell_noise(double t);

// Blend weight: w(0) = w_max, w(r) = 1/2, monotonically decreasing to 0.
double weight(double d, double r, double w_max);

// Cubic spline through four control points; the end points double as
// tangent handles (Catmull-Rom with clamped ends), so the curve runs
// from control[0] to control[3].
struct Spline {
    std::array<Vec3, 4> control;
};

// Points sampled densely along the spline, spaced at most `step` apart
// in parameter-proportional arc length.
std::vector<Vec3> sample_spline(const Spline& spline, double step);

struct FilamentParams {
    int m = 64;
    int n_splines = 10;
    double d_min = 10.0 / 64.0;  // minimum pairwise spline distance, unit-cube units
    double r = 0.75 / 64.0;      // filament radius, unit-cube units
    int max_attempts = 10000;
    // distances farther than this many voxel widths from any spline are
    // stored as +infinity (the blend weight there is < 1e-5)
    double stamp_radius_voxels = 8.0;
};

struct FilamentVolume {
    BinaryVolume binary;
    DistanceField distance;
    std::vector<Spline> splines;
};

// Draws n cubic splines crossing the unit cube by rejection sampling
// until all pairwise distances are >= d_min, then labels 0 every voxel
// within distance r of a spline plus the spline's own voxel trace (the
// radius rule alone leaves sub-voxel gaps along diagonal stretches,
// which would break filaments into fragments).
FilamentVolume synth_filaments(const FilamentParams& params, std::uint64_t seed);

// Voxelization shared with tests: distance field to a fixed set of
// splines on an m^3 grid with voxel centers at (i+1/2)/m.
DistanceField spline_distance_field(const std::vector<Spline>& splines, int m,
                                    double sample_step, double stamp_radius_voxels);

// 6-connected voxel trace of a spline (supercover walk over the dense
// samples); out-of-volume stretches are omitted.
std::vector<std::int64_t> spline_voxel_trace(const Spline& spline, int m, double sample_step);

struct CellParams {
    int m = 64;
    int n_seeds = 16;
    double d_min = 8.0;  // voxel units
    double r = 0.75;     // voxel units
    int max_attempts = 100000;
};

struct CellVolume {
    BinaryVolume binary;
    DistanceField distance;  // to the membrane skeleton, voxel units
    std::vector<std::int32_t> cell_labels;  // final per-voxel label, 0 = membrane
};

// Randomized region growing from pairwise non-adjacent seeds, spherical
// erosion, deterministic BFS regrowth, and membrane dilation.
CellVolume synth_cells(const CellParams& params, std::uint64_t seed);

// Per voxel: g = w(d) g1 + (1-w(d)) g2 with g1 ~ N(mu1, sigma1) and
// g2 ~ N(mu2, sigma2), clipped to [0,1]. Noise streams are derived per
// voxel, so the output is independent of evaluation order.
GrayVolume gray_from_distance(const DistanceField& field, const NoiseParams& params,
                              std::uint64_t seed);

}  // namespace msep
