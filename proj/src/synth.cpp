#include "msep/synth.hpp"

#include <algorithm>
#include <cmath>

#include "msep/errors.hpp"
#include "msep/rng.hpp"

namespace msep {

NoiseParams filament_noise(double t, int m) {
    if (t < 0.0 || t > 1.0) throw precondition_error("noise level t must be in [0,1]");
    NoiseParams p;
    p.t = t;
    p.mu1_start = 0.3;
    p.mu1_end = 0.38;
    p.mu2_start = 0.7;
    p.mu2_end = 0.62;
    p.sigma1_start = p.sigma2_start = 0.05;
    p.sigma1_end = p.sigma2_end = 0.1;
    p.w_max = 0.9;
    p.r = 0.75 / m;
    return p;
}

NoiseParams cell_noise(double t) {
    if (t < 0.0 || t > 1.0) throw precondition_error("noise level t must be in [0,1]");
    NoiseParams p;
    p.t = t;
    p.mu1_start = 0.7;
    p.mu1_end = 0.55;
    p.mu2_start = 0.3;
    p.mu2_end = 0.45;
    p.sigma1_start = p.sigma2_start = 0.05;
    p.sigma1_end = p.sigma2_end = 0.1;
    p.w_max = 0.9;
    p.r = 0.75;
    return p;
}

double weight(double d, double r, double w_max) {
    if (d < 0.0 || r <= 0.0 || w_max <= 0.5 || w_max >= 1.0)
        throw precondition_error("weight: need d >= 0, r > 0, w_max in (1/2, 1)");
    const double base = w_max / (1.0 - w_max);
    const double e = std::pow(base, d / r - 1.0);
    return 1.0 / (1.0 + e);
}

namespace {

Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

double norm2(Vec3 a) { return a.x * a.x + a.y * a.y + a.z * a.z; }
double dist(Vec3 a, Vec3 b) { return std::sqrt(norm2(a - b)); }

Vec3 catmull_rom(Vec3 p0, Vec3 p1, Vec3 p2, Vec3 p3, double t) {
    const double t2 = t * t, t3 = t2 * t;
    return 0.5 * ((2.0 * p1) + t * (p2 - p0) +
                  t2 * ((2.0 * p0) - (5.0 * p1) + (4.0 * p2) - p3) +
                  t3 * ((3.0 * p1) - p0 - (3.0 * p2) + p3));
}

}  // namespace

std::vector<Vec3> sample_spline(const Spline& s, double step) {
    if (step <= 0.0) throw precondition_error("sample_spline: step must be positive");
    std::vector<Vec3> points;
    const auto& c = s.control;
    // clamped ends: duplicate the first and last control point
    const std::array<Vec3, 6> p = {c[0], c[0], c[1], c[2], c[3], c[3]};
    for (int seg = 0; seg < 3; ++seg) {
        const Vec3 a = p[seg], b = p[seg + 1], d = p[seg + 2], e = p[seg + 3];
        const double chord = dist(b, d);
        const int samples = std::max(1, static_cast<int>(std::ceil(chord / step)));
        for (int i = 0; i < samples; ++i)
            points.push_back(catmull_rom(a, b, d, e, static_cast<double>(i) / samples));
    }
    points.push_back(s.control[3]);
    return points;
}

namespace {

// Distance check restricted to the neighborhood of the unit cube: the
// separation constraint is about filaments inside the image, not about
// tangent handles far outside it. Early exit on the first violation.
bool polylines_too_close(const std::vector<Vec3>& a, const std::vector<Vec3>& b, double d_min) {
    constexpr double lo = -0.1, hi = 1.1;
    auto near_cube = [&](const Vec3& p) {
        return p.x >= lo && p.x <= hi && p.y >= lo && p.y <= hi && p.z >= lo && p.z <= hi;
    };
    const double d2 = d_min * d_min;
    for (const Vec3& p : a) {
        if (!near_cube(p)) continue;
        for (const Vec3& q : b)
            if (near_cube(q) && norm2(p - q) < d2) return true;
    }
    return false;
}

}  // namespace

DistanceField spline_distance_field(const std::vector<Spline>& splines, int m, double sample_step,
                                    double stamp_radius_voxels) {
    DistanceField field;
    field.nx = field.ny = field.nz = m;
    field.distance.assign(static_cast<std::int64_t>(m) * m * m, kNoStructure);
    const double voxel = 1.0 / m;
    const double radius = stamp_radius_voxels * voxel;
    auto center = [&](int i) { return (i + 0.5) * voxel; };
    for (const auto& s : splines) {
        for (const Vec3& p : sample_spline(s, sample_step)) {
            const int x0 = std::max(0, static_cast<int>(std::floor((p.x - radius) * m - 0.5)));
            const int x1 = std::min(m - 1, static_cast<int>(std::ceil((p.x + radius) * m - 0.5)));
            const int y0 = std::max(0, static_cast<int>(std::floor((p.y - radius) * m - 0.5)));
            const int y1 = std::min(m - 1, static_cast<int>(std::ceil((p.y + radius) * m - 0.5)));
            const int z0 = std::max(0, static_cast<int>(std::floor((p.z - radius) * m - 0.5)));
            const int z1 = std::min(m - 1, static_cast<int>(std::ceil((p.z + radius) * m - 0.5)));
            for (int z = z0; z <= z1; ++z)
                for (int y = y0; y <= y1; ++y)
                    for (int x = x0; x <= x1; ++x) {
                        const Vec3 c{center(x), center(y), center(z)};
                        const double d = dist(c, p);
                        auto& slot = field.distance[x + static_cast<std::int64_t>(m) * (y + static_cast<std::int64_t>(m) * z)];
                        if (d < slot) slot = d;
                    }
        }
    }
    return field;
}

std::vector<std::int64_t> spline_voxel_trace(const Spline& spline, int m, double sample_step) {
    std::vector<std::int64_t> trace;
    auto voxel_of = [&](const Vec3& p, int coord[3]) {
        coord[0] = static_cast<int>(std::floor(p.x * m));
        coord[1] = static_cast<int>(std::floor(p.y * m));
        coord[2] = static_cast<int>(std::floor(p.z * m));
        return coord[0] >= 0 && coord[0] < m && coord[1] >= 0 && coord[1] < m && coord[2] >= 0 &&
               coord[2] < m;
    };
    auto push = [&](const int c[3]) {
        trace.push_back(c[0] + static_cast<std::int64_t>(m) * (c[1] + static_cast<std::int64_t>(m) * c[2]));
    };
    int prev[3];
    bool have_prev = false;
    for (const Vec3& p : sample_spline(spline, sample_step)) {
        int cur[3];
        if (!voxel_of(p, cur)) {
            have_prev = false;
            continue;
        }
        if (!have_prev) {
            push(cur);
        } else if (prev[0] != cur[0] || prev[1] != cur[1] || prev[2] != cur[2]) {
            // 6-connect the step: advance one axis at a time
            int walk[3] = {prev[0], prev[1], prev[2]};
            for (int axis = 0; axis < 3; ++axis)
                while (walk[axis] != cur[axis]) {
                    walk[axis] += cur[axis] > walk[axis] ? 1 : -1;
                    push(walk);
                }
        }
        prev[0] = cur[0];
        prev[1] = cur[1];
        prev[2] = cur[2];
        have_prev = true;
    }
    return trace;
}

FilamentVolume synth_filaments(const FilamentParams& params, std::uint64_t seed) {
    if (params.m < 1) throw precondition_error("synth_filaments: m must be >= 1");
    if (params.n_splines < 0) throw precondition_error("synth_filaments: negative spline count");

    const double step = params.r / 4.0;
    std::vector<Spline> accepted;
    std::vector<std::vector<Vec3>> accepted_samples;
    RngStream rng(seed, /*stream=*/1);

    int attempts = 0;
    while (static_cast<int>(accepted.size()) < params.n_splines) {
        if (++attempts > params.max_attempts)
            throw precondition_error("synth_filaments: rejection budget exhausted (" +
                                     std::to_string(params.max_attempts) + " attempts)");
        // end points on opposite faces of the inflated cube; interior
        // points perturb the chord thirds, which keeps the curves gentle
        // arcs and the rejection rate workable at the default separation
        const int axis = static_cast<int>(rng.below(3));
        auto face_point = [&](double fixed) {
            Vec3 p{rng.uniform(-0.2, 1.2), rng.uniform(-0.2, 1.2), rng.uniform(-0.2, 1.2)};
            (axis == 0 ? p.x : axis == 1 ? p.y : p.z) = fixed;
            return p;
        };
        Spline candidate;
        candidate.control[0] = face_point(-0.2);
        candidate.control[3] = face_point(1.2);
        auto chord_point = [&](double t) {
            const Vec3 a = candidate.control[0], b = candidate.control[3];
            Vec3 p = a + t * (b - a);
            p.x += rng.uniform(-0.2, 0.2);
            p.y += rng.uniform(-0.2, 0.2);
            p.z += rng.uniform(-0.2, 0.2);
            return p;
        };
        candidate.control[1] = chord_point(1.0 / 3.0);
        candidate.control[2] = chord_point(2.0 / 3.0);

        auto samples = sample_spline(candidate, step);
        // the curve must genuinely intersect the unit cube
        std::int64_t inside = 0;
        for (const Vec3& p : samples)
            inside += p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0 && p.z >= 0.0 && p.z <= 1.0;
        if (static_cast<double>(inside) * step < 0.1) continue;
        bool ok = true;
        for (const auto& other : accepted_samples)
            if (polylines_too_close(samples, other, params.d_min)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        accepted.push_back(candidate);
        accepted_samples.push_back(std::move(samples));
    }

    FilamentVolume out;
    out.splines = accepted;
    out.distance = spline_distance_field(accepted, params.m, step, params.stamp_radius_voxels);
    out.binary.nx = out.binary.ny = out.binary.nz = params.m;
    out.binary.labels.resize(out.distance.distance.size());
    for (std::size_t i = 0; i < out.binary.labels.size(); ++i)
        out.binary.labels[i] = out.distance.distance[i] <= params.r ? 0 : 1;
    // keep every filament 6-connected through diagonal stretches
    for (const auto& s : accepted)
        for (std::int64_t v : spline_voxel_trace(s, params.m, step)) out.binary.labels[v] = 0;
    return out;
}

namespace {

struct GridShape {
    int m;
    std::int64_t n;
    std::int64_t index(int x, int y, int z) const {
        return x + static_cast<std::int64_t>(m) * (y + static_cast<std::int64_t>(m) * z);
    }
    void coord(std::int64_t id, int& x, int& y, int& z) const {
        x = static_cast<int>(id % m);
        y = static_cast<int>((id / m) % m);
        z = static_cast<int>(id / (static_cast<std::int64_t>(m) * m));
    }
    template <class F>
    void for_neighbors(std::int64_t id, F&& f) const {
        int x, y, z;
        coord(id, x, y, z);
        if (x > 0) f(id - 1);
        if (x + 1 < m) f(id + 1);
        if (y > 0) f(id - m);
        if (y + 1 < m) f(id + m);
        if (z > 0) f(id - static_cast<std::int64_t>(m) * m);
        if (z + 1 < m) f(id + static_cast<std::int64_t>(m) * m);
    }
};

// dynamic uniform-sampling set with O(1) insert/remove
class SampleSet {
public:
    explicit SampleSet(std::int64_t universe) : position_(universe, -1) {}
    bool contains(std::int64_t v) const { return position_[v] >= 0; }
    std::int64_t size() const { return static_cast<std::int64_t>(items_.size()); }
    void insert(std::int64_t v) {
        if (position_[v] >= 0) return;
        position_[v] = static_cast<std::int64_t>(items_.size());
        items_.push_back(v);
    }
    void remove(std::int64_t v) {
        const std::int64_t pos = position_[v];
        if (pos < 0) return;
        const std::int64_t last = items_.back();
        items_[pos] = last;
        position_[last] = pos;
        items_.pop_back();
        position_[v] = -1;
    }
    std::int64_t at(std::int64_t i) const { return items_[i]; }

private:
    std::vector<std::int64_t> items_;
    std::vector<std::int64_t> position_;
};

}  // namespace

CellVolume synth_cells(const CellParams& params, std::uint64_t seed) {
    if (params.m < 1) throw precondition_error("synth_cells: m must be >= 1");
    if (params.n_seeds < 1) throw precondition_error("synth_cells: need at least one seed");
    const GridShape grid{params.m, static_cast<std::int64_t>(params.m) * params.m * params.m};

    std::vector<std::int32_t> label(grid.n, 0);

    // 1. pairwise non-adjacent random seeds labeled 1..n
    RngStream seed_rng(seed, /*stream=*/2);
    {
        int placed = 0;
        int attempts = 0;
        while (placed < params.n_seeds) {
            if (++attempts > params.max_attempts)
                throw precondition_error("synth_cells: could not place " +
                                         std::to_string(params.n_seeds) +
                                         " pairwise non-adjacent seeds");
            const std::int64_t v = static_cast<std::int64_t>(seed_rng.below(grid.n));
            if (label[v]) continue;
            bool adjacent = false;
            grid.for_neighbors(v, [&](std::int64_t w) { adjacent = adjacent || label[w] != 0; });
            if (adjacent) continue;
            label[v] = ++placed;
        }
    }

    // 2. randomized growth: a voxel is eligible while its nonzero
    // neighbor labels are a single label
    {
        std::vector<std::int32_t> unique_neighbor(grid.n, 0);  // 0 none, -1 blocked, else the label
        SampleSet eligible(grid.n);
        auto on_labeled = [&](std::int64_t v) {
            const std::int32_t lv = label[v];
            grid.for_neighbors(v, [&](std::int64_t w) {
                if (label[w] != 0) return;
                auto& u = unique_neighbor[w];
                if (u == 0) {
                    u = lv;
                    eligible.insert(w);
                } else if (u > 0 && u != lv) {
                    u = -1;
                    eligible.remove(w);
                }
            });
        };
        for (std::int64_t v = 0; v < grid.n; ++v)
            if (label[v]) on_labeled(v);
        RngStream grow_rng(seed, /*stream=*/3);
        while (eligible.size() > 0) {
            const std::int64_t v = eligible.at(static_cast<std::int64_t>(grow_rng.below(
                static_cast<std::uint64_t>(eligible.size()))));
            eligible.remove(v);
            label[v] = unique_neighbor[v];
            on_labeled(v);
        }
    }

    // 3. spherical erosion by exact distance thresholding, then keep one
    // maximal component per label
    {
        std::vector<char> background(grid.n);
        bool any_background = false;
        for (std::int64_t v = 0; v < grid.n; ++v) {
            background[v] = label[v] == 0;
            any_background = any_background || background[v];
        }
        if (any_background) {
            const auto d = euclidean_distance_transform(background, params.m, params.m, params.m);
            const double rho = params.d_min / 2.0 + params.r;
            for (std::int64_t v = 0; v < grid.n; ++v)
                if (label[v] && !(d[v] > rho)) label[v] = 0;
        }

        // largest component per label; ties go to the component holding
        // the smallest voxel id
        std::vector<char> visited(grid.n, 0);
        std::vector<std::int64_t> best_size(params.n_seeds + 1, 0);
        std::vector<std::vector<std::int64_t>> best_comp(params.n_seeds + 1);
        std::vector<std::int64_t> stack;
        for (std::int64_t v = 0; v < grid.n; ++v) {
            if (!label[v] || visited[v]) continue;
            const std::int32_t lv = label[v];
            std::vector<std::int64_t> comp;
            stack.assign(1, v);
            visited[v] = 1;
            while (!stack.empty()) {
                const std::int64_t a = stack.back();
                stack.pop_back();
                comp.push_back(a);
                grid.for_neighbors(a, [&](std::int64_t w) {
                    if (!visited[w] && label[w] == lv) {
                        visited[w] = 1;
                        stack.push_back(w);
                    }
                });
            }
            if (static_cast<std::int64_t>(comp.size()) > best_size[lv]) {
                for (std::int64_t w : best_comp[lv]) label[w] = 0;
                best_size[lv] = static_cast<std::int64_t>(comp.size());
                best_comp[lv] = std::move(comp);
            } else {
                for (std::int64_t w : comp) label[w] = 0;
            }
        }
    }

    // 4. deterministic BFS regrowth until every 0-voxel touches at least
    // two distinct labels
    {
        std::vector<std::int64_t> queue;
        for (std::int64_t v = 0; v < grid.n; ++v)
            if (label[v]) queue.push_back(v);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::int64_t v = queue[head];
            grid.for_neighbors(v, [&](std::int64_t w) {
                if (label[w] != 0) return;
                std::int32_t first = 0;
                bool multi = false;
                grid.for_neighbors(w, [&](std::int64_t u) {
                    const std::int32_t lu = label[u];
                    if (lu == 0) return;
                    if (first == 0)
                        first = lu;
                    else if (lu != first)
                        multi = true;
                });
                if (!multi && first != 0) {
                    label[w] = first;
                    queue.push_back(w);
                }
            });
        }
    }

    // 5.+6. distance to the membrane skeleton; dilation by r; binarize
    CellVolume out;
    out.distance.nx = out.distance.ny = out.distance.nz = params.m;
    std::vector<char> skeleton(grid.n);
    bool any_skeleton = false;
    for (std::int64_t v = 0; v < grid.n; ++v) {
        skeleton[v] = label[v] == 0;
        any_skeleton = any_skeleton || skeleton[v];
    }
    if (any_skeleton) {
        out.distance.distance = euclidean_distance_transform(skeleton, params.m, params.m, params.m);
        for (std::int64_t v = 0; v < grid.n; ++v)
            if (out.distance.distance[v] <= params.r) label[v] = 0;
    } else {
        out.distance.distance.assign(grid.n, kNoStructure);
    }

    out.binary.nx = out.binary.ny = out.binary.nz = params.m;
    out.binary.labels.resize(grid.n);
    for (std::int64_t v = 0; v < grid.n; ++v) out.binary.labels[v] = label[v] == 0 ? 1 : 0;
    out.cell_labels = std::move(label);
    return out;
}

GrayVolume gray_from_distance(const DistanceField& field, const NoiseParams& params,
                              std::uint64_t seed) {
    GrayVolume g;
    g.nx = field.nx;
    g.ny = field.ny;
    g.nz = field.nz;
    g.values.resize(field.distance.size());
    const double mu1 = params.mu1(), mu2 = params.mu2();
    const double s1 = params.sigma1(), s2 = params.sigma2();
    for (std::size_t v = 0; v < g.values.size(); ++v) {
        RngStream rng(seed, /*stream=*/0x100000000ULL + v);
        double z1, z2;
        rng.normal_pair(z1, z2);
        const double g1 = mu1 + s1 * z1;
        const double g2 = mu2 + s2 * z2;
        const double w = weight(field.distance[v], params.r, params.w_max);
        g.values[v] = std::clamp(w * g1 + (1.0 - w) * g2, 0.0, 1.0);
    }
    return g;
}

}  // namespace msep
