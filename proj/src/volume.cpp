#include "msep/volume.hpp"

#include <algorithm>
#include <cmath>

namespace msep {

Separator BinaryVolume::separator() const {
    Separator s(static_cast<NodeId>(voxel_count()));
    for (std::int64_t i = 0; i < voxel_count(); ++i)
        if (labels[i]) s.insert(static_cast<NodeId>(i));
    return s;
}

namespace {

// Large finite stand-in for "no source"; squared grid distances stay far
// below it, so it never wins against a real parabola and survives the
// three passes when a row has no source at all.
constexpr double kFar = 1e18;

// 1-D squared distance transform by lower envelope of parabolas
// (Felzenszwalb & Huttenlocher).
void edt_1d(const double* f, double* d, int n, int* v, double* z) {
    int k = 0;
    v[0] = 0;
    z[0] = -kFar;
    z[1] = kFar;
    for (int q = 1; q < n; ++q) {
        double s = ((f[q] + static_cast<double>(q) * q) -
                    (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                   (2.0 * q - 2.0 * v[k]);
        while (s <= z[k]) {
            --k;
            s = ((f[q] + static_cast<double>(q) * q) -
                 (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                (2.0 * q - 2.0 * v[k]);
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kFar;
    }
    int j = 0;
    for (int q = 0; q < n; ++q) {
        while (z[j + 1] < q) ++j;
        const double dq = q - v[j];
        d[q] = dq * dq + f[v[j]];
    }
}

}  // namespace

std::vector<double> euclidean_distance_transform(const std::vector<char>& source, int nx, int ny,
                                                 int nz) {
    const std::int64_t n = static_cast<std::int64_t>(nx) * ny * nz;
    std::vector<double> dist(n);
    for (std::int64_t i = 0; i < n; ++i) dist[i] = source[i] ? 0.0 : kFar;

    const int max_dim = std::max({nx, ny, nz});
    std::vector<double> f(max_dim), d(max_dim), z(max_dim + 1);
    std::vector<int> v(max_dim);

    auto idx = [&](int x, int y, int zc) {
        return x + static_cast<std::int64_t>(nx) * (y + static_cast<std::int64_t>(ny) * zc);
    };

    for (int zc = 0; zc < nz; ++zc)
        for (int y = 0; y < ny; ++y) {
            for (int x = 0; x < nx; ++x) f[x] = dist[idx(x, y, zc)];
            edt_1d(f.data(), d.data(), nx, v.data(), z.data());
            for (int x = 0; x < nx; ++x) dist[idx(x, y, zc)] = d[x];
        }
    for (int zc = 0; zc < nz; ++zc)
        for (int x = 0; x < nx; ++x) {
            for (int y = 0; y < ny; ++y) f[y] = dist[idx(x, y, zc)];
            edt_1d(f.data(), d.data(), ny, v.data(), z.data());
            for (int y = 0; y < ny; ++y) dist[idx(x, y, zc)] = d[y];
        }
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) {
            for (int zc = 0; zc < nz; ++zc) f[zc] = dist[idx(x, y, zc)];
            edt_1d(f.data(), d.data(), nz, v.data(), z.data());
            for (int zc = 0; zc < nz; ++zc) dist[idx(x, y, zc)] = d[zc];
        }

    for (std::int64_t i = 0; i < n; ++i)
        dist[i] = dist[i] >= 1e17 ? kNoStructure : std::sqrt(dist[i]);
    return dist;
}

}  // namespace msep
