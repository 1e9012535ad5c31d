#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "msep/builder.hpp"
#include "msep/errors.hpp"
#include "msep/oracle.hpp"
#include "support.hpp"

using namespace msep;

TEST_CASE("node cost log odds") {
    CHECK(node_cost(0.5) == 0.0);
    CHECK(node_cost(1.0 / (1.0 + std::exp(1.0))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(node_cost(0.0) == doctest::Approx(std::log((1.0 - 1e-6) / 1e-6)).epsilon(1e-12));
    // the clamp at 1-1e-6 introduces a ~1e-10 cancellation residual
    CHECK(std::fabs(node_cost(1.0) + node_cost(0.0)) < 1e-9);
}

TEST_CASE("digital_line") {
    SUBCASE("axis aligned") {
        const auto line = digital_line({0, 0, 0}, {3, 0, 0});
        CHECK(line == std::vector<Offset>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}});
    }
    SUBCASE("diagonal") {
        const auto line = digital_line({0, 0, 0}, {2, 2, 0});
        CHECK(line == std::vector<Offset>{{0, 0, 0}, {1, 1, 0}, {2, 2, 0}});
    }
    SUBCASE("general direction is dominant-axis monotone") {
        const auto line = digital_line({0, 0, 0}, {4, 2, 1});
        CHECK(line.size() == 5);
        for (std::size_t i = 0; i < line.size(); ++i) CHECK(line[i][0] == static_cast<int>(i));
    }
    SUBCASE("reversal symmetry") {
        RngStream rng(17);
        for (int round = 0; round < 200; ++round) {
            Offset u{static_cast<int>(rng.below(9)), static_cast<int>(rng.below(9)),
                     static_cast<int>(rng.below(9))};
            Offset v{static_cast<int>(rng.below(9)), static_cast<int>(rng.below(9)),
                     static_cast<int>(rng.below(9))};
            if (u == v) continue;
            auto forward = digital_line(u, v);
            auto backward = digital_line(v, u);
            std::reverse(backward.begin(), backward.end());
            CHECK(forward == backward);
        }
    }
    SUBCASE("coinciding endpoints are rejected") {
        CHECK_THROWS_AS(digital_line({1, 2, 3}, {1, 2, 3}), precondition_error);
    }
}

TEST_CASE("offsets with rounded length 8") {
    const auto offsets = offsets_with_rounded_length(8);
    // independent enumeration: integer vectors with 7.5 <= |d| < 8.5,
    // first nonzero coordinate positive
    std::int64_t expected = 0;
    for (int dx = -9; dx <= 9; ++dx)
        for (int dy = -9; dy <= 9; ++dy)
            for (int dz = -9; dz <= 9; ++dz) {
                const double len = std::sqrt(static_cast<double>(dx) * dx +
                                             static_cast<double>(dy) * dy +
                                             static_cast<double>(dz) * dz);
                if (len < 7.5 || len >= 8.5) continue;
                if (dx > 0 || (dx == 0 && dy > 0) || (dx == 0 && dy == 0 && dz > 0)) ++expected;
            }
    CHECK(static_cast<std::int64_t>(offsets.size()) == expected);
    CHECK(offsets.size() == 381);
    std::set<Offset> unique(offsets.begin(), offsets.end());
    CHECK(unique.size() == offsets.size());
    CHECK(unique.count({8, 0, 0}) == 1);
    CHECK(unique.count({6, 5, 2}) == 1);
    CHECK(unique.count({4, 4, 5}) == 1);
    for (const auto& d : offsets) {
        const double len = std::sqrt(static_cast<double>(d[0]) * d[0] + static_cast<double>(d[1]) * d[1] +
                                     static_cast<double>(d[2]) * d[2]);
        CHECK(std::llround(len) == 8);
        // canonical: first nonzero coordinate positive, so -d never appears
        CHECK(unique.count({-d[0], -d[1], -d[2]}) == 0);
    }
}

TEST_CASE("cell offset collection") {
    const auto& offsets = cell_offsets();
    CHECK(offsets.size() == 16);
    CHECK(offsets[0] == Offset{1, 0, 0});
    CHECK(offsets[1] == Offset{0, 1, 0});
    CHECK(offsets[2] == Offset{0, 0, 1});
}

namespace {

GrayVolume uniform_volume(int m, double g) {
    GrayVolume v;
    v.nx = v.ny = v.nz = m;
    v.values.assign(static_cast<std::size_t>(m) * m * m, g);
    return v;
}

}  // namespace

TEST_CASE("build_filament_instance") {
    SUBCASE("uniform half-gray volume keeps only zero-cost grid edges") {
        const auto inst = build_filament_instance(uniform_volume(10, 0.5));
        // all node costs zero, all medians zero, no long-range pair kept
        CHECK(inst.interaction_count() == inst.graph().edge_count());
        for (const auto& f : inst.interactions()) CHECK(f.cost == 0.0);
        for (double c : inst.node_costs()) CHECK(c == 0.0);
    }
    SUBCASE("a bright straight tube gains attractive long-range pairs") {
        // dark background (g=0.8 -> negative cost), bright tube voxels
        // (g=0.2 -> positive cost) along the x axis
        GrayVolume v = uniform_volume(12, 0.8);
        for (int x = 0; x < 12; ++x) v.values[v.index(x, 5, 5)] = 0.2;
        const auto inst = build_filament_instance(v);
        const Grid3 grid = grid3(12, 12, 12);
        bool found = false;
        const double expected = std::log(0.8 / 0.2);
        for (const auto& f : inst.interactions()) {
            if (f.u == grid.index(0, 5, 5) && f.v == grid.index(8, 5, 5)) {
                found = true;
                CHECK(f.cost == doctest::Approx(expected).epsilon(1e-9));
            }
        }
        CHECK(found);
        // every retained long-range interaction has strictly positive cost
        for (const auto& f : inst.interactions()) {
            int ux, uy, uz, vx, vy, vz;
            grid.coord(f.u, ux, uy, uz);
            grid.coord(f.v, vx, vy, vz);
            const int dx = vx - ux, dy = vy - uy, dz = vz - uz;
            if (dx * dx + dy * dy + dz * dz > 3) CHECK(f.cost > 0.0);
        }
    }
    SUBCASE("edge interaction cost is the mean of its endpoints") {
        GrayVolume v = uniform_volume(4, 0.5);
        v.values[v.index(0, 0, 0)] = 0.3;
        v.values[v.index(1, 0, 0)] = 0.6;
        const auto inst = build_filament_instance(v);
        const double expected = 0.5 * (node_cost(0.3) + node_cost(0.6));
        bool found = false;
        for (const auto& f : inst.interactions())
            if (f.u == 0 && f.v == 1) {
                CHECK(f.cost == doctest::Approx(expected).epsilon(1e-12));
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("build_cell_instance") {
    SUBCASE("uniform volume: all interactions cost zero") {
        const auto inst = build_cell_instance(uniform_volume(8, 0.5));
        for (const auto& f : inst.interactions()) CHECK(f.cost == 0.0);
        // interior voxels carry one interaction per offset
        std::int64_t expected = 0;
        for (int z = 0; z < 8; ++z)
            for (int y = 0; y < 8; ++y)
                for (int x = 0; x < 8; ++x)
                    for (const auto& d : cell_offsets()) {
                        const int x2 = x + d[0], y2 = y + d[1], z2 = z + d[2];
                        if (x2 >= 0 && x2 < 8 && y2 >= 0 && y2 < 8 && z2 >= 0 && z2 < 8) ++expected;
                    }
        CHECK(inst.interaction_count() == expected);
    }
    SUBCASE("a single bright membrane voxel makes the crossing line repulsive") {
        GrayVolume v = uniform_volume(8, 0.2);
        v.values[v.index(2, 0, 0)] = 0.9;
        const auto inst = build_cell_instance(v);
        const Grid3 grid = grid3(8, 8, 8);
        const double expected = std::log(0.1 / 0.9);
        bool found = false;
        for (const auto& f : inst.interactions())
            if (f.u == grid.index(0, 0, 0) && f.v == grid.index(5, 0, 0)) {
                CHECK(f.cost == doctest::Approx(expected).epsilon(1e-9));
                found = true;
            }
        CHECK(found);
    }
    SUBCASE("interaction endpoints are never duplicated") {
        const auto inst = build_cell_instance(uniform_volume(6, 0.4));
        std::set<std::pair<NodeId, NodeId>> seen;
        for (const auto& f : inst.interactions()) CHECK(seen.insert({f.u, f.v}).second);
    }
}

TEST_CASE("interaction construction is direction-free") {
    RngStream rng(19);
    GrayVolume v = uniform_volume(9, 0.5);
    for (auto& g : v.values) g = rng.uniform(0.05, 0.95);
    // medians and minima over a line equal those over the reversed line
    for (int round = 0; round < 100; ++round) {
        Offset a{static_cast<int>(rng.below(9)), static_cast<int>(rng.below(9)),
                 static_cast<int>(rng.below(9))};
        Offset b{static_cast<int>(rng.below(9)), static_cast<int>(rng.below(9)),
                 static_cast<int>(rng.below(9))};
        if (a == b) continue;
        auto fwd = digital_line(a, b);
        auto bwd = digital_line(b, a);
        std::multiset<std::int64_t> fs, bs;
        for (const auto& p : fwd) fs.insert(v.index(p[0], p[1], p[2]));
        for (const auto& p : bwd) bs.insert(v.index(p[0], p[1], p[2]));
        CHECK(fs == bs);
    }
}

TEST_CASE("apply_bias") {
    const MspInstance inst = test::four_path_instance();
    SUBCASE("zero bias is the identity") {
        const auto biased = apply_bias(inst, 0.0);
        CHECK(biased.node_costs() == inst.node_costs());
        for (std::size_t f = 0; f < inst.interactions().size(); ++f)
            CHECK(biased.interactions()[f].cost == inst.interactions()[f].cost);
    }
    SUBCASE("bias shifts every coefficient") {
        const auto biased = apply_bias(inst, 1.0);
        CHECK(biased.node_costs() == std::vector<double>{7.0, 5.0, 4.0, 3.0});
        CHECK(biased.interactions()[0].cost == 2.0);
        CHECK(biased.interactions()[1].cost == 2.0);
        CHECK(biased.interactions()[2].cost == 8.0);
        CHECK(biased.interactions()[3].cost == -7.0);
    }
    SUBCASE("nodes-only flag leaves interactions alone") {
        const auto biased = apply_bias(inst, -0.1, true);
        CHECK(biased.node_costs()[0] == doctest::Approx(5.9));
        CHECK(biased.interactions()[3].cost == -8.0);
    }
    SUBCASE("optimal objective responds monotonically to the bias") {
        RngStream rng(23);
        for (int round = 0; round < 25; ++round) {
            const NodeId n = 2 + static_cast<NodeId>(rng.below(7));
            const MspInstance base = test::random_instance(rng, n, 6);
            const double b1 = rng.uniform(-0.5, 0.0), b2 = rng.uniform(0.0, 0.5);
            const double v1 = brute_force_msp(apply_bias(base, b1)).value;
            const double v2 = brute_force_msp(apply_bias(base, b2)).value;
            // a larger bias never lowers the optimum, and the growth rate
            // is bounded by the number of cost coefficients
            CHECK(v2 >= v1 - 1e-12);
            CHECK(v2 - v1 <=
                  (b2 - b1) * static_cast<double>(n + base.interaction_count()) + 1e-9);
        }
    }
}
