#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "vtsim/kmeans.hpp"
#include "vtsim/rng.hpp"
#include "vtsim/trajectory.hpp"

using namespace vtsim;

namespace {

Trajectory make_traj(const std::vector<double>& times, const std::vector<Vec2>& pos) {
    Trajectory t;
    t.times = times;
    t.positions = pos;
    return t;
}

/// Random trajectory on a fixed grid: smooth-ish wander from a start point.
Trajectory random_traj(Rng& rng, const std::vector<double>& times, Vec2 start, double step) {
    Trajectory t;
    t.times = times;
    Vec2 p = start;
    for (std::size_t k = 0; k < times.size(); ++k) {
        p += Vec2{rng.uniform(-step, step), rng.uniform(-step, step)};
        t.positions.push_back(p);
    }
    return t;
}

double exact_sq_distance(const Trajectory& a, const Trajectory& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
        s += (a.positions[i] - b.positions[i]).norm2();
    }
    return s;
}

/// Objective of an assignment with centroids fixed at the per-group
/// pointwise means (the canonical k-means objective of that partition).
double partition_objective(std::span<const Trajectory> samples,
                           const std::vector<int>& assign, int k) {
    const std::size_t grid = samples[0].positions.size();
    std::vector<std::vector<Vec2>> mean(static_cast<std::size_t>(k),
                                        std::vector<Vec2>(grid, Vec2{0, 0}));
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        ++count[static_cast<std::size_t>(assign[i])];
        for (std::size_t t = 0; t < grid; ++t) {
            mean[static_cast<std::size_t>(assign[i])][t] += samples[i].positions[t];
        }
    }
    for (int c = 0; c < k; ++c) {
        if (count[static_cast<std::size_t>(c)] > 0) {
            for (Vec2& p : mean[static_cast<std::size_t>(c)]) {
                p *= 1.0 / count[static_cast<std::size_t>(c)];
            }
        }
    }
    double obj = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t t = 0; t < grid; ++t) {
            obj += (samples[i].positions[t] -
                    mean[static_cast<std::size_t>(assign[i])][t]).norm2();
        }
    }
    return obj;
}

}  // namespace

TEST_CASE("k=1 returns the pointwise mean") {
    const std::vector<double> grid{1.0, 2.0, 3.0};
    std::vector<Trajectory> samples;
    Rng gen(11);
    for (int i = 0; i < 25; ++i) {
        samples.push_back(random_traj(gen, grid, {100, 200}, 50.0));
    }
    Rng rng(1);
    KMeansResult r = ts_kmeans(samples, 1, rng);
    REQUIRE(r.centroids.size() == 1);

    for (std::size_t t = 0; t < grid.size(); ++t) {
        Vec2 mean{0, 0};
        for (const Trajectory& s : samples) mean += s.positions[t];
        mean *= 1.0 / samples.size();
        CHECK(distance(r.centroids[0].positions[t], mean) < 1e-9);
    }
    for (int a : r.assignments) CHECK(a == 0);
}

TEST_CASE("recovers well-separated clusters with a 50/50 split") {
    // Two bundles of trajectories 10 km apart with 10 m jitter.
    const std::vector<double> grid{10.0, 20.0, 30.0, 40.0};
    std::vector<Trajectory> samples;
    Rng gen(7);
    std::vector<Vec2> base_a, base_b;
    for (double t : grid) {
        base_a.push_back({0.0, 1000.0 - 10.0 * t});
        base_b.push_back({10000.0, 1000.0 + 5.0 * t});
    }
    for (int i = 0; i < 50; ++i) {
        std::vector<Vec2> pa = base_a, pb = base_b;
        for (auto& p : pa) p += Vec2{gen.uniform(-10, 10), gen.uniform(-10, 10)};
        for (auto& p : pb) p += Vec2{gen.uniform(-10, 10), gen.uniform(-10, 10)};
        samples.push_back(make_traj(grid, pa));
        samples.push_back(make_traj(grid, pb));
    }

    Rng rng(3);
    KMeansResult r = ts_kmeans(samples, 2, rng);
    REQUIRE(r.centroids.size() == 2);

    // Each centroid sits within 1 m of one bundle's true pointwise mean
    // (jitter mean over 50 draws of U(-10,10) has sd 10/sqrt(3*50) = 0.8 m).
    int near_a = -1;
    if (distance(r.centroids[0].positions[0], base_a[0]) < 5.0) near_a = 0;
    if (distance(r.centroids[1].positions[0], base_a[0]) < 5.0) {
        REQUIRE(near_a == -1);
        near_a = 1;
    }
    REQUIRE(near_a != -1);
    const int near_b = 1 - near_a;

    std::vector<Vec2> mean_a(grid.size(), Vec2{0, 0}), mean_b(grid.size(), Vec2{0, 0});
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t t = 0; t < grid.size(); ++t) {
            (i % 2 == 0 ? mean_a : mean_b)[t] += samples[i].positions[t];
        }
    }
    for (std::size_t t = 0; t < grid.size(); ++t) {
        mean_a[t] *= 1.0 / 50.0;
        mean_b[t] *= 1.0 / 50.0;
        CHECK(distance(r.centroids[static_cast<std::size_t>(near_a)].positions[t], mean_a[t]) <
              1.0);
        CHECK(distance(r.centroids[static_cast<std::size_t>(near_b)].positions[t], mean_b[t]) <
              1.0);
    }

    int count_a = 0;
    for (std::size_t i = 0; i < samples.size(); i += 2) {
        if (r.assignments[i] == near_a) ++count_a;
    }
    CHECK(count_a == 50);  // every A sample in the A cluster
}

TEST_CASE("matches exhaustive assignment enumeration on small instances") {
    // 6..8 samples, k=2, separated enough that Lloyd finds the global
    // optimum; the oracle enumerates all 2^N partitions.
    const std::vector<double> grid{5.0, 10.0};
    Rng gen(1001);
    for (int trial = 0; trial < 10; ++trial) {
        const int n_samples = 6 + (trial % 3);
        std::vector<Trajectory> samples;
        for (int i = 0; i < n_samples; ++i) {
            const Vec2 base = (i % 2 == 0) ? Vec2{0, 0} : Vec2{500, 300};
            std::vector<Vec2> pos;
            for (std::size_t t = 0; t < grid.size(); ++t) {
                pos.push_back(base + Vec2{gen.uniform(-20, 20), gen.uniform(-20, 20)});
            }
            samples.push_back(make_traj(grid, pos));
        }

        double best_obj = std::numeric_limits<double>::infinity();
        for (std::uint32_t mask = 0; mask < (1u << n_samples); ++mask) {
            std::vector<int> assign(n_samples);
            for (int i = 0; i < n_samples; ++i) assign[i] = (mask >> i) & 1u;
            best_obj = std::min(best_obj, partition_objective(samples, assign, 2));
        }

        Rng rng(derive_seed(55, trial));
        KMeansOptions opts;
        opts.move_tolerance = 1e-9;  // run to a fixed point for the comparison
        KMeansResult r = ts_kmeans(samples, 2, rng, opts);
        const double got = partition_objective(samples, r.assignments, 2);
        CHECK(got == doctest::Approx(best_obj).epsilon(1e-9));
    }
}

TEST_CASE("returned centroids are the means of their assigned samples") {
    const std::vector<double> grid{1, 2, 3, 4, 5};
    Rng gen(31);
    std::vector<Trajectory> samples;
    for (int i = 0; i < 120; ++i) {
        samples.push_back(random_traj(gen, grid, {gen.uniform(-5000, 5000),
                                                  gen.uniform(-5000, 5000)}, 200.0));
    }
    Rng rng(17);
    KMeansResult r = ts_kmeans(samples, 5, rng);

    std::vector<std::vector<Vec2>> mean(5, std::vector<Vec2>(grid.size(), Vec2{0, 0}));
    std::vector<int> count(5, 0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        ++count[static_cast<std::size_t>(r.assignments[i])];
        for (std::size_t t = 0; t < grid.size(); ++t) {
            mean[static_cast<std::size_t>(r.assignments[i])][t] += samples[i].positions[t];
        }
    }
    for (int c = 0; c < 5; ++c) {
        REQUIRE(count[static_cast<std::size_t>(c)] > 0);
        for (std::size_t t = 0; t < grid.size(); ++t) {
            const Vec2 m = mean[static_cast<std::size_t>(c)][t] *
                           (1.0 / count[static_cast<std::size_t>(c)]);
            CHECK(distance(r.centroids[static_cast<std::size_t>(c)].positions[t], m) < 1e-9);
        }
    }
}

TEST_CASE("objective history is monotone non-increasing on 50 random instances") {
    const std::vector<double> grid{2, 4, 6, 8, 10, 12};
    for (int inst = 0; inst < 50; ++inst) {
        Rng gen(derive_seed(770, inst));
        const int n = 30 + static_cast<int>(gen.uniform_index(90));
        const int k = 2 + static_cast<int>(gen.uniform_index(7));
        std::vector<Trajectory> samples;
        for (int i = 0; i < n; ++i) {
            samples.push_back(random_traj(gen, grid,
                                          {gen.uniform(-10000, 10000),
                                           gen.uniform(-10000, 10000)}, 500.0));
        }
        Rng rng(derive_seed(771, inst));
        KMeansOptions opts;
        opts.move_tolerance = 1e-6;
        KMeansResult r = ts_kmeans(samples, k, rng, opts);
        REQUIRE(!r.objective_history.empty());
        for (std::size_t i = 1; i < r.objective_history.size(); ++i) {
            CHECK(r.objective_history[i] <= r.objective_history[i - 1] * (1 + 1e-12) + 1e-9);
        }
    }
}

TEST_CASE("k equal to sample count drives the objective to zero") {
    const std::vector<double> grid{1, 2};
    std::vector<Trajectory> samples;
    Rng gen(5);
    for (int i = 0; i < 8; ++i) {
        samples.push_back(random_traj(gen, grid, {100.0 * i, -50.0 * i}, 1.0));
    }
    Rng rng(6);
    KMeansResult r = ts_kmeans(samples, 8, rng);
    CHECK(r.objective_history.back() == doctest::Approx(0.0));
    // All clusters occupied: the assignment is a permutation.
    std::vector<int> seen(8, 0);
    for (int a : r.assignments) ++seen[static_cast<std::size_t>(a)];
    for (int c = 0; c < 8; ++c) CHECK(seen[static_cast<std::size_t>(c)] == 1);
}

TEST_CASE("empty warm-start cluster is repaired with an outlier sample") {
    // Two tight groups plus an in-group outlier; the third warm-start
    // centroid sits absurdly far away so its cluster starts empty.
    const std::vector<double> grid{1.0};
    std::vector<Trajectory> samples;
    for (double y : {0.0, 1.0, 2.0, 50.0}) samples.push_back(make_traj(grid, {{0.0, y}}));
    for (double y : {0.0, 1.0, 2.0}) samples.push_back(make_traj(grid, {{1000.0, y}}));

    std::vector<Trajectory> initial;
    initial.push_back(make_traj(grid, {{0.0, 10.0}}));
    initial.push_back(make_traj(grid, {{1000.0, 1.0}}));
    initial.push_back(make_traj(grid, {{1e9, 1e9}}));

    Rng rng(1);
    KMeansOptions opts;
    opts.move_tolerance = 1e-9;
    KMeansResult r = ts_kmeans(samples, 3, rng, opts, initial);

    // After repair every cluster holds at least one sample and the outlier
    // (0, 50) sits alone.
    std::vector<int> count(3, 0);
    for (int a : r.assignments) ++count[static_cast<std::size_t>(a)];
    for (int c = 0; c < 3; ++c) CHECK(count[static_cast<std::size_t>(c)] > 0);
    CHECK(distance(r.centroids[2].positions[0], Vec2{0.0, 50.0}) < 1e-9);
    CHECK(r.assignments[3] == 2);
}

TEST_CASE("warm start uses the provided centroids verbatim") {
    const std::vector<double> grid{1.0, 2.0};
    std::vector<Trajectory> samples;
    Rng gen(77);
    for (int i = 0; i < 20; ++i) {
        const Vec2 base = (i < 10) ? Vec2{0, 0} : Vec2{5000, 0};
        samples.push_back(random_traj(gen, grid, base, 10.0));
    }
    // Perfect warm start: one iteration to confirm, small moves only.
    std::vector<Trajectory> initial;
    initial.push_back(make_traj(grid, {{0, 0}, {0, 0}}));
    initial.push_back(make_traj(grid, {{5000, 0}, {5000, 0}}));

    Rng rng(1);
    KMeansResult warm = ts_kmeans(samples, 2, rng, {}, initial);
    CHECK(warm.iterations <= 2);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(warm.assignments[i] == (i < 10 ? 0 : 1));
    }
}

TEST_CASE("input validation") {
    const std::vector<double> grid{1.0, 2.0};
    const std::vector<double> other_grid{1.0, 3.0};
    std::vector<Trajectory> samples{
        make_traj(grid, {{0, 0}, {1, 1}}),
        make_traj(grid, {{2, 2}, {3, 3}}),
    };
    Rng rng(1);

    CHECK_THROWS(ts_kmeans(samples, 0, rng));
    CHECK_THROWS(ts_kmeans(samples, 3, rng));  // k > samples
    CHECK_THROWS(ts_kmeans(std::vector<Trajectory>{}, 1, rng));

    std::vector<Trajectory> mismatched = samples;
    mismatched.push_back(make_traj(other_grid, {{0, 0}, {1, 1}}));
    CHECK_THROWS(ts_kmeans(mismatched, 2, rng));

    // Warm start must have exactly k centroids on the shared grid.
    std::vector<Trajectory> short_init{make_traj(grid, {{0, 0}, {0, 0}})};
    CHECK_THROWS(ts_kmeans(samples, 2, rng, {}, short_init));
    std::vector<Trajectory> wrong_grid_init{make_traj(other_grid, {{0, 0}, {0, 0}}),
                                            make_traj(other_grid, {{1, 1}, {1, 1}})};
    CHECK_THROWS(ts_kmeans(samples, 2, rng, {}, wrong_grid_init));
}

TEST_CASE("same seed yields bitwise-identical clustering") {
    const std::vector<double> grid{1, 2, 3};
    std::vector<Trajectory> samples;
    Rng gen(123);
    for (int i = 0; i < 64; ++i) {
        samples.push_back(random_traj(gen, grid, {gen.uniform(-1000, 1000),
                                                  gen.uniform(-1000, 1000)}, 100.0));
    }
    Rng ra(99), rb(99);
    KMeansResult a = ts_kmeans(samples, 4, ra);
    KMeansResult b = ts_kmeans(samples, 4, rb);
    CHECK(a.assignments == b.assignments);
    REQUIRE(a.centroids.size() == b.centroids.size());
    for (std::size_t c = 0; c < a.centroids.size(); ++c) {
        for (std::size_t t = 0; t < grid.size(); ++t) {
            CHECK(a.centroids[c].positions[t].x == b.centroids[c].positions[t].x);
            CHECK(a.centroids[c].positions[t].y == b.centroids[c].positions[t].y);
        }
    }
}
