#include "vtsim/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vtsim {

namespace {

/// Squared trajectory distance with an early exit once the running sum
/// exceeds `cap` (the best candidate seen so far in an argmin scan).
double sq_distance_capped(const Trajectory& a, const Trajectory& b, double cap) {
    double sum = 0.0;
    const std::size_t n = a.positions.size();
    for (std::size_t i = 0; i < n; ++i) {
        sum += (a.positions[i] - b.positions[i]).norm2();
        if (sum > cap) {
            return sum;
        }
    }
    return sum;
}

std::vector<Trajectory> seed_plus_plus(std::span<const Trajectory> samples, int k,
                                       Rng& rng) {
    std::vector<Trajectory> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    centroids.push_back(samples[rng.uniform_index(samples.size())]);

    // d2[i] = squared distance from sample i to its nearest chosen centroid.
    std::vector<double> d2(samples.size(), std::numeric_limits<double>::infinity());
    while (static_cast<int>(centroids.size()) < k) {
        const Trajectory& latest = centroids.back();
        double total = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            d2[i] = std::min(d2[i], traj_sq_distance(samples[i], latest));
            total += d2[i];
        }
        std::size_t pick = samples.size() - 1;
        if (total > 0.0 && std::isfinite(total)) {
            const double u = rng.uniform01() * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < samples.size(); ++i) {
                acc += d2[i];
                if (u < acc) {
                    pick = i;
                    break;
                }
            }
        } else {
            // Every sample coincides with a chosen centroid; any pick works.
            pick = rng.uniform_index(samples.size());
        }
        centroids.push_back(samples[pick]);
    }
    return centroids;
}

}  // namespace

KMeansResult ts_kmeans(std::span<const Trajectory> samples, int k, Rng& rng,
                       const KMeansOptions& options, std::span<const Trajectory> initial) {
    if (samples.empty()) {
        throw std::invalid_argument("ts_kmeans: no samples");
    }
    if (k < 1) {
        throw std::invalid_argument("ts_kmeans: k must be >= 1");
    }
    if (static_cast<std::size_t>(k) > samples.size()) {
        throw std::invalid_argument("ts_kmeans: k exceeds the number of samples");
    }
    if (options.max_iterations < 1) {
        throw std::invalid_argument("ts_kmeans: max_iterations must be >= 1");
    }
    for (const Trajectory& s : samples) {
        if (!s.same_grid(samples[0])) {
            throw std::invalid_argument("ts_kmeans: samples must share one time grid");
        }
    }

    std::vector<Trajectory> centroids;
    if (!initial.empty()) {
        if (static_cast<int>(initial.size()) != k) {
            throw std::invalid_argument("ts_kmeans: warm start must supply exactly k centroids");
        }
        for (const Trajectory& c : initial) {
            if (!c.same_grid(samples[0])) {
                throw std::invalid_argument(
                    "ts_kmeans: warm-start centroids must share the sample grid");
            }
        }
        centroids.assign(initial.begin(), initial.end());
    } else {
        centroids = seed_plus_plus(samples, k, rng);
    }

    const std::size_t n = samples.size();
    const std::size_t grid = samples[0].positions.size();

    KMeansResult result;
    result.assignments.assign(n, 0);

    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        // Assignment step: nearest centroid, ties to the lower index.
        double objective = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_distance_capped(samples[i], centroids[0],
                                               std::numeric_limits<double>::infinity());
            for (int c = 1; c < k; ++c) {
                const double d =
                    sq_distance_capped(samples[i], centroids[static_cast<std::size_t>(c)],
                                       best_d);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            result.assignments[i] = best;
            objective += best_d;
        }
        result.objective_history.push_back(objective);
        result.iterations = iter;

        // Update step: pointwise mean of the assigned samples.
        std::vector<Trajectory> next(static_cast<std::size_t>(k));
        std::vector<int> counts(static_cast<std::size_t>(k), 0);
        for (Trajectory& c : next) {
            c.times = samples[0].times;
            c.positions.assign(grid, Vec2{0.0, 0.0});
        }
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = static_cast<std::size_t>(result.assignments[i]);
            ++counts[c];
            for (std::size_t t = 0; t < grid; ++t) {
                next[c].positions[t] += samples[i].positions[t];
            }
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) {
                const double inv = 1.0 / counts[static_cast<std::size_t>(c)];
                for (Vec2& p : next[static_cast<std::size_t>(c)].positions) {
                    p *= inv;
                }
            }
        }

        // A cluster that lost all members is reseeded with the sample
        // farthest from the mean of its own cluster, each empty cluster
        // taking a distinct sample.
        std::vector<char> used(n, 0);
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) {
                continue;
            }
            std::size_t far_i = n;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (used[i]) {
                    continue;
                }
                const auto own = static_cast<std::size_t>(result.assignments[i]);
                const double d =
                    traj_sq_distance(samples[i], next[own]);
                if (d > far_d) {
                    far_d = d;
                    far_i = i;
                }
            }
            if (far_i < n) {
                next[static_cast<std::size_t>(c)] = samples[far_i];
                used[far_i] = 1;
            }
        }

        double max_move = 0.0;
        for (int c = 0; c < k; ++c) {
            const auto ci = static_cast<std::size_t>(c);
            for (std::size_t t = 0; t < grid; ++t) {
                max_move = std::max(
                    max_move, (next[ci].positions[t] - centroids[ci].positions[t]).norm());
            }
        }
        centroids = std::move(next);
        if (max_move < options.move_tolerance) {
            break;
        }
    }

    result.centroids = std::move(centroids);
    return result;
}

}  // namespace vtsim
