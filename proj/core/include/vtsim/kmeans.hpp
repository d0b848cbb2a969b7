#pragma once

#include <span>
#include <vector>

#include "vtsim/rng.hpp"
#include "vtsim/trajectory.hpp"

namespace vtsim {

struct KMeansResult {
    std::vector<Trajectory> centroids;    ///< k centroids on the shared grid
    std::vector<int> assignments;         ///< per-sample centroid index
    std::vector<double> objective_history;///< sum of squared distances after each assign step
    int iterations = 0;                   ///< Lloyd iterations actually run
};

struct KMeansOptions {
    int max_iterations = 50;
    /// Convergence: stop when no centroid point moves farther than this
    /// between consecutive update steps (meters).
    double move_tolerance = 1.0;
};

/// Lloyd's algorithm on whole trajectories, distance = sum over the shared
/// time grid of squared pointwise Euclidean distance. Seeding is k-means++
/// (D^2 weighting) unless `initial` supplies k centroids on the same grid, in
/// which case those are used verbatim (warm start). Ties in assignment go to
/// the lower centroid index. A cluster left empty after an update step is
/// reseeded with the sample farthest from its own centroid. Throws when the
/// samples do not share one grid, k < 1, or k > number of samples.
KMeansResult ts_kmeans(std::span<const Trajectory> samples, int k, Rng& rng,
                       const KMeansOptions& options = {},
                       std::span<const Trajectory> initial = {});

}  // namespace vtsim
