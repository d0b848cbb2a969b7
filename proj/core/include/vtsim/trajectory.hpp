#pragma once

#include <vector>

#include "vtsim/vec2.hpp"

namespace vtsim {

/// Timestamped sequence of predicted positions; the unit of prediction and
/// clustering. Times are absolute simulation seconds, strictly increasing.
struct Trajectory {
    std::vector<double> times;     // s
    std::vector<Vec2> positions;   // m

    std::size_t size() const { return times.size(); }

    /// Throws std::invalid_argument if lengths mismatch, times are not
    /// strictly increasing, or any value is non-finite.
    void validate() const;

    bool same_grid(const Trajectory& other) const { return times == other.times; }
};

/// Squared flattened-Euclidean distance between two trajectories on the same
/// grid: sum over time steps of the squared position distance.
double traj_sq_distance(const Trajectory& a, const Trajectory& b);

/// Probabilistic prediction bundle: one rollout per (active target, sample)
/// pair, all recorded on exactly the same horizon grid.
struct SampleBundle {
    std::vector<double> horizon_times;   // s, shared by every sample
    std::vector<Trajectory> samples;     // active-target-major, sample-minor
    std::vector<int> source_ids;         // originating target per sample
};

}  // namespace vtsim
