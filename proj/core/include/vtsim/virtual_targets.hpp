#pragma once

#include <span>
#include <vector>

#include "vtsim/kmeans.hpp"
#include "vtsim/rng.hpp"
#include "vtsim/trajectory.hpp"

namespace vtsim {

/// One representative future trajectory per pursuing interceptor, obtained by
/// clustering a bundle of sampled target rollouts.
struct VirtualTargetSet {
    std::vector<Trajectory> vts;        ///< representative trajectories, one per slot
    std::vector<double> horizon_times;  ///< shared grid the slots live on

    std::size_t size() const { return vts.size(); }
};

/// Linear interpolation of a trajectory onto a new time grid; times outside
/// the source span extrapolate linearly from the nearest two points (or hold
/// the single point when the source has only one). Source and target grids
/// must be non-empty and strictly increasing.
Trajectory resample_linear(const Trajectory& src, std::span<const double> new_times);

/// Clusters the bundle into k representative trajectories. When `previous`
/// holds exactly k slots they are resampled onto the bundle's grid and used
/// as the starting centroids, which keeps slot identity stable between
/// updates; otherwise seeding is randomized from `rng`. k is capped at the
/// bundle's sample count.
VirtualTargetSet update_vts(const SampleBundle& bundle, int k, Rng& rng,
                            const VirtualTargetSet* previous = nullptr,
                            const KMeansOptions& options = {});

/// Drops one slot; slots above it shift down by one. Throws on an
/// out-of-range index.
void remove_vt(VirtualTargetSet& set, int index);

}  // namespace vtsim
