#pragma once

#include <span>
#include <vector>

#include "vtsim/maneuver.hpp"
#include "vtsim/rng.hpp"
#include "vtsim/trajectory.hpp"
#include "vtsim/vehicle.hpp"

namespace vtsim {

/// n_t prediction times uniformly spaced over (now, t_max]:
/// t_k = now + k * (t_max - now) / n_t for k = 1..n_t, last element exactly
/// t_max. Throws std::invalid_argument when now >= t_max (engagement over)
/// or n_t < 1.
std::vector<double> horizon(double now, double t_max, int n_t);

/// Straight-line extrapolation: p(t_k) = p(now) + v(now) * (t_k - now).
Trajectory predict_straight(const VehicleState& state, std::span<const double> times,
                            double now);

/// Interceptor prediction under the zero-future-acceleration assumption.
/// Same formula as predict_straight; kept separate so call sites state which
/// assumption they rely on.
Trajectory predict_interceptor(const VehicleState& state, std::span<const double> times,
                               double now);

/// Draws n_s maneuver-model rollouts for every active target, all recorded on
/// one shared grid (the requested times snapped to the nearest sim step of
/// size dt). Consumes one value from rng and derives an independent
/// substream per (target, sample), so the result is identical no matter how
/// generation is scheduled. Throws std::runtime_error when no target is
/// active.
SampleBundle sample_bundle(std::span<const VehicleState> targets,
                           const ManeuverModelParams& params, int n_s,
                           std::span<const double> times, double now, double dt, Rng& rng);

}  // namespace vtsim
