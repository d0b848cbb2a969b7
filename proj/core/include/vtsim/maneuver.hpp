#pragma once

#include <cstdint>
#include <span>

#include "vtsim/rng.hpp"
#include "vtsim/trajectory.hpp"
#include "vtsim/vehicle.hpp"

namespace vtsim {

/// Stochastic target maneuver model: piecewise-constant lateral acceleration.
/// Segment durations draw from Uniform[segment_duration_min,
/// segment_duration_max] and amplitudes from Uniform[-a_lat_max_target,
/// +a_lat_max_target].
struct ManeuverModelParams {
    double a_lat_max_target = 30.0;     // m/s^2
    double segment_duration_min = 2.0;  // s
    double segment_duration_max = 10.0; // s
    std::uint64_t rng_seed = 0;         // folded into every derived stream

    /// Throws std::invalid_argument on a non-positive duration range or a
    /// negative amplitude bound.
    void validate() const;
};

/// One draw of the maneuver law: constant lateral acceleration until `until`.
struct ManeuverSegment {
    double lateral_accel = 0.0;  // m/s^2, signed (positive = counterclockwise)
    double until = 0.0;          // s, exclusive end of validity
};

/// Deterministic segment stream. Queries must be monotone non-decreasing in
/// time; identical (seed, params) yield bit-identical command sequences.
/// Per segment the duration is drawn first, then the amplitude.
class ManeuverSampler {
  public:
    ManeuverSampler(const ManeuverModelParams& params, Rng rng, double start_time);

    /// Lateral acceleration commanded at time t (the segment with
    /// start <= t < end). Advances the stream past expired segments.
    double command_at(double t) { return advance_to(t).lateral_accel; }

    /// Segment active at time t.
    const ManeuverSegment& advance_to(double t);

  private:
    ManeuverModelParams params_;
    Rng rng_;
    ManeuverSegment segment_;
};

/// Ground-truth propagation of a maneuvering target: integrates at the
/// simulation resolution dt from `now`, sampling the maneuver stream at each
/// step start, and records positions at the requested times snapped to the
/// nearest sim step. The returned trajectory carries the snapped times.
///
/// Command changes take effect at the first sim step at or after each
/// segment boundary, exactly as a per-step loop would sample them; between
/// those instants motion follows the exact constant-rate arc, so whole spans
/// are advanced in closed form.
///
/// Preconditions: times strictly increasing, times.front() >= now, distinct
/// after snapping, initial state active with positive speed.
Trajectory rollout_target(const VehicleState& initial, const ManeuverModelParams& params,
                          Rng rng, double now, std::span<const double> times, double dt);

}  // namespace vtsim
