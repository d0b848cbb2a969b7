#pragma once

#include <cstddef>
#include <span>

#include "vtsim/trajectory.hpp"
#include "vtsim/vec2.hpp"
#include "vtsim/vehicle.hpp"

namespace vtsim {

/// Engagement phase of one interceptor. Midcourse pursues a predicted
/// trajectory at low rate; Endgame pursues a locked physical target at the
/// full simulation rate. The transition is one-way.
struct GuidancePhase {
    enum class Kind { Midcourse, Endgame };
    Kind kind = Kind::Midcourse;
    int locked_target = -1;  ///< valid only in Endgame

    bool is_endgame() const { return kind == Kind::Endgame; }
};

struct TgoResult {
    double t_go = 0.0;     ///< seconds until predicted closest approach
    std::size_t index = 0; ///< grid index of the minimizing prediction time
    Vec2 r_at_tgo;         ///< predicted interceptor-minus-target position there
};

/// Scans the shared prediction grid for the point of minimum predicted
/// separation (ties toward the earlier time). Throws when the grids differ
/// or are empty.
TgoResult compute_tgo(const Trajectory& interceptor_pred, const Trajectory& target_pred,
                      double now);

/// Rescales v onto the closed disk of radius max_norm, preserving direction.
/// The returned norm is <= max_norm exactly, not merely up to rounding.
Vec2 clip_norm(Vec2 v, double max_norm);

/// Midcourse command: acceleration that drives the predicted miss r_at_tgo
/// to zero, -N * r / t_go^2, norm-limited to a_max. Throws when t_go <= 0
/// (stale prediction; callers must re-predict first).
Vec2 zem_accel(Vec2 r_at_tgo, double t_go, double nav_gain, double a_max);

/// Endgame command: true proportional navigation. With r the line of sight
/// from interceptor to target, commands N * V_c * lambda_dot perpendicular to
/// r, signed to null the line-of-sight rate, norm-limited to a_max. Throws
/// on zero separation or an inactive participant.
Vec2 pn_accel(const VehicleState& interceptor, const VehicleState& target,
              double nav_gain, double a_max);

/// Applies the one-way phase transition: enters Endgame when the nearest
/// active target is within d_endgame (inclusive), and relocks to the nearest
/// active target if the locked one has been destroyed. With no active
/// targets the phase is returned unchanged.
GuidancePhase maybe_switch_phase(const GuidancePhase& phase, const VehicleState& interceptor,
                                 std::span<const VehicleState> targets, double d_endgame);

}  // namespace vtsim
