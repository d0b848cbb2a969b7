#pragma once

#include "vtsim/vec2.hpp"

namespace vtsim {

/// A target or interceptor. Speed is constant over a vehicle's lifetime:
/// the integrator applies only the acceleration component perpendicular to
/// the velocity, as an exact circular-arc rotation.
struct VehicleState {
    Vec2 position;   // m
    Vec2 velocity;   // m/s
    bool active = true;
};

/// Precomputed constant-rate turn over one time slice. For lateral
/// acceleration a_lat at speed s, the turn rate is w = a_lat / s and over dt
/// the position advances along the arc:
///   p' = p + k1 * v + k2 * perp_ccw(v),   v' = R(w * dt) * v
/// with k1 = sin(w dt)/w and k2 = (1 - cos(w dt))/w. A |a_lat| below 1e-12
/// degenerates to straight-line motion.
struct TurnStep {
    double cos_theta = 1.0;
    double sin_theta = 0.0;
    double k1 = 0.0;   // s
    double k2 = 0.0;   // s
    bool straight = true;
    double dt = 0.0;   // s
};

TurnStep make_turn_step(double lateral_accel, double speed, double dt);

/// Applies a prepared turn. Does not touch the active flag.
inline VehicleState apply_turn(const VehicleState& state, const TurnStep& step) {
    VehicleState out = state;
    const Vec2 v = state.velocity;
    if (step.straight) {
        out.position += v * step.dt;
        return out;
    }
    out.position += v * step.k1 + v.perp_ccw() * step.k2;
    out.velocity = {step.cos_theta * v.x - step.sin_theta * v.y,
                    step.sin_theta * v.x + step.cos_theta * v.y};
    return out;
}

/// Signed lateral component of a command relative to the velocity direction;
/// positive turns counterclockwise. The parallel component is discarded.
double lateral_component(Vec2 velocity, Vec2 accel_cmd);

/// Advances an active vehicle by dt under an inertial-frame acceleration
/// command. Only the lateral component of the command acts; speed is
/// preserved by construction. Throws std::invalid_argument on an inactive or
/// zero-speed vehicle, non-positive dt, or non-finite inputs.
VehicleState step_vehicle(const VehicleState& state, Vec2 accel_cmd, double dt);

}  // namespace vtsim
