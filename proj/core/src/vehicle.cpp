#include "vtsim/vehicle.hpp"

#include <cmath>
#include <stdexcept>

namespace vtsim {

namespace {
constexpr double kLateralEps = 1e-12;  // m/s^2; below this the arc degenerates
}

TurnStep make_turn_step(double lateral_accel, double speed, double dt) {
    TurnStep step;
    step.dt = dt;
    if (std::abs(lateral_accel) < kLateralEps) {
        return step;
    }
    const double omega = lateral_accel / speed;  // rad/s, signed
    const double theta = omega * dt;
    step.cos_theta = std::cos(theta);
    step.sin_theta = std::sin(theta);
    step.k1 = step.sin_theta / omega;
    step.k2 = (1.0 - step.cos_theta) / omega;
    step.straight = false;
    return step;
}

double lateral_component(Vec2 velocity, Vec2 accel_cmd) {
    const double speed = velocity.norm();
    return velocity.cross(accel_cmd) / speed;
}

VehicleState step_vehicle(const VehicleState& state, Vec2 accel_cmd, double dt) {
    if (!state.active) {
        throw std::invalid_argument("step_vehicle: inactive vehicle");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("step_vehicle: dt must be positive");
    }
    if (!state.position.is_finite() || !state.velocity.is_finite() || !accel_cmd.is_finite()) {
        throw std::invalid_argument("step_vehicle: non-finite input");
    }
    const double speed = state.velocity.norm();
    if (speed < kLateralEps) {
        throw std::invalid_argument("step_vehicle: zero-speed vehicle, body frame undefined");
    }
    const double lat = lateral_component(state.velocity, accel_cmd);
    return apply_turn(state, make_turn_step(lat, speed, dt));
}

}  // namespace vtsim
