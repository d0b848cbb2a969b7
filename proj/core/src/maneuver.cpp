#include "vtsim/maneuver.hpp"

#include <cmath>
#include <stdexcept>

namespace vtsim {

void ManeuverModelParams::validate() const {
    if (!(segment_duration_min > 0.0) || !(segment_duration_min <= segment_duration_max)) {
        throw std::invalid_argument(
            "ManeuverModelParams: need 0 < segment_duration_min <= segment_duration_max");
    }
    if (!(a_lat_max_target >= 0.0) || !std::isfinite(a_lat_max_target)) {
        throw std::invalid_argument("ManeuverModelParams: a_lat_max_target must be >= 0");
    }
}

ManeuverSampler::ManeuverSampler(const ManeuverModelParams& params, Rng rng, double start_time)
    : params_(params), rng_(rng) {
    params_.validate();
    segment_.until = start_time;  // first query draws the first segment
}

const ManeuverSegment& ManeuverSampler::advance_to(double t) {
    while (t >= segment_.until) {
        const double duration =
            rng_.uniform(params_.segment_duration_min, params_.segment_duration_max);
        segment_.lateral_accel =
            rng_.uniform(-params_.a_lat_max_target, params_.a_lat_max_target);
        segment_.until += duration;
    }
    return segment_;
}

Trajectory rollout_target(const VehicleState& initial, const ManeuverModelParams& params,
                          Rng rng, double now, std::span<const double> times, double dt) {
    if (!initial.active) {
        throw std::invalid_argument("rollout_target: inactive vehicle");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("rollout_target: dt must be positive");
    }
    if (times.empty()) {
        throw std::invalid_argument("rollout_target: no record times");
    }
    const double speed = initial.velocity.norm();
    if (speed < 1e-12) {
        throw std::invalid_argument("rollout_target: zero-speed vehicle, body frame undefined");
    }

    // Record times snapped to the nearest sim step, as step indices from now.
    std::vector<long long> record_steps(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (k > 0 && !(times[k] > times[k - 1])) {
            throw std::invalid_argument("rollout_target: times not strictly increasing");
        }
        record_steps[k] = std::llround((times[k] - now) / dt);
        if (record_steps[k] < 0) {
            throw std::invalid_argument("rollout_target: record time before start");
        }
        if (k > 0 && record_steps[k] <= record_steps[k - 1]) {
            throw std::invalid_argument("rollout_target: record times collide after snapping");
        }
    }

    Trajectory out;
    out.times.reserve(times.size());
    out.positions.reserve(times.size());

    ManeuverSampler sampler(params, rng, now);
    VehicleState state = initial;
    long long step = 0;

    // The command sampled at a step start stays in force for the whole step,
    // so a segment boundary becomes effective at the first step whose start
    // time reaches it. Between effective boundaries the turn rate is
    // constant and the arc is advanced in one closed-form jump.
    for (std::size_t k = 0; k < times.size(); ++k) {
        const long long target_step = record_steps[k];
        while (step < target_step) {
            const ManeuverSegment& seg =
                sampler.advance_to(now + static_cast<double>(step) * dt);
            long long switch_step =
                static_cast<long long>(std::ceil((seg.until - now) / dt - 1e-9));
            if (switch_step <= step) switch_step = step + 1;
            const long long hop_to = std::min(target_step, switch_step);
            const double span = static_cast<double>(hop_to - step) * dt;
            state = apply_turn(state, make_turn_step(seg.lateral_accel, speed, span));
            step = hop_to;
        }
        out.times.push_back(now + static_cast<double>(target_step) * dt);
        out.positions.push_back(state.position);
    }
    return out;
}

}  // namespace vtsim
