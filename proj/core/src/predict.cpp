#include "vtsim/predict.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vtsim {

std::vector<double> horizon(double now, double t_max, int n_t) {
    if (!(n_t >= 1)) {
        throw std::invalid_argument("horizon: n_t must be >= 1");
    }
    if (!(now < t_max)) {
        throw std::invalid_argument("horizon: now (" + std::to_string(now) +
                                    ") must be < t_max (" + std::to_string(t_max) + ")");
    }
    std::vector<double> times(static_cast<std::size_t>(n_t));
    const double span = t_max - now;
    for (int k = 1; k <= n_t; ++k) {
        times[static_cast<std::size_t>(k - 1)] = now + span * static_cast<double>(k) /
                                                           static_cast<double>(n_t);
    }
    times.back() = t_max;
    return times;
}

namespace {

Trajectory extrapolate(const VehicleState& state, std::span<const double> times,
                       double now, const char* who) {
    if (!state.active) {
        throw std::invalid_argument(std::string(who) + ": vehicle is inactive");
    }
    if (times.empty()) {
        throw std::invalid_argument(std::string(who) + ": empty time grid");
    }
    Trajectory out;
    out.times.assign(times.begin(), times.end());
    out.positions.reserve(times.size());
    for (double t : times) {
        out.positions.push_back(state.position + state.velocity * (t - now));
    }
    out.validate();
    return out;
}

}  // namespace

Trajectory predict_straight(const VehicleState& state, std::span<const double> times,
                            double now) {
    return extrapolate(state, times, now, "predict_straight");
}

Trajectory predict_interceptor(const VehicleState& state, std::span<const double> times,
                               double now) {
    return extrapolate(state, times, now, "predict_interceptor");
}

SampleBundle sample_bundle(std::span<const VehicleState> targets,
                           const ManeuverModelParams& params, int n_s,
                           std::span<const double> times, double now, double dt, Rng& rng) {
    if (n_s < 1) {
        throw std::invalid_argument("sample_bundle: n_s must be >= 1");
    }
    if (times.empty()) {
        throw std::invalid_argument("sample_bundle: empty time grid");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("sample_bundle: dt must be positive");
    }
    params.validate();

    // Snap the requested horizon to the simulation grid once so every sample
    // (and the interceptor predictions computed against them) share an
    // identical time vector.
    std::vector<double> snapped;
    snapped.reserve(times.size());
    long long prev_step = -1;
    for (double t : times) {
        const long long step = std::llround((t - now) / dt);
        if (step < 0) {
            throw std::invalid_argument("sample_bundle: prediction time before now");
        }
        if (step <= prev_step) {
            throw std::invalid_argument(
                "sample_bundle: horizon spacing below the simulation step");
        }
        prev_step = step;
        snapped.push_back(now + static_cast<double>(step) * dt);
    }

    bool any_active = false;
    for (const VehicleState& t : targets) {
        if (t.active) {
            any_active = true;
            break;
        }
    }
    if (!any_active) {
        throw std::runtime_error("sample_bundle: no active targets to sample");
    }

    SampleBundle bundle;
    bundle.horizon_times = snapped;
    const auto active_count = [&] {
        std::size_t c = 0;
        for (const VehicleState& t : targets) c += t.active ? 1 : 0;
        return c;
    }();
    bundle.samples.reserve(active_count * static_cast<std::size_t>(n_s));
    bundle.source_ids.reserve(bundle.samples.capacity());

    // One draw from the caller's stream keys the whole bundle; each
    // (target, sample) pair then gets its own derived generator.
    const std::uint64_t base = rng.next_u64();
    for (std::size_t id = 0; id < targets.size(); ++id) {
        if (!targets[id].active) continue;
        for (int s = 0; s < n_s; ++s) {
            Rng sub(derive_seed(base, static_cast<std::uint64_t>(id),
                                static_cast<std::uint64_t>(s)));
            bundle.samples.push_back(
                rollout_target(targets[id], params, sub, now, snapped, dt));
            bundle.source_ids.push_back(static_cast<int>(id));
        }
    }
    return bundle;
}

}  // namespace vtsim
