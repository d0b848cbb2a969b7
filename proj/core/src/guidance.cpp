#include "vtsim/guidance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vtsim {

TgoResult compute_tgo(const Trajectory& interceptor_pred, const Trajectory& target_pred,
                      double now) {
    if (interceptor_pred.times.empty()) {
        throw std::invalid_argument("compute_tgo: empty prediction grid");
    }
    if (!interceptor_pred.same_grid(target_pred)) {
        throw std::invalid_argument("compute_tgo: predictions must share one time grid");
    }
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < interceptor_pred.positions.size(); ++k) {
        const double d2 =
            (interceptor_pred.positions[k] - target_pred.positions[k]).norm2();
        if (d2 < best_d2) {
            best_d2 = d2;
            best = k;
        }
    }
    TgoResult result;
    result.index = best;
    result.t_go = interceptor_pred.times[best] - now;
    result.r_at_tgo = interceptor_pred.positions[best] - target_pred.positions[best];
    return result;
}

Vec2 clip_norm(Vec2 v, double max_norm) {
    if (!(max_norm >= 0.0)) {
        throw std::invalid_argument("clip_norm: negative limit");
    }
    double n = v.norm();
    // The guarantee is exact (n <= max_norm on return), so re-check after
    // rescaling: the product can land a few ulp above the limit. The shrink
    // factor is kept strictly below 1 to force progress.
    while (n > max_norm) {
        const double f = std::min(max_norm / n, 1.0 - 1e-15);
        v *= f;
        n = v.norm();
    }
    return v;
}

Vec2 zem_accel(Vec2 r_at_tgo, double t_go, double nav_gain, double a_max) {
    if (!(t_go > 0.0)) {
        throw std::invalid_argument("zem_accel: t_go must be positive");
    }
    const Vec2 raw = r_at_tgo * (-nav_gain / (t_go * t_go));
    return clip_norm(raw, a_max);
}

Vec2 pn_accel(const VehicleState& interceptor, const VehicleState& target,
              double nav_gain, double a_max) {
    if (!interceptor.active || !target.active) {
        throw std::invalid_argument("pn_accel: both vehicles must be active");
    }
    const Vec2 r = target.position - interceptor.position;
    const Vec2 r_dot = target.velocity - interceptor.velocity;
    const double range = r.norm();
    if (range <= 0.0) {
        throw std::invalid_argument("pn_accel: zero separation");
    }
    const double los_rate = r.cross(r_dot) / (range * range);
    const double closing = -r.dot(r_dot) / range;
    const Vec2 raw = (r * (1.0 / range)).perp_ccw() * (nav_gain * closing * los_rate);
    return clip_norm(raw, a_max);
}

GuidancePhase maybe_switch_phase(const GuidancePhase& phase, const VehicleState& interceptor,
                                 std::span<const VehicleState> targets, double d_endgame) {
    if (!interceptor.active) {
        throw std::invalid_argument("maybe_switch_phase: interceptor inactive");
    }
    int nearest = -1;
    double nearest_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < targets.size(); ++j) {
        if (!targets[j].active) {
            continue;
        }
        const double d = distance(interceptor.position, targets[j].position);
        if (d < nearest_d) {
            nearest_d = d;
            nearest = static_cast<int>(j);
        }
    }
    if (nearest < 0) {
        return phase;  // nothing left to pursue; the loop is about to end
    }

    GuidancePhase next = phase;
    if (phase.kind == GuidancePhase::Kind::Midcourse) {
        if (nearest_d <= d_endgame) {
            next.kind = GuidancePhase::Kind::Endgame;
            next.locked_target = nearest;
        }
    } else {
        const auto locked = static_cast<std::size_t>(phase.locked_target);
        if (phase.locked_target < 0 || locked >= targets.size() ||
            !targets[locked].active) {
            next.locked_target = nearest;
        }
    }
    return next;
}

}  // namespace vtsim
