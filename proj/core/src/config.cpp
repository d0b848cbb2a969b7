#include "vtsim/config.hpp"

#include <cmath>
#include <stdexcept>

namespace vtsim {

const char* to_string(PredictionMethod method) {
    switch (method) {
        case PredictionMethod::StraightLine: return "straight_line";
        case PredictionMethod::VirtualTarget: return "virtual_target";
    }
    throw std::logic_error("unknown PredictionMethod");
}

PredictionMethod prediction_method_from_string(const std::string& name) {
    if (name == "straight_line") return PredictionMethod::StraightLine;
    if (name == "virtual_target") return PredictionMethod::VirtualTarget;
    throw std::invalid_argument("unknown prediction method '" + name +
                                "' (expected straight_line or virtual_target)");
}

namespace {

long long integral_ratio(double f_sim, double f_law, const char* name) {
    const double ratio = f_sim / f_law;
    const long long rounded = std::llround(ratio);
    if (rounded < 1 || std::abs(ratio - static_cast<double>(rounded)) > 1e-9 * ratio) {
        throw std::invalid_argument(std::string("EngagementConfig: f_sim must be an integer "
                                                "multiple of ") + name);
    }
    return rounded;
}

}  // namespace

long long EngagementConfig::zem_period_steps() const {
    return integral_ratio(f_sim, f_zem, "f_zem");
}

long long EngagementConfig::pn_period_steps() const {
    return integral_ratio(f_sim, f_pn, "f_pn");
}

void EngagementConfig::validate() const {
    if (!(f_sim > 0.0) || !(f_pn > 0.0) || !(f_zem > 0.0)) {
        throw std::invalid_argument("EngagementConfig: frequencies must be positive");
    }
    integral_ratio(f_sim, f_pn, "f_pn");
    integral_ratio(f_sim, f_zem, "f_zem");
    if (!(d_hit < d_endgame)) {
        throw std::invalid_argument("EngagementConfig: d_hit must be < d_endgame");
    }
    if (!(d_hit > 0.0)) {
        throw std::invalid_argument("EngagementConfig: d_hit must be positive");
    }
    if (n_t < 2) {
        throw std::invalid_argument("EngagementConfig: n_t must be >= 2");
    }
    if (n_s < 1) {
        throw std::invalid_argument("EngagementConfig: n_s must be >= 1");
    }
    if (m_targets < 0 || n_interceptors < 0) {
        throw std::invalid_argument("EngagementConfig: vehicle counts must be non-negative");
    }
    if (!(t_max > 0.0)) {
        throw std::invalid_argument("EngagementConfig: t_max must be positive");
    }
    if (!(nav_gain > 0.0) || !(a_max > 0.0)) {
        throw std::invalid_argument("EngagementConfig: nav_gain and a_max must be positive");
    }
    if (m_targets > 0 && target_init_vel.norm() < 1e-12) {
        throw std::invalid_argument("EngagementConfig: target speed must be positive");
    }
    if (n_interceptors > 0 && interceptor_init_vel.norm() < 1e-12) {
        throw std::invalid_argument("EngagementConfig: interceptor speed must be positive");
    }
    if (!target_init_pos.is_finite() || !target_init_vel.is_finite() ||
        !interceptor_init_pos.is_finite() || !interceptor_init_vel.is_finite()) {
        throw std::invalid_argument("EngagementConfig: non-finite initial state");
    }
    maneuver.validate();
}

}  // namespace vtsim
