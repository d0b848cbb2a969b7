#pragma once

#include <string>

#include "vtsim/maneuver.hpp"
#include "vtsim/vec2.hpp"

namespace vtsim {

/// Target-trajectory prediction method used by midcourse guidance.
enum class PredictionMethod {
    StraightLine,    // extrapolate current velocity
    VirtualTarget,   // sample, cluster into virtual-target trajectories
};

const char* to_string(PredictionMethod method);
PredictionMethod prediction_method_from_string(const std::string& name);

/// Full scenario description for one engagement. Defaults reproduce the
/// standard head-on scenario: one fast interceptor climbing toward slower
/// targets inbound from 60 km.
struct EngagementConfig {
    double nav_gain = 3.0;        // N, shared by midcourse and endgame laws
    double a_max = 500.0;         // m/s^2 interceptor lateral limit
    double f_sim = 40.0;          // Hz simulation rate
    double f_pn = 40.0;           // Hz endgame guidance rate
    double f_zem = 0.5;           // Hz midcourse guidance rate
    int n_t = 20;                 // prediction horizon steps
    int n_s = 1000;               // samples per target per prediction
    int m_targets = 1;
    int n_interceptors = 1;
    Vec2 target_init_pos{0.0, 60000.0};       // m
    Vec2 target_init_vel{0.0, -200.0};        // m/s
    Vec2 interceptor_init_pos{0.0, 0.0};      // m
    Vec2 interceptor_init_vel{0.0, 500.0};    // m/s
    double d_endgame = 6000.0;    // m, midcourse -> endgame switch radius
    double d_hit = 10.0;          // m, interception threshold
    double t_max = 100.0;         // s
    ManeuverModelParams maneuver;
    PredictionMethod prediction_method = PredictionMethod::VirtualTarget;

    double sim_dt() const { return 1.0 / f_sim; }

    /// Sim steps between guidance updates; valid only after validate().
    long long zem_period_steps() const;
    long long pn_period_steps() const;

    /// Throws std::invalid_argument with a description of the first violated
    /// invariant: positive frequencies with f_sim an integer multiple of both
    /// guidance rates, d_hit < d_endgame, n_t >= 2, n_s >= 1, non-negative
    /// vehicle counts, positive speeds for present vehicles, positive t_max,
    /// and valid maneuver parameters.
    void validate() const;
};

}  // namespace vtsim
