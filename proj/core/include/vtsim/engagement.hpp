#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vtsim/config.hpp"
#include "vtsim/guidance.hpp"
#include "vtsim/trajectory.hpp"
#include "vtsim/vec2.hpp"
#include "vtsim/vehicle.hpp"

namespace vtsim {

struct HitRecord {
    double time = 0.0;   ///< seconds, interpolated within the step
    int interceptor = -1;
    int target = -1;
    double miss = 0.0;   ///< closest approach, meters (<= d_hit)
};

struct EngagementEvent {
    enum class Kind { Hit, EndgameEntry, Relock };
    double time = 0.0;
    Kind kind = Kind::Hit;
    int interceptor = -1;
    int target = -1;
    double miss = 0.0;  ///< meaningful for Hit events
};

struct RunResult {
    int hits = 0;
    std::vector<HitRecord> hit_records;
    std::vector<double> closest_approach;  ///< per interceptor, min over the run (m)
    double terminated_at = 0.0;            ///< seconds
    std::uint64_t seed = 0;
    EngagementConfig config;               ///< echo of the inputs that produced this
    std::vector<EngagementEvent> events;   ///< time-ordered log
    double max_command_norm = 0.0;         ///< largest guidance command issued (m/s^2)
    double max_speed_drift = 0.0;          ///< largest relative speed change of any vehicle
    std::vector<std::string> flags;        ///< non-fatal conditions worth surfacing
};

/// Point/segment closest approach for the relative position moving linearly
/// from rel0 to rel1 over one step; s is the normalized time in [0, 1].
struct CpaResult {
    double s = 0.0;
    double miss = 0.0;
};
CpaResult segment_cpa(Vec2 rel0, Vec2 rel1);

/// Closest-point-of-approach hit test over one integration step. Every
/// active (interceptor, target) pair whose CPA is within d_hit (inclusive) is
/// a candidate; pairing is resolved smallest miss first (then lowest
/// interceptor id, then lowest target id) with each vehicle participating in
/// at most one hit. Selected participants are deactivated in place. Hit
/// times interpolate within [t0, t0 + dt].
std::vector<HitRecord> detect_hits(const std::vector<VehicleState>& prev_interceptors,
                                   const std::vector<VehicleState>& prev_targets,
                                   std::vector<VehicleState>& interceptors,
                                   std::vector<VehicleState>& targets, double d_hit,
                                   double t0, double dt);

/// Snapshot handed to RunOptions::on_step just before integration.
struct StepView {
    long long step = 0;  ///< index of the step about to be integrated
    double t0 = 0.0;
    double t1 = 0.0;
    std::span<const VehicleState> targets;
    std::span<const VehicleState> interceptors;
    std::span<const Vec2> held_commands;
    std::span<const GuidancePhase> phases;
    /// Current representative trajectories (virtual-target method only;
    /// empty before the first clustering update and for the baseline).
    std::span<const Trajectory> virtual_targets;
    /// Slot in virtual_targets owned by each interceptor; -1 once spent.
    std::span<const int> vt_slot_of;
};

struct RunOptions {
    /// When set, receives one CSV record per sim step per active vehicle
    /// (time,id,kind,x,y,vx,vy,phase) plus a final record at termination.
    std::ostream* trajectory_dump = nullptr;
    /// Optional per-step observer for tests and instrumentation.
    std::function<void(const StepView&)> on_step;
};

/// Runs one engagement to completion: t advances in exact multiples of
/// 1/f_sim until t_max, or earlier once every vehicle is inactive. Guidance
/// commands are recomputed on their law's tick and held between ticks.
/// Deterministic: the same (config, seed) yields the same RunResult.
RunResult run_engagement(const EngagementConfig& config, std::uint64_t seed,
                         const RunOptions& options = {});

}  // namespace vtsim
