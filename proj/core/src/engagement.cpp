#include "vtsim/engagement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "vtsim/maneuver.hpp"
#include "vtsim/predict.hpp"
#include "vtsim/rng.hpp"
#include "vtsim/trajectory.hpp"
#include "vtsim/virtual_targets.hpp"

namespace vtsim {

namespace {

// Substream tags: target maneuvers must not depend on the prediction method,
// so the maneuver stream is derived from (seed, maneuver seed, tag, target)
// only. Sampling and clustering get their own per-tick streams.
constexpr std::uint64_t kStreamManeuver = 1;
constexpr std::uint64_t kStreamBundle = 2;
constexpr std::uint64_t kStreamCluster = 3;

int nearest_active_target(const std::vector<VehicleState>& targets, Vec2 from) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < targets.size(); ++j) {
        if (!targets[j].active) {
            continue;
        }
        const double d = distance(from, targets[j].position);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(j);
        }
    }
    return best;
}

void dump_row(std::ostream& out, double t, int id, const char* kind,
              const VehicleState& v, const char* phase) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "%.6f,%d,%s,%.6f,%.6f,%.6f,%.6f,%s\n", t, id, kind,
                  v.position.x, v.position.y, v.velocity.x, v.velocity.y, phase);
    out << buf;
}

}  // namespace

CpaResult segment_cpa(Vec2 rel0, Vec2 rel1) {
    const Vec2 d = rel1 - rel0;
    const double dd = d.norm2();
    CpaResult r;
    r.s = dd > 0.0 ? std::clamp(-rel0.dot(d) / dd, 0.0, 1.0) : 0.0;
    r.miss = (rel0 + d * r.s).norm();
    return r;
}

std::vector<HitRecord> detect_hits(const std::vector<VehicleState>& prev_interceptors,
                                   const std::vector<VehicleState>& prev_targets,
                                   std::vector<VehicleState>& interceptors,
                                   std::vector<VehicleState>& targets, double d_hit,
                                   double t0, double dt) {
    if (prev_interceptors.size() != interceptors.size() ||
        prev_targets.size() != targets.size()) {
        throw std::invalid_argument("detect_hits: state lists changed size between steps");
    }

    struct Candidate {
        double miss;
        double time;
        int interceptor;
        int target;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < interceptors.size(); ++i) {
        if (!interceptors[i].active) {
            continue;
        }
        for (std::size_t j = 0; j < targets.size(); ++j) {
            if (!targets[j].active) {
                continue;
            }
            const CpaResult cpa =
                segment_cpa(prev_interceptors[i].position - prev_targets[j].position,
                            interceptors[i].position - targets[j].position);
            if (cpa.miss <= d_hit) {
                candidates.push_back({cpa.miss, t0 + cpa.s * dt, static_cast<int>(i),
                                      static_cast<int>(j)});
            }
        }
    }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.miss != b.miss) return a.miss < b.miss;
        if (a.interceptor != b.interceptor) return a.interceptor < b.interceptor;
        return a.target < b.target;
    });

    std::vector<HitRecord> hits;
    for (const Candidate& c : candidates) {
        if (!interceptors[static_cast<std::size_t>(c.interceptor)].active ||
            !targets[static_cast<std::size_t>(c.target)].active) {
            continue;  // participant already consumed by a closer pair
        }
        interceptors[static_cast<std::size_t>(c.interceptor)].active = false;
        targets[static_cast<std::size_t>(c.target)].active = false;
        hits.push_back({c.time, c.interceptor, c.target, c.miss});
    }

    // Report in chronological order so event logs stay monotone even when
    // several hits land within one step.
    std::sort(hits.begin(), hits.end(), [](const HitRecord& a, const HitRecord& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.interceptor < b.interceptor;
    });
    return hits;
}

RunResult run_engagement(const EngagementConfig& config, std::uint64_t seed,
                         const RunOptions& options) {
    config.validate();
    const double dt = config.sim_dt();
    const long long zem_every = config.zem_period_steps();
    const long long pn_every = config.pn_period_steps();
    const long long total_steps = std::llround(config.t_max * config.f_sim);
    if (total_steps < 1) {
        throw std::invalid_argument("run_engagement: t_max shorter than one sim step");
    }

    const int m = config.m_targets;
    const int n = config.n_interceptors;
    const bool virtual_target = config.prediction_method == PredictionMethod::VirtualTarget;

    RunResult result;
    result.seed = seed;
    result.config = config;
    result.closest_approach.assign(static_cast<std::size_t>(n),
                                   std::numeric_limits<double>::infinity());
    if (virtual_target && n > 0 && n < m) {
        result.flags.push_back("vt_fewer_interceptors_than_targets");
    }

    std::vector<VehicleState> targets(static_cast<std::size_t>(m));
    for (VehicleState& t : targets) {
        t.position = config.target_init_pos;
        t.velocity = config.target_init_vel;
    }
    std::vector<VehicleState> interceptors(static_cast<std::size_t>(n));
    for (VehicleState& ic : interceptors) {
        ic.position = config.interceptor_init_pos;
        ic.velocity = config.interceptor_init_vel;
    }

    std::vector<ManeuverSampler> samplers;
    samplers.reserve(targets.size());
    for (int j = 0; j < m; ++j) {
        samplers.emplace_back(config.maneuver,
                              Rng(derive_seed(seed, config.maneuver.rng_seed, kStreamManeuver,
                                              static_cast<std::uint64_t>(j))),
                              0.0);
    }

    std::vector<GuidancePhase> phases(static_cast<std::size_t>(n));
    std::vector<Vec2> held(static_cast<std::size_t>(n), Vec2{0.0, 0.0});
    // VT slot owned by each interceptor; -1 once the interceptor is spent.
    std::vector<int> slot_of(static_cast<std::size_t>(n));
    std::iota(slot_of.begin(), slot_of.end(), 0);
    std::optional<VirtualTargetSet> vt_set;

    const double target_speed0 = m > 0 ? config.target_init_vel.norm() : 1.0;
    const double interceptor_speed0 = n > 0 ? config.interceptor_init_vel.norm() : 1.0;

    if (options.trajectory_dump != nullptr) {
        *options.trajectory_dump << "time,id,kind,x,y,vx,vy,phase\n";
    }

    const auto note_command = [&result](Vec2 cmd) {
        result.max_command_norm = std::max(result.max_command_norm, cmd.norm());
    };

    double t_end = config.t_max;
    std::vector<VehicleState> prev_targets;
    std::vector<VehicleState> prev_interceptors;

    for (long long step = 0; step < total_steps; ++step) {
        const double now = static_cast<double>(step) * dt;
        const double t_next = static_cast<double>(step + 1) * dt;

        const bool any_target = std::any_of(targets.begin(), targets.end(),
                                            [](const VehicleState& v) { return v.active; });

        // (1) Midcourse guidance tick.
        if (step % zem_every == 0 && any_target) {
            bool any_midcourse = false;
            int active_interceptors = 0;
            for (std::size_t i = 0; i < interceptors.size(); ++i) {
                if (!interceptors[i].active) continue;
                ++active_interceptors;
                if (!phases[i].is_endgame()) any_midcourse = true;
            }
            if (any_midcourse) {
                const std::vector<double> times = horizon(now, config.t_max, config.n_t);
                if (virtual_target) {
                    // The bundle snaps the horizon to the sim grid; when the
                    // remaining horizon is finer than one sim step the last
                    // command simply stays held.
                    if ((config.t_max - now) / config.n_t >= dt * (1.0 - 1e-9)) {
                        Rng bundle_rng(derive_seed(seed, config.maneuver.rng_seed,
                                                   kStreamBundle,
                                                   static_cast<std::uint64_t>(step)));
                        const SampleBundle bundle =
                            sample_bundle(targets, config.maneuver, config.n_s, times, now,
                                          dt, bundle_rng);
                        Rng cluster_rng(derive_seed(seed, kStreamCluster,
                                                    static_cast<std::uint64_t>(step)));
                        vt_set = update_vts(bundle, active_interceptors, cluster_rng,
                                            vt_set ? &*vt_set : nullptr);
                        for (std::size_t i = 0; i < interceptors.size(); ++i) {
                            if (!interceptors[i].active || phases[i].is_endgame()) continue;
                            const int slot =
                                std::min(slot_of[i], static_cast<int>(vt_set->size()) - 1);
                            const Trajectory& vt = vt_set->vts[static_cast<std::size_t>(slot)];
                            const Trajectory ipred =
                                predict_interceptor(interceptors[i], vt.times, now);
                            const TgoResult tgo = compute_tgo(ipred, vt, now);
                            held[i] = zem_accel(tgo.r_at_tgo, tgo.t_go, config.nav_gain,
                                                config.a_max);
                            note_command(held[i]);
                        }
                    }
                } else {
                    for (std::size_t i = 0; i < interceptors.size(); ++i) {
                        if (!interceptors[i].active || phases[i].is_endgame()) continue;
                        // Sequential assignment; if the assigned target is
                        // already destroyed, fall back to the nearest
                        // survivor rather than coasting blind.
                        int tj = static_cast<int>(i) % m;
                        if (!targets[static_cast<std::size_t>(tj)].active) {
                            tj = nearest_active_target(targets, interceptors[i].position);
                        }
                        const Trajectory tpred =
                            predict_straight(targets[static_cast<std::size_t>(tj)], times, now);
                        const Trajectory ipred =
                            predict_interceptor(interceptors[i], times, now);
                        const TgoResult tgo = compute_tgo(ipred, tpred, now);
                        held[i] =
                            zem_accel(tgo.r_at_tgo, tgo.t_go, config.nav_gain, config.a_max);
                        note_command(held[i]);
                    }
                }
            }
        }

        // (2) Endgame guidance tick.
        if (step % pn_every == 0) {
            for (std::size_t i = 0; i < interceptors.size(); ++i) {
                if (!interceptors[i].active || !phases[i].is_endgame()) continue;
                const int lt = phases[i].locked_target;
                if (lt >= 0 && targets[static_cast<std::size_t>(lt)].active) {
                    held[i] = pn_accel(interceptors[i], targets[static_cast<std::size_t>(lt)],
                                       config.nav_gain, config.a_max);
                    note_command(held[i]);
                }
                // A dead lock with no survivors means coasting on the last
                // command; relocking happened at the end of the prior step.
            }
        }

        if (options.trajectory_dump != nullptr) {
            for (std::size_t j = 0; j < targets.size(); ++j) {
                if (targets[j].active) {
                    dump_row(*options.trajectory_dump, now, static_cast<int>(j), "target",
                             targets[j], "-");
                }
            }
            for (std::size_t i = 0; i < interceptors.size(); ++i) {
                if (interceptors[i].active) {
                    dump_row(*options.trajectory_dump, now, static_cast<int>(i), "interceptor",
                             interceptors[i], phases[i].is_endgame() ? "endgame" : "midcourse");
                }
            }
        }
        if (options.on_step) {
            StepView view;
            view.step = step;
            view.t0 = now;
            view.t1 = t_next;
            view.targets = targets;
            view.interceptors = interceptors;
            view.held_commands = held;
            view.phases = phases;
            if (vt_set) {
                view.virtual_targets = vt_set->vts;
            }
            view.vt_slot_of = slot_of;
            options.on_step(view);
        }

        // (3) Integrate actives under zero-order-hold commands.
        prev_targets = targets;
        prev_interceptors = interceptors;
        for (std::size_t j = 0; j < targets.size(); ++j) {
            if (!targets[j].active) continue;
            const double lat = samplers[j].command_at(now);
            const double speed = targets[j].velocity.norm();
            targets[j] = apply_turn(targets[j], make_turn_step(lat, speed, dt));
            result.max_speed_drift =
                std::max(result.max_speed_drift,
                         std::abs(targets[j].velocity.norm() - target_speed0) / target_speed0);
        }
        for (std::size_t i = 0; i < interceptors.size(); ++i) {
            if (!interceptors[i].active) continue;
            interceptors[i] = step_vehicle(interceptors[i], held[i], dt);
            result.max_speed_drift =
                std::max(result.max_speed_drift,
                         std::abs(interceptors[i].velocity.norm() - interceptor_speed0) /
                             interceptor_speed0);
        }

        // (4) Hit detection, with the closest-approach bookkeeping sharing
        // the same per-pair CPA scan semantics.
        for (std::size_t i = 0; i < interceptors.size(); ++i) {
            if (!interceptors[i].active) continue;
            for (std::size_t j = 0; j < targets.size(); ++j) {
                if (!targets[j].active) continue;
                const CpaResult cpa =
                    segment_cpa(prev_interceptors[i].position - prev_targets[j].position,
                                interceptors[i].position - targets[j].position);
                result.closest_approach[i] = std::min(result.closest_approach[i], cpa.miss);
            }
        }
        const std::vector<HitRecord> hits = detect_hits(prev_interceptors, prev_targets,
                                                        interceptors, targets, config.d_hit,
                                                        now, dt);
        for (const HitRecord& h : hits) {
            result.hit_records.push_back(h);
            result.events.push_back(
                {h.time, EngagementEvent::Kind::Hit, h.interceptor, h.target, h.miss});
            if (virtual_target && vt_set && slot_of[static_cast<std::size_t>(h.interceptor)] >= 0) {
                const int slot = slot_of[static_cast<std::size_t>(h.interceptor)];
                if (slot < static_cast<int>(vt_set->size())) {
                    remove_vt(*vt_set, slot);
                }
                slot_of[static_cast<std::size_t>(h.interceptor)] = -1;
                for (int& s : slot_of) {
                    if (s > slot) --s;
                }
            }
        }

        // (5) Phase transitions (one-way; relock when a lock dies).
        for (std::size_t i = 0; i < interceptors.size(); ++i) {
            if (!interceptors[i].active) continue;
            const GuidancePhase next =
                maybe_switch_phase(phases[i], interceptors[i], targets, config.d_endgame);
            if (next.kind != phases[i].kind) {
                result.events.push_back({t_next, EngagementEvent::Kind::EndgameEntry,
                                         static_cast<int>(i), next.locked_target, 0.0});
            } else if (next.is_endgame() && next.locked_target != phases[i].locked_target) {
                result.events.push_back({t_next, EngagementEvent::Kind::Relock,
                                         static_cast<int>(i), next.locked_target, 0.0});
            }
            phases[i] = next;
        }

        const bool targets_left = std::any_of(targets.begin(), targets.end(),
                                              [](const VehicleState& v) { return v.active; });
        const bool interceptors_left =
            std::any_of(interceptors.begin(), interceptors.end(),
                        [](const VehicleState& v) { return v.active; });
        if (!targets_left && !interceptors_left) {
            t_end = t_next;
            break;
        }
    }

    if (options.trajectory_dump != nullptr) {
        for (std::size_t j = 0; j < targets.size(); ++j) {
            if (targets[j].active) {
                dump_row(*options.trajectory_dump, t_end, static_cast<int>(j), "target",
                         targets[j], "-");
            }
        }
        for (std::size_t i = 0; i < interceptors.size(); ++i) {
            if (interceptors[i].active) {
                dump_row(*options.trajectory_dump, t_end, static_cast<int>(i), "interceptor",
                         interceptors[i], phases[i].is_endgame() ? "endgame" : "midcourse");
            }
        }
    }

    result.terminated_at = t_end;
    result.hits = static_cast<int>(result.hit_records.size());
    return result;
}

}  // namespace vtsim
