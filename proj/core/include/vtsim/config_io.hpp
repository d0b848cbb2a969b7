#pragma once

#include <iosfwd>
#include <string>

#include "vtsim/config.hpp"

namespace vtsim {

/// Parses "x,y" into a vector. Throws on malformed input.
Vec2 parse_vec2(const std::string& text);

/// Applies one key/value setting to the config. Keys mirror the scenario
/// parameter table (nav_gain, a_max, f_sim, f_pn, f_zem, n_t, n_s,
/// m_targets, n_interceptors, target_init_pos, target_init_vel,
/// interceptor_init_pos, interceptor_init_vel, d_endgame_m, d_hit_m,
/// t_max_s, maneuver_a_lat_max, maneuver_seg_min_s, maneuver_seg_max_s,
/// maneuver_seed, prediction_method). Unknown keys throw.
void apply_config_kv(EngagementConfig& config, const std::string& key,
                     const std::string& value);

/// Reads a key = value config file ('#' starts a comment, blank lines
/// ignored) on top of the given defaults. Throws with the line number on
/// malformed lines or unknown keys. Does not validate the result; callers
/// validate after applying any overrides.
EngagementConfig parse_config_text(std::istream& in, EngagementConfig defaults = {});

}  // namespace vtsim
