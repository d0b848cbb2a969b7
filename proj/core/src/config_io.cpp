#include "vtsim/config_io.hpp"

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>

namespace vtsim {

namespace {

std::string trim(const std::string& s) {
    const std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for " + key + ": '" + value + "'");
    }
    if (trim(value.substr(used)) != "") {
        throw std::invalid_argument("config: trailing junk for " + key + ": '" + value + "'");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw std::invalid_argument("config: " + key + " must be an integer, got '" +
                                    value + "'");
    }
    return i;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(trim(value), &used);
        if (trim(trim(value).substr(used)) != "") {
            throw std::invalid_argument("trailing junk");
        }
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad unsigned integer for " + key + ": '" +
                                    value + "'");
    }
}

}  // namespace

Vec2 parse_vec2(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("config: expected 'x,y', got '" + text + "'");
    }
    return Vec2{parse_double("x", trim(text.substr(0, comma))),
                parse_double("y", trim(text.substr(comma + 1)))};
}

void apply_config_kv(EngagementConfig& config, const std::string& key,
                     const std::string& value) {
    if (key == "nav_gain") {
        config.nav_gain = parse_double(key, value);
    } else if (key == "a_max") {
        config.a_max = parse_double(key, value);
    } else if (key == "f_sim") {
        config.f_sim = parse_double(key, value);
    } else if (key == "f_pn") {
        config.f_pn = parse_double(key, value);
    } else if (key == "f_zem") {
        config.f_zem = parse_double(key, value);
    } else if (key == "n_t") {
        config.n_t = parse_int(key, value);
    } else if (key == "n_s") {
        config.n_s = parse_int(key, value);
    } else if (key == "m_targets") {
        config.m_targets = parse_int(key, value);
    } else if (key == "n_interceptors") {
        config.n_interceptors = parse_int(key, value);
    } else if (key == "target_init_pos") {
        config.target_init_pos = parse_vec2(value);
    } else if (key == "target_init_vel") {
        config.target_init_vel = parse_vec2(value);
    } else if (key == "interceptor_init_pos") {
        config.interceptor_init_pos = parse_vec2(value);
    } else if (key == "interceptor_init_vel") {
        config.interceptor_init_vel = parse_vec2(value);
    } else if (key == "d_endgame_m") {
        config.d_endgame = parse_double(key, value);
    } else if (key == "d_hit_m") {
        config.d_hit = parse_double(key, value);
    } else if (key == "t_max_s") {
        config.t_max = parse_double(key, value);
    } else if (key == "maneuver_a_lat_max") {
        config.maneuver.a_lat_max_target = parse_double(key, value);
    } else if (key == "maneuver_seg_min_s") {
        config.maneuver.segment_duration_min = parse_double(key, value);
    } else if (key == "maneuver_seg_max_s") {
        config.maneuver.segment_duration_max = parse_double(key, value);
    } else if (key == "maneuver_seed") {
        config.maneuver.rng_seed = parse_u64(key, value);
    } else if (key == "prediction_method") {
        config.prediction_method = prediction_method_from_string(trim(value));
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

EngagementConfig parse_config_text(std::istream& in, EngagementConfig defaults) {
    EngagementConfig config = defaults;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": empty key or value");
        }
        try {
            apply_config_kv(config, key, value);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " +
                                        e.what());
        }
    }
    return config;
}

}  // namespace vtsim
