#include "vtsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace vtsim {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_or_null(double v) {
    if (std::isnan(v)) {
        return nullptr;
    }
    return v;
}

double double_or_nan(const ordered_json& j) {
    if (j.is_null()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return j.get<double>();
}

ordered_json vec2_to_json(Vec2 v) { return ordered_json::array({v.x, v.y}); }

Vec2 vec2_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("report: expected a [x, y] pair");
    }
    return Vec2{j[0].get<double>(), j[1].get<double>()};
}

ordered_json config_to_json(const EngagementConfig& c) {
    ordered_json j;
    j["nav_gain"] = c.nav_gain;
    j["a_max"] = c.a_max;
    j["f_sim"] = c.f_sim;
    j["f_pn"] = c.f_pn;
    j["f_zem"] = c.f_zem;
    j["n_t"] = c.n_t;
    j["n_s"] = c.n_s;
    j["m_targets"] = c.m_targets;
    j["n_interceptors"] = c.n_interceptors;
    j["target_init_pos"] = vec2_to_json(c.target_init_pos);
    j["target_init_vel"] = vec2_to_json(c.target_init_vel);
    j["interceptor_init_pos"] = vec2_to_json(c.interceptor_init_pos);
    j["interceptor_init_vel"] = vec2_to_json(c.interceptor_init_vel);
    j["d_endgame_m"] = c.d_endgame;
    j["d_hit_m"] = c.d_hit;
    j["t_max_s"] = c.t_max;
    j["maneuver_a_lat_max"] = c.maneuver.a_lat_max_target;
    j["maneuver_seg_min_s"] = c.maneuver.segment_duration_min;
    j["maneuver_seg_max_s"] = c.maneuver.segment_duration_max;
    j["maneuver_seed"] = c.maneuver.rng_seed;
    j["prediction_method"] = to_string(c.prediction_method);
    return j;
}

EngagementConfig config_from_json(const ordered_json& j) {
    EngagementConfig c;
    c.nav_gain = j.at("nav_gain").get<double>();
    c.a_max = j.at("a_max").get<double>();
    c.f_sim = j.at("f_sim").get<double>();
    c.f_pn = j.at("f_pn").get<double>();
    c.f_zem = j.at("f_zem").get<double>();
    c.n_t = j.at("n_t").get<int>();
    c.n_s = j.at("n_s").get<int>();
    c.m_targets = j.at("m_targets").get<int>();
    c.n_interceptors = j.at("n_interceptors").get<int>();
    c.target_init_pos = vec2_from_json(j.at("target_init_pos"));
    c.target_init_vel = vec2_from_json(j.at("target_init_vel"));
    c.interceptor_init_pos = vec2_from_json(j.at("interceptor_init_pos"));
    c.interceptor_init_vel = vec2_from_json(j.at("interceptor_init_vel"));
    c.d_endgame = j.at("d_endgame_m").get<double>();
    c.d_hit = j.at("d_hit_m").get<double>();
    c.t_max = j.at("t_max_s").get<double>();
    c.maneuver.a_lat_max_target = j.at("maneuver_a_lat_max").get<double>();
    c.maneuver.segment_duration_min = j.at("maneuver_seg_min_s").get<double>();
    c.maneuver.segment_duration_max = j.at("maneuver_seg_max_s").get<double>();
    c.maneuver.rng_seed = j.at("maneuver_seed").get<std::uint64_t>();
    c.prediction_method =
        prediction_method_from_string(j.at("prediction_method").get<std::string>());
    return c;
}

}  // namespace

void write_csv(const AggregateResult& agg, std::ostream& out) {
    out << "m,n,method,runs,hits,possible,fraction,ci_lo,ci_hi,mean_hit_time_s\n";
    for (const CellResult& cell : agg.cells) {
        if (!cell.error.empty()) {
            continue;
        }
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%d,%d,%s,%d,%d,%d,%.6f,%.6f,%.6f,%.6f\n", cell.m,
                      cell.n, to_string(cell.method), cell.runs, cell.hits, cell.possible,
                      cell.fraction, cell.ci.lo, cell.ci.hi, cell.mean_hit_time);
        out << buf;
    }
}

void write_json(const AggregateResult& agg, std::ostream& out) {
    ordered_json j;
    j["base_seed"] = agg.spec.base_seed;
    j["n_mc"] = agg.spec.n_mc;
    j["m_values"] = agg.spec.m_values;
    j["n_values"] = agg.spec.n_values;
    ordered_json methods = ordered_json::array();
    for (PredictionMethod m : agg.spec.methods) {
        methods.push_back(to_string(m));
    }
    j["methods"] = methods;
    j["config"] = config_to_json(agg.spec.base_config);

    ordered_json cells = ordered_json::array();
    for (const CellResult& cell : agg.cells) {
        ordered_json c;
        c["m"] = cell.m;
        c["n"] = cell.n;
        c["method"] = to_string(cell.method);
        c["runs"] = cell.runs;
        c["hits"] = cell.hits;
        c["possible"] = cell.possible;
        c["fraction"] = cell.fraction;
        c["ci_lo"] = cell.ci.lo;
        c["ci_hi"] = cell.ci.hi;
        c["mean_hit_time_s"] = json_or_null(cell.mean_hit_time);
        c["mean_miss_closest_m"] = json_or_null(cell.mean_miss_closest);
        if (!cell.error.empty()) {
            c["error"] = cell.error;
        }
        cells.push_back(std::move(c));
    }
    j["cells"] = cells;
    out << j.dump(2) << "\n";
}

AggregateResult read_json(std::istream& in) {
    ordered_json j = ordered_json::parse(in);
    AggregateResult agg;
    agg.spec.base_seed = j.at("base_seed").get<std::uint64_t>();
    agg.spec.n_mc = j.at("n_mc").get<int>();
    agg.spec.m_values = j.at("m_values").get<std::vector<int>>();
    agg.spec.n_values = j.at("n_values").get<std::vector<int>>();
    for (const ordered_json& m : j.at("methods")) {
        agg.spec.methods.push_back(prediction_method_from_string(m.get<std::string>()));
    }
    agg.spec.base_config = config_from_json(j.at("config"));

    for (const ordered_json& c : j.at("cells")) {
        CellResult cell;
        cell.m = c.at("m").get<int>();
        cell.n = c.at("n").get<int>();
        cell.method = prediction_method_from_string(c.at("method").get<std::string>());
        cell.runs = c.at("runs").get<int>();
        cell.hits = c.at("hits").get<int>();
        cell.possible = c.at("possible").get<int>();
        cell.fraction = c.at("fraction").get<double>();
        cell.ci.lo = c.at("ci_lo").get<double>();
        cell.ci.hi = c.at("ci_hi").get<double>();
        cell.mean_hit_time = double_or_nan(c.at("mean_hit_time_s"));
        cell.mean_miss_closest = double_or_nan(c.at("mean_miss_closest_m"));
        if (c.contains("error")) {
            cell.error = c.at("error").get<std::string>();
        }
        agg.cells.push_back(std::move(cell));
    }
    return agg;
}

}  // namespace vtsim
