// Command-line front end: single engagements, Monte Carlo sweeps over
// (m, n, method), and paired method comparisons.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vtsim/config_io.hpp"
#include "vtsim/engagement.hpp"
#include "vtsim/report.hpp"
#include "vtsim/stats.hpp"
#include "vtsim/sweep.hpp"

namespace {

int default_jobs() {
    if (const char* env = std::getenv("VTSIM_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) {
            return v;
        }
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

vtsim::EngagementConfig build_config(const std::string& config_path,
                                     const std::vector<std::string>& sets) {
    vtsim::EngagementConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            throw std::runtime_error("cannot open config file: " + config_path);
        }
        config = vtsim::parse_config_text(in, config);
    }
    for (const std::string& kv : sets) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("--set expects key=value, got '" + kv + "'");
        }
        vtsim::apply_config_kv(config, kv.substr(0, eq), kv.substr(eq + 1));
    }
    return config;
}

std::vector<vtsim::PredictionMethod> parse_methods(const std::vector<std::string>& names) {
    std::vector<vtsim::PredictionMethod> methods;
    methods.reserve(names.size());
    for (const std::string& name : names) {
        methods.push_back(vtsim::prediction_method_from_string(name));
    }
    return methods;
}

/// Index-ordered parallel for: each task writes only its own slot, so the
/// result is identical for any job count.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                fn(i);
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
}

int cmd_run(const vtsim::EngagementConfig& config, std::uint64_t seed,
            const std::string& traj_out) {
    vtsim::RunOptions options;
    std::ofstream dump;
    if (!traj_out.empty()) {
        dump.open(traj_out);
        if (!dump) {
            throw std::runtime_error("cannot open trajectory output: " + traj_out);
        }
        options.trajectory_dump = &dump;
    }
    const vtsim::RunResult result = vtsim::run_engagement(config, seed, options);

    std::printf("method=%s m=%d n=%d seed=%llu\n", vtsim::to_string(config.prediction_method),
                config.m_targets, config.n_interceptors,
                static_cast<unsigned long long>(seed));
    for (const vtsim::HitRecord& h : result.hit_records) {
        std::printf("hit t=%.3f s interceptor=%d target=%d miss=%.3f m\n", h.time,
                    h.interceptor, h.target, h.miss);
    }
    std::printf("hits=%d/%d terminated_at=%.3f s max_command=%.3f m/s^2\n", result.hits,
                config.m_targets, result.terminated_at, result.max_command_norm);
    for (const std::string& flag : result.flags) {
        std::printf("flag: %s\n", flag.c_str());
    }
    if (!traj_out.empty()) {
        std::printf("trajectories written to %s\n", traj_out.c_str());
    }
    return 0;
}

int cmd_sweep(const vtsim::EngagementConfig& base, const std::vector<int>& ms,
              const std::vector<int>& ns, const std::vector<std::string>& method_names,
              int runs, std::uint64_t seed, const std::string& out_csv,
              const std::string& out_json, int jobs) {
    vtsim::SweepSpec spec;
    spec.base_config = base;
    spec.m_values = ms;
    spec.n_values = ns;
    spec.methods = parse_methods(method_names);
    spec.n_mc = runs;
    spec.base_seed = seed;

    const vtsim::AggregateResult agg = vtsim::run_sweep(spec, jobs);

    vtsim::write_csv(agg, std::cout);
    if (!out_csv.empty()) {
        std::ofstream out(out_csv);
        if (!out) {
            throw std::runtime_error("cannot open CSV output: " + out_csv);
        }
        vtsim::write_csv(agg, out);
    }
    if (!out_json.empty()) {
        std::ofstream out(out_json);
        if (!out) {
            throw std::runtime_error("cannot open JSON output: " + out_json);
        }
        vtsim::write_json(agg, out);
    }

    int failed = 0;
    for (const vtsim::CellResult& cell : agg.cells) {
        if (!cell.error.empty()) {
            ++failed;
            std::fprintf(stderr, "cell m=%d n=%d method=%s failed: %s\n", cell.m, cell.n,
                         vtsim::to_string(cell.method), cell.error.c_str());
        }
    }
    return failed > 0 ? 1 : 0;
}

int cmd_compare(const vtsim::EngagementConfig& base, int m, int n, int runs,
                std::uint64_t seed, int jobs) {
    // Task layout: [0, runs) straight-line, [runs, 2*runs) virtual-target,
    // with run r of both methods sharing one derived seed (paired design).
    std::vector<int> hits(static_cast<std::size_t>(2 * runs), 0);
    std::vector<std::string> errors(static_cast<std::size_t>(2 * runs));
    parallel_for(static_cast<std::size_t>(2 * runs), jobs, [&](std::size_t task) {
        const int r = static_cast<int>(task % static_cast<std::size_t>(runs));
        vtsim::EngagementConfig config = base;
        config.m_targets = m;
        config.n_interceptors = n;
        config.prediction_method = task < static_cast<std::size_t>(runs)
                                       ? vtsim::PredictionMethod::StraightLine
                                       : vtsim::PredictionMethod::VirtualTarget;
        try {
            hits[task] =
                vtsim::run_engagement(config, vtsim::run_seed_for(seed, m, n, r)).hits;
        } catch (const std::exception& e) {
            errors[task] = e.what();
        }
    });
    for (std::size_t task = 0; task < errors.size(); ++task) {
        if (!errors[task].empty()) {
            throw std::runtime_error("run " + std::to_string(task % runs) + " (" +
                                     (task < static_cast<std::size_t>(runs)
                                          ? "straight_line"
                                          : "virtual_target") +
                                     ") failed: " + errors[task]);
        }
    }

    int sl_total = 0;
    int vt_total = 0;
    int vt_wins = 0;
    int sl_wins = 0;
    int ties = 0;
    for (int r = 0; r < runs; ++r) {
        const int sl = hits[static_cast<std::size_t>(r)];
        const int vt = hits[static_cast<std::size_t>(runs + r)];
        sl_total += sl;
        vt_total += vt;
        if (vt > sl) {
            ++vt_wins;
        } else if (sl > vt) {
            ++sl_wins;
        } else {
            ++ties;
        }
    }

    const int possible = m * runs;
    const vtsim::Interval sl_ci = vtsim::wilson_ci(sl_total, possible, 1.96);
    const vtsim::Interval vt_ci = vtsim::wilson_ci(vt_total, possible, 1.96);
    const double p = vtsim::sign_test_p(vt_wins, sl_wins);

    std::printf("paired comparison: m=%d n=%d runs=%d base_seed=%llu\n", m, n, runs,
                static_cast<unsigned long long>(seed));
    std::printf("  straight_line : %d/%d hits, fraction %.4f, 95%% CI [%.4f, %.4f]\n",
                sl_total, possible, static_cast<double>(sl_total) / possible, sl_ci.lo,
                sl_ci.hi);
    std::printf("  virtual_target: %d/%d hits, fraction %.4f, 95%% CI [%.4f, %.4f]\n",
                vt_total, possible, static_cast<double>(vt_total) / possible, vt_ci.lo,
                vt_ci.hi);
    std::printf("  per run: virtual_target better in %d, straight_line better in %d, tied in %d\n",
                vt_wins, sl_wins, ties);
    std::printf("  exact two-sided sign test: p = %.6g\n", p);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic 2D many-vs-many missile engagement simulator comparing "
                 "virtual-target guidance against straight-line prediction"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    app.add_option("--config", config_path, "key = value scenario file")
        ->check(CLI::ExistingFile);
    app.add_option("--set", sets, "override one scenario key (key=value, repeatable)");

    auto* run = app.add_subcommand("run", "simulate one engagement");
    run->fallthrough();
    int run_m = 1;
    int run_n = 1;
    std::string run_method;
    std::uint64_t run_seed = 0;
    std::string traj_out;
    run->add_option("-m,--targets", run_m, "number of targets");
    run->add_option("-n,--interceptors", run_n, "number of interceptors");
    run->add_option("--method", run_method, "straight_line or virtual_target");
    run->add_option("--seed", run_seed, "run seed");
    run->add_option("--traj-out", traj_out, "write per-step vehicle states (CSV)");

    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over (m, n, method)");
    sweep->fallthrough();
    std::vector<int> sweep_m{1};
    std::vector<int> sweep_n{1};
    std::vector<std::string> sweep_methods{"straight_line", "virtual_target"};
    int sweep_runs = 100;
    std::uint64_t sweep_seed = 0;
    std::string out_csv;
    std::string out_json;
    int sweep_jobs = default_jobs();
    sweep->add_option("--m", sweep_m, "target counts");
    sweep->add_option("--n", sweep_n, "interceptor counts");
    sweep->add_option("--methods", sweep_methods, "prediction methods to sweep");
    sweep->add_option("--runs", sweep_runs, "Monte Carlo runs per cell");
    sweep->add_option("--seed", sweep_seed, "base seed");
    sweep->add_option("--out-csv", out_csv, "aggregate CSV path");
    sweep->add_option("--out-json", out_json, "full JSON report path");
    sweep->add_option("--jobs", sweep_jobs, "worker threads (default $VTSIM_JOBS or cores)");

    auto* compare = app.add_subcommand("compare", "paired baseline-vs-VT comparison");
    compare->fallthrough();
    int cmp_m = 1;
    int cmp_n = 1;
    int cmp_runs = 100;
    std::uint64_t cmp_seed = 0;
    int cmp_jobs = default_jobs();
    compare->add_option("-m,--targets", cmp_m, "number of targets");
    compare->add_option("-n,--interceptors", cmp_n, "number of interceptors");
    compare->add_option("--runs", cmp_runs, "paired runs");
    compare->add_option("--seed", cmp_seed, "base seed");
    compare->add_option("--jobs", cmp_jobs, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        vtsim::EngagementConfig config = build_config(config_path, sets);
        if (run->parsed()) {
            config.m_targets = run_m;
            config.n_interceptors = run_n;
            if (!run_method.empty()) {
                config.prediction_method = vtsim::prediction_method_from_string(run_method);
            }
            return cmd_run(config, run_seed, traj_out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(config, sweep_m, sweep_n, sweep_methods, sweep_runs, sweep_seed,
                             out_csv, out_json, sweep_jobs);
        }
        return cmd_compare(config, cmp_m, cmp_n, cmp_runs, cmp_seed, cmp_jobs);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
