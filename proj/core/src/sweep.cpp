#include "vtsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "vtsim/engagement.hpp"
#include "vtsim/rng.hpp"

namespace vtsim {

void SweepSpec::validate() const {
    if (m_values.empty() || n_values.empty() || methods.empty()) {
        throw std::invalid_argument(
            "sweep: m_values, n_values, and methods must all be non-empty");
    }
    if (n_mc < 1) {
        throw std::invalid_argument("sweep: n_mc must be >= 1");
    }
    for (int m : m_values) {
        if (m < 1) {
            throw std::invalid_argument("sweep: target counts must be >= 1");
        }
    }
    for (int n : n_values) {
        if (n < 0) {
            throw std::invalid_argument("sweep: interceptor counts must be >= 0");
        }
    }
}

std::uint64_t run_seed_for(std::uint64_t base_seed, int m, int n, int run_index) {
    return derive_seed(base_seed, static_cast<std::uint64_t>(m),
                       static_cast<std::uint64_t>(n),
                       static_cast<std::uint64_t>(run_index));
}

namespace {

/// Everything one Monte Carlo run contributes to its cell's aggregate.
struct RunOutcome {
    int hits = 0;
    std::vector<double> hit_times;
    std::vector<double> closest_misses;  ///< closest approach of interceptors that missed
    std::string error;
};

struct CellKey {
    int m;
    int n;
    PredictionMethod method;
};

}  // namespace

AggregateResult run_sweep(const SweepSpec& spec, int parallelism) {
    spec.validate();

    std::vector<CellKey> keys;
    for (int m : spec.m_values) {
        for (int n : spec.n_values) {
            for (PredictionMethod method : spec.methods) {
                keys.push_back({m, n, method});
            }
        }
    }

    const std::size_t runs_per_cell = static_cast<std::size_t>(spec.n_mc);
    const std::size_t total = keys.size() * runs_per_cell;
    std::vector<RunOutcome> outcomes(total);

    const auto execute = [&](std::size_t task) {
        const CellKey& key = keys[task / runs_per_cell];
        const int r = static_cast<int>(task % runs_per_cell);
        EngagementConfig cfg = spec.base_config;
        cfg.m_targets = key.m;
        cfg.n_interceptors = key.n;
        cfg.prediction_method = key.method;
        RunOutcome& slot = outcomes[task];
        try {
            const RunResult rr =
                run_engagement(cfg, run_seed_for(spec.base_seed, key.m, key.n, r));
            slot.hits = rr.hits;
            slot.hit_times.reserve(rr.hit_records.size());
            for (const HitRecord& h : rr.hit_records) {
                slot.hit_times.push_back(h.time);
            }
            std::vector<char> scored(rr.closest_approach.size(), 0);
            for (const HitRecord& h : rr.hit_records) {
                scored[static_cast<std::size_t>(h.interceptor)] = 1;
            }
            for (std::size_t i = 0; i < rr.closest_approach.size(); ++i) {
                if (!scored[i] && std::isfinite(rr.closest_approach[i])) {
                    slot.closest_misses.push_back(rr.closest_approach[i]);
                }
            }
        } catch (const std::exception& e) {
            slot.error = e.what();
        }
    };

    // Preallocated slots plus an index-ordered reduction below make the
    // aggregate independent of how the pool schedules the work.
    int jobs = std::max(1, parallelism);
    jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                  std::max<std::size_t>(total, 1)));
    if (jobs <= 1) {
        for (std::size_t t = 0; t < total; ++t) {
            execute(t);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= total) {
                        return;
                    }
                    execute(t);
                }
            });
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    AggregateResult agg;
    agg.spec = spec;
    agg.cells.reserve(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) {
        CellResult cell;
        cell.m = keys[c].m;
        cell.n = keys[c].n;
        cell.method = keys[c].method;

        for (std::size_t r = 0; r < runs_per_cell; ++r) {
            const RunOutcome& o = outcomes[c * runs_per_cell + r];
            if (!o.error.empty()) {
                cell.error = "run " + std::to_string(r) + ": " + o.error;
                break;
            }
        }
        if (cell.error.empty()) {
            cell.runs = spec.n_mc;
            cell.possible = cell.m * spec.n_mc;
            double time_sum = 0.0;
            std::size_t time_n = 0;
            double miss_sum = 0.0;
            std::size_t miss_n = 0;
            for (std::size_t r = 0; r < runs_per_cell; ++r) {
                const RunOutcome& o = outcomes[c * runs_per_cell + r];
                cell.hits += o.hits;
                for (double t : o.hit_times) {
                    time_sum += t;
                    ++time_n;
                }
                for (double d : o.closest_misses) {
                    miss_sum += d;
                    ++miss_n;
                }
            }
            cell.fraction = static_cast<double>(cell.hits) / cell.possible;
            cell.ci = wilson_ci(cell.hits, cell.possible, 1.96);
            cell.mean_hit_time = time_n > 0 ? time_sum / static_cast<double>(time_n) : nan;
            cell.mean_miss_closest =
                miss_n > 0 ? miss_sum / static_cast<double>(miss_n) : nan;
        } else {
            cell.mean_hit_time = nan;
            cell.mean_miss_closest = nan;
        }
        agg.cells.push_back(std::move(cell));
    }
    return agg;
}

}  // namespace vtsim
