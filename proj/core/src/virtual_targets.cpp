#include "vtsim/virtual_targets.hpp"

#include <algorithm>
#include <stdexcept>

namespace vtsim {

Trajectory resample_linear(const Trajectory& src, std::span<const double> new_times) {
    src.validate();
    if (src.times.empty()) {
        throw std::invalid_argument("resample_linear: empty source trajectory");
    }
    if (new_times.empty()) {
        throw std::invalid_argument("resample_linear: empty target grid");
    }
    Trajectory out;
    out.times.assign(new_times.begin(), new_times.end());
    out.positions.reserve(new_times.size());

    const std::size_t n = src.times.size();
    for (double t : new_times) {
        if (n == 1) {
            out.positions.push_back(src.positions[0]);
            continue;
        }
        // Bracketing segment; times beyond either end reuse the edge segment,
        // which turns interpolation into linear extrapolation.
        std::size_t hi = static_cast<std::size_t>(
            std::upper_bound(src.times.begin(), src.times.end(), t) - src.times.begin());
        hi = std::clamp<std::size_t>(hi, 1, n - 1);
        const std::size_t lo = hi - 1;
        const double span = src.times[hi] - src.times[lo];
        const double w = (t - src.times[lo]) / span;
        out.positions.push_back(src.positions[lo] +
                                (src.positions[hi] - src.positions[lo]) * w);
    }
    out.validate();
    return out;
}

VirtualTargetSet update_vts(const SampleBundle& bundle, int k, Rng& rng,
                            const VirtualTargetSet* previous, const KMeansOptions& options) {
    if (bundle.samples.empty()) {
        throw std::invalid_argument("update_vts: empty sample bundle");
    }
    if (k < 1) {
        throw std::invalid_argument("update_vts: need at least one slot");
    }
    const int k_eff = std::min<int>(k, static_cast<int>(bundle.samples.size()));

    std::vector<Trajectory> warm;
    if (previous != nullptr && static_cast<int>(previous->vts.size()) == k_eff) {
        warm.reserve(previous->vts.size());
        for (const Trajectory& vt : previous->vts) {
            warm.push_back(resample_linear(vt, bundle.horizon_times));
        }
    }

    KMeansResult clustered = ts_kmeans(bundle.samples, k_eff, rng, options, warm);

    VirtualTargetSet set;
    set.horizon_times = bundle.horizon_times;
    set.vts = std::move(clustered.centroids);
    return set;
}

void remove_vt(VirtualTargetSet& set, int index) {
    if (index < 0 || static_cast<std::size_t>(index) >= set.vts.size()) {
        throw std::out_of_range("remove_vt: slot index out of range");
    }
    set.vts.erase(set.vts.begin() + index);
}

}  // namespace vtsim
