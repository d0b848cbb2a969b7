#include "vtsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vtsim {

Interval wilson_ci(int hits, int trials, double z) {
    if (trials <= 0) {
        throw std::invalid_argument("wilson_ci: trials must be positive");
    }
    if (hits < 0 || hits > trials) {
        throw std::invalid_argument("wilson_ci: hits out of range");
    }
    if (!(z >= 0.0)) {
        throw std::invalid_argument("wilson_ci: z must be non-negative");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    Interval ci;
    ci.lo = std::clamp(center - half, 0.0, 1.0);
    ci.hi = std::clamp(center + half, 0.0, 1.0);
    return ci;
}

double sign_test_p(int wins, int losses) {
    if (wins < 0 || losses < 0) {
        throw std::invalid_argument("sign_test_p: negative counts");
    }
    const int k = wins + losses;
    if (k == 0) {
        return 1.0;
    }
    const int tail = std::min(wins, losses);
    // P(X <= tail) for X ~ Bin(k, 1/2), evaluated through log-gamma to stay
    // stable for large k.
    const double log_half_k = -static_cast<double>(k) * std::log(2.0);
    const double lg_k1 = std::lgamma(static_cast<double>(k) + 1.0);
    double cdf = 0.0;
    for (int i = 0; i <= tail; ++i) {
        const double log_term = lg_k1 - std::lgamma(static_cast<double>(i) + 1.0) -
                                std::lgamma(static_cast<double>(k - i) + 1.0) + log_half_k;
        cdf += std::exp(log_term);
    }
    return std::min(1.0, 2.0 * cdf);
}

}  // namespace vtsim
