#pragma once

namespace vtsim {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for a binomial proportion at critical value z
/// (z = 1.96 for 95%). Throws when trials == 0 or hits is out of range.
Interval wilson_ci(int hits, int trials, double z);

/// Exact two-sided sign test: probability under Bin(wins+losses, 1/2) of a
/// split at least as extreme as the observed one. Ties must be excluded by
/// the caller. Returns 1.0 when wins + losses == 0.
double sign_test_p(int wins, int losses);

}  // namespace vtsim
