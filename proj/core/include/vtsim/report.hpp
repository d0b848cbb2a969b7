#pragma once

#include <iosfwd>

#include "vtsim/sweep.hpp"

namespace vtsim {

/// One row per completed cell under the header
/// m,n,method,runs,hits,possible,fraction,ci_lo,ci_hi,mean_hit_time_s
/// with fractions to six decimals. Cells that aborted carry no statistics
/// and are left out (they appear in the JSON report with their diagnostic).
void write_csv(const AggregateResult& agg, std::ostream& out);

/// Full machine-readable report: sweep spec (base seed and complete config
/// echo) plus every cell, including aborted ones. NaN statistics are
/// serialized as null.
void write_json(const AggregateResult& agg, std::ostream& out);

/// Parses write_json output back into an AggregateResult.
AggregateResult read_json(std::istream& in);

}  // namespace vtsim
