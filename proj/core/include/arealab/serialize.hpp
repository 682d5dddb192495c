#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "arealab/constants.hpp"
#include "arealab/correlation.hpp"
#include "arealab/minoverlap.hpp"

namespace arealab {

// CSV writers. Exact integers are written verbatim and doubles with 17
// significant digits, so every numeric cell parses back to the same value.

/// Header `kind,x,shift,value,terms`; type-2 rows carry shift `type2`.
void write_correlations_csv(std::span<const CorrelationResult> rows, std::ostream& out);
/// Inverse of write_correlations_csv (middle terms are not part of the CSV).
std::vector<CorrelationResult> read_correlations_csv(std::istream& in);

/// Header `claim,x,computed,bound,constant,verdict`, one row per grid point.
void write_claims_csv(std::span<const ClaimReport> reports, std::ostream& out);

/// Header `n,method,M,witness,bound,bound_value,ok`, one row per bound.
void write_minoverlap_csv(const OverlapResult& result, std::span<const BoundRow> bounds, std::ostream& out);

/// Header `kind,x,shift,c_min,c_max,local_density,d_ratio`; empty cells for
/// undefined estimates.
void write_densities_csv(std::span<const DensityEstimate> rows, std::ostream& out);

}  // namespace arealab
