#pragma once

#include "osht/types.hpp"

namespace osht {

/// The L candidate co-latitudes pi (2t+1)/(2L-1).  The last angle, whose
/// exact value is pi, is stored as pi itself rather than the rounding of the
/// quotient, so pole handling does not depend on the band-limit.
///
/// Throws Error unless bandlimit >= 1.
CandidateGrid candidate_grid(int bandlimit);

/// Rings in ascending candidate order: ring k at the k-th smallest angle.
SamplingScheme design_ascending(int bandlimit);

/// Greedy condition-number design.  Step s (s = 0 .. L-2) evaluates, for
/// each remaining candidate, the condition number of the order-(s+1) system
/// over the other remaining candidates (rows in ascending angle order) and
/// assigns the candidate whose removal minimizes it to ring s; ties within
/// 1e-12 relative resolve to the smallest co-latitude.  The final survivor
/// becomes ring L-1.
SamplingScheme design_elimination(int bandlimit);

/// sigma_max / sigma_min of a matrix; +infinity when the smallest singular
/// value lies below 1e-300.
Real condition_number(const Matrix& mat);

/// Condition numbers of all L per-order systems P_m of a scheme.  Singular
/// orders are reported as kappa[m] = +infinity rather than thrown, so that
/// degenerate placements can still be tabulated and compared.
ConditionReport condition_report(const SamplingScheme& scheme);

/// Throws Error unless scheme.theta is a permutation of the candidate grid
/// for scheme.bandlimit (absolute tolerance 1e-12 per angle).
void validate_scheme(const SamplingScheme& scheme);

}  // namespace osht
