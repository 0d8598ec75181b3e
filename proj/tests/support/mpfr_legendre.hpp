#pragma once

// Arbitrary-precision reference for the scaled associated Legendre
// functions, used as an independent oracle by the tests.  Deliberately takes
// a different route than the production code: the classic unnormalized
// ascending recurrence in 512-bit arithmetic followed by an explicit
// factorial normalization.

namespace osht_test {

/// P~_l^m(theta) evaluated in 512-bit arithmetic and rounded to double.
double mpfr_scaled_legendre(int degree, int order, double theta);

}  // namespace osht_test
