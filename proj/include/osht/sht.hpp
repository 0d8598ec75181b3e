#pragma once

#include <functional>

#include "osht/types.hpp"

namespace osht {

/// The per-order system matrix P_m: rows are rings |m| .. L-1 in ring order,
/// columns degrees |m| .. L-1, entries P~_degree^m(theta_ring).
///
/// Throws Error unless |m| < L; DimensionMismatchError on malformed schemes.
Matrix order_matrix(const SamplingScheme& scheme, int order);

/// Scaled DFT of one ring of samples; see RingSpectrum.  Uses direct
/// summation for small rings and an FFT for larger ones — the two agree to
/// rounding error.
RingSpectrum ring_dft(const SpatialSignal& signal, int ring);

/// Called once per solved order (m = L-1, -(L-1), L-2, ... , 0) with the
/// system that was solved.
using OrderSystemObserver = std::function<void(const OrderSystem&)>;

/// Forward transform: recovers the harmonic coefficients of a band-limited
/// signal sampled on the scheme.  Orders are solved from |m| = L-1 downward;
/// after each solve the recovered orders' contributions are folded out of
/// the lower rings' Fourier coefficients, so every system sees only its own
/// order.  Throws SingularSystemError if some P_m has an exact zero pivot
/// (as happens for every m != 0 when a ring with fewer than 2|m|+1 samples
/// sits at a pole co-latitude, e.g. the ascending placement).
HarmonicCoeffs forward_sht(const SamplingScheme& scheme,
                           const SpatialSignal& signal,
                           const OrderSystemObserver& observe = {});

/// Inverse transform (synthesis): evaluates the finite harmonic expansion at
/// every sample point of the scheme.
SpatialSignal inverse_sht(const SamplingScheme& scheme,
                          const HarmonicCoeffs& coeffs);

/// Reference transform: solves the dense L^2-by-L^2 least-squares system
/// whose columns are the sampled basis functions Y_l^m, via a column-pivoted
/// QR factorization.  Cubic in L^2 — refuses band-limits above oracle_cap.
HarmonicCoeffs dense_lsq_sht(const SamplingScheme& scheme,
                             const SpatialSignal& signal,
                             int oracle_cap = 32);

}  // namespace osht
