#pragma once

#include <complex>
#include <string>

#include <Eigen/Core>

namespace osht {

using Real = double;
using Complex = std::complex<Real>;

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Flat storage index of the coefficient (l, m): l^2 + l + m.
inline int coeff_index(int degree, int order) {
  return degree * degree + degree + order;
}

/// First sample of ring k in the flat ring-major layout.
inline int ring_offset(int ring) { return ring * ring; }

/// Number of longitude samples on ring k.
inline int ring_size(int ring) { return 2 * ring + 1; }

/// Longitude of sample j on ring k: 2 pi j / (2k + 1).
inline Real ring_longitude(int ring, int j) {
  return 2.0 * M_PI * static_cast<Real>(j) / static_cast<Real>(ring_size(ring));
}

/// Ring-placement strategies for the sampling design.
enum class Placement { elimination, ascending };

const char* placement_name(Placement method);
Placement placement_from_name(const std::string& name);

/// The L candidate co-latitudes pi (2t + 1) / (2L - 1), t = 0..L-1,
/// strictly increasing; the last one is exactly pi.
struct CandidateGrid {
  int bandlimit = 0;
  Vector angles;
};

/// A ring placement: ring k sits at co-latitude theta[k] and carries the
/// 2k + 1 equispaced longitudes ring_longitude(k, j).  theta is always a
/// permutation of the candidate grid for the same band-limit.
struct SamplingScheme {
  int bandlimit = 0;
  Placement method = Placement::elimination;
  Vector theta;
};

/// Spherical-harmonic coefficients of a signal band-limited at L, stored
/// flat as values[coeff_index(l, m)] for 0 <= l < L, |m| <= l.
struct HarmonicCoeffs {
  int bandlimit = 0;
  ComplexVector values;
};

/// Samples of a function on the sphere over a sampling scheme, stored
/// ring-major: ring k occupies values ring_offset(k) .. ring_offset(k+1)-1.
struct SpatialSignal {
  int bandlimit = 0;
  ComplexVector samples;
};

/// Scaled discrete Fourier coefficients of one ring.  coeff[m + ring] holds
/// D_m(theta_k) = (2 pi / (2k+1)) sum_j f(theta_k, phi_kj) e^{-i m phi_kj}
/// for -k <= m <= k.
struct RingSpectrum {
  int ring = 0;
  ComplexVector coeff;
};

/// Condition numbers of every per-order system of a scheme.
/// kappa[m] = cond(P_m); singular systems are reported as +infinity.
struct ConditionReport {
  int bandlimit = 0;
  Vector kappa;
  Real kappa_max = 0.0;
};

/// One per-order linear system of the forward transform, as handed to an
/// OrderSystemObserver: the matrix P_m and right-hand side g_m (the Fourier
/// coefficients after all higher orders have been folded out).
struct OrderSystem {
  int order = 0;
  Matrix pm;
  ComplexVector gm;
};

}  // namespace osht
