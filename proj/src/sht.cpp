#include "osht/sht.hpp"

#include <cassert>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "osht/errors.hpp"
#include "osht/legendre.hpp"
#include "osht/parallel.hpp"
#include "osht/sampling.hpp"

namespace osht {
namespace {

// Rings below this many samples use direct summation; larger rings go
// through an FFT.  Both paths agree to rounding error.
constexpr int kDirectDftLimit = 64;

// X_n = sum_j x_j e^{-2 pi i n j / N} for n = 0 .. N-1.
ComplexVector dft_forward(const ComplexVector& x) {
  const int n = static_cast<int>(x.size());
  if (n < kDirectDftLimit) {
    ComplexVector out(n);
    const Real w = 2.0 * M_PI / n;
    for (int bin = 0; bin < n; ++bin) {
      Complex acc = 0.0;
      for (int j = 0; j < n; ++j) {
        const Real arg = -w * static_cast<Real>((bin * j) % n);
        acc += x[j] * Complex(std::cos(arg), std::sin(arg));
      }
      out[bin] = acc;
    }
    return out;
  }
  Eigen::FFT<Real> fft;
  std::vector<Complex> in(x.data(), x.data() + n);
  std::vector<Complex> out;
  fft.fwd(out, in);
  return Eigen::Map<const ComplexVector>(out.data(), n);
}

// y_j = sum_n bins_n e^{+2 pi i n j / N} for j = 0 .. N-1 (unscaled inverse).
ComplexVector dft_inverse(const ComplexVector& bins) {
  const int n = static_cast<int>(bins.size());
  if (n < kDirectDftLimit) {
    ComplexVector out(n);
    const Real w = 2.0 * M_PI / n;
    for (int j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (int bin = 0; bin < n; ++bin) {
        const Real arg = w * static_cast<Real>((bin * j) % n);
        acc += bins[bin] * Complex(std::cos(arg), std::sin(arg));
      }
      out[j] = acc;
    }
    return out;
  }
  Eigen::FFT<Real> fft;
  std::vector<Complex> in(bins.data(), bins.data() + n);
  std::vector<Complex> out;
  fft.inv(out, in);  // includes a 1/N factor; undo it
  Eigen::Map<const ComplexVector> mapped(out.data(), n);
  return mapped * static_cast<Real>(n);
}

// Representative of m in [-k, k] modulo 2k+1.
int signed_mod(int m, int ring) {
  const int n = ring_size(ring);
  int r = ((m % n) + n) % n;
  if (r > ring) r -= n;
  return r;
}

void check_signal(const SamplingScheme& scheme, const SpatialSignal& signal) {
  if (signal.bandlimit != scheme.bandlimit) {
    throw DimensionMismatchError(
        "signal band-limit " + std::to_string(signal.bandlimit) +
        " does not match scheme band-limit " +
        std::to_string(scheme.bandlimit));
  }
  const int expected = scheme.bandlimit * scheme.bandlimit;
  if (signal.samples.size() != expected) {
    throw DimensionMismatchError(
        "signal has " + std::to_string(signal.samples.size()) +
        " samples, expected " + std::to_string(expected));
  }
}

void check_coeffs(const SamplingScheme& scheme, const HarmonicCoeffs& coeffs) {
  if (coeffs.bandlimit != scheme.bandlimit) {
    throw DimensionMismatchError(
        "coefficient band-limit " + std::to_string(coeffs.bandlimit) +
        " does not match scheme band-limit " +
        std::to_string(scheme.bandlimit));
  }
  const int expected = scheme.bandlimit * scheme.bandlimit;
  if (coeffs.values.size() != expected) {
    throw DimensionMismatchError(
        "coefficient vector has " + std::to_string(coeffs.values.size()) +
        " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

Matrix order_matrix(const SamplingScheme& scheme, int order) {
  const int L = scheme.bandlimit;
  const int am = std::abs(order);
  if (am >= L) {
    throw Error("invalid-order: |m| must be below the band-limit, got m=" +
                std::to_string(order) + ", L=" + std::to_string(L));
  }
  if (scheme.theta.size() != L) {
    throw DimensionMismatchError(
        "scheme has " + std::to_string(scheme.theta.size()) +
        " ring angles for band-limit " + std::to_string(L));
  }
  const int n = L - am;
  Matrix pm(n, n);
  for (int i = 0; i < n; ++i) {
    // the column sweep already carries the (-1)^m of negative orders
    pm.row(i) = scaled_legendre_column(order, scheme.theta[am + i], L).transpose();
  }
  return pm;
}

RingSpectrum ring_dft(const SpatialSignal& signal, int ring) {
  const int L = signal.bandlimit;
  if (ring < 0 || ring >= L) {
    throw Error("invalid-ring: ring index " + std::to_string(ring) +
                " out of range for band-limit " + std::to_string(L));
  }
  if (signal.samples.size() != L * L) {
    throw DimensionMismatchError(
        "signal has " + std::to_string(signal.samples.size()) +
        " samples, expected " + std::to_string(L * L));
  }
  const int n = ring_size(ring);
  const ComplexVector bins =
      dft_forward(signal.samples.segment(ring_offset(ring), n)) *
      (2.0 * M_PI / n);
  ComplexVector coeff(n);
  for (int m = -ring; m <= ring; ++m) {
    coeff[m + ring] = bins[((m % n) + n) % n];
  }
  return {ring, std::move(coeff)};
}

HarmonicCoeffs forward_sht(const SamplingScheme& scheme,
                           const SpatialSignal& signal,
                           const OrderSystemObserver& observe) {
  validate_scheme(scheme);
  check_signal(scheme, signal);
  const int L = scheme.bandlimit;

  // Per-ring Fourier coefficients in signed-bin order; resolved orders are
  // folded out of these in place as the recursion descends.
  std::vector<ComplexVector> spectra(L);
  for (int k = 0; k < L; ++k) spectra[k] = ring_dft(signal, k).coeff;

  HarmonicCoeffs out{L, ComplexVector::Zero(L * L)};

  for (int am = L - 1; am >= 0; --am) {
    const int n = L - am;

    // legendre(i, k) = P~_{am+i}^{am}(theta_k), one sweep per ring
    Matrix legendre(n, L);
    for (int k = 0; k < L; ++k) {
      legendre.col(k) = scaled_legendre_column(am, scheme.theta[k], L);
    }

    Matrix pm(n, n);
    for (int i = 0; i < n; ++i) {
      pm.row(i) = legendre.col(am + i).transpose();
    }
    const Eigen::PartialPivLU<Matrix> lu(pm);
    if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() == 0.0) {
      throw SingularSystemError(
          am, "singular-system: order-" + std::to_string(am) +
                  " matrix has an exact zero pivot (a ring with fewer than " +
                  std::to_string(2 * am + 1) +
                  " samples sits at a pole co-latitude)");
    }

    for (int sgn = 1; sgn >= -1; sgn -= 2) {
      if (am == 0 && sgn < 0) break;
      const int m = sgn * am;
      // P_{-m} = (-1)^m P_m, so one factorization serves both signs
      const Real parity = (sgn < 0 && (am & 1)) ? -1.0 : 1.0;

      ComplexVector g(n);
      for (int i = 0; i < n; ++i) g[i] = spectra[am + i][m + (am + i)];

      ComplexVector fm(n);
      fm.real() = parity * lu.solve(Vector(g.real() / (2.0 * M_PI)));
      fm.imag() = parity * lu.solve(Vector(g.imag() / (2.0 * M_PI)));

      for (int i = 0; i < n; ++i) out.values[coeff_index(am + i, m)] = fm[i];
      if (observe) observe(OrderSystem{m, Matrix(parity * pm), g});

      if (am > 0) {
        // fold this order's contribution out of every lower ring
        detail::parallel_for(am, [&](int k) {
          // every order folded into ring k exceeds k, hence is resolved
          assert(am > k);
          Complex gk = 0.0;
          for (int i = 0; i < n; ++i) gk += fm[i] * legendre(i, k);
          spectra[k][signed_mod(m, k) + k] -= 2.0 * M_PI * parity * gk;
        });
      }
    }
  }
  return out;
}

SpatialSignal inverse_sht(const SamplingScheme& scheme,
                          const HarmonicCoeffs& coeffs) {
  validate_scheme(scheme);
  check_coeffs(scheme, coeffs);
  const int L = scheme.bandlimit;

  SpatialSignal out{L, ComplexVector(L * L)};
  detail::parallel_for(L, [&](int k) {
    const int n = ring_size(k);
    ComplexVector bins = ComplexVector::Zero(n);
    for (int am = 0; am < L; ++am) {
      const Vector col = scaled_legendre_column(am, scheme.theta[k], L);
      for (int sgn = 1; sgn >= -1; sgn -= 2) {
        if (am == 0 && sgn < 0) break;
        const int m = sgn * am;
        const Real parity = (sgn < 0 && (am & 1)) ? -1.0 : 1.0;
        Complex acc = 0.0;
        for (int i = 0; i < L - am; ++i) {
          acc += coeffs.values[coeff_index(am + i, m)] * col[i];
        }
        bins[((m % n) + n) % n] += parity * acc;
      }
    }
    out.samples.segment(ring_offset(k), n) = dft_inverse(bins);
  });
  return out;
}

HarmonicCoeffs dense_lsq_sht(const SamplingScheme& scheme,
                             const SpatialSignal& signal, int oracle_cap) {
  validate_scheme(scheme);
  check_signal(scheme, signal);
  const int L = scheme.bandlimit;
  if (L > oracle_cap) {
    throw Error("oracle-cap-exceeded: band-limit " + std::to_string(L) +
                " above the dense-solver cap " + std::to_string(oracle_cap));
  }

  ComplexMatrix basis(L * L, L * L);
  for (int k = 0, row = 0; k < L; ++k) {
    std::vector<Vector> cols(L);
    for (int am = 0; am < L; ++am) {
      cols[am] = scaled_legendre_column(am, scheme.theta[k], L);
    }
    for (int j = 0; j < ring_size(k); ++j, ++row) {
      const Real phi = ring_longitude(k, j);
      for (int am = 0; am < L; ++am) {
        for (int sgn = 1; sgn >= -1; sgn -= 2) {
          if (am == 0 && sgn < 0) break;
          const int m = sgn * am;
          const Real parity = (sgn < 0 && (am & 1)) ? -1.0 : 1.0;
          const Real arg = static_cast<Real>(m) * phi;
          const Complex phase(std::cos(arg), std::sin(arg));
          for (int i = 0; i < L - am; ++i) {
            basis(row, coeff_index(am + i, m)) = parity * cols[am][i] * phase;
          }
        }
      }
    }
  }
  return {L, basis.colPivHouseholderQr().solve(signal.samples)};
}

}  // namespace osht
