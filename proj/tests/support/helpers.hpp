#pragma once

// Shared fixtures for the test binaries: memoized scheme designs (the greedy
// design is the slowest step, so each binary designs a band-limit once), a
// deterministic RNG wrapper, and a brute-force synthesis oracle that sums
// spherical harmonics point by point.

#include <map>
#include <random>
#include <utility>

#include "osht/legendre.hpp"
#include "osht/sampling.hpp"
#include "osht/types.hpp"

namespace osht_test {

inline const osht::SamplingScheme& elimination_scheme(int bandlimit) {
  static std::map<int, osht::SamplingScheme> cache;
  auto it = cache.find(bandlimit);
  if (it == cache.end()) {
    it = cache.emplace(bandlimit, osht::design_elimination(bandlimit)).first;
  }
  return it->second;
}

inline const osht::SamplingScheme& ascending_scheme(int bandlimit) {
  static std::map<int, osht::SamplingScheme> cache;
  auto it = cache.find(bandlimit);
  if (it == cache.end()) {
    it = cache.emplace(bandlimit, osht::design_ascending(bandlimit)).first;
  }
  return it->second;
}

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 rng_;
};

inline osht::HarmonicCoeffs random_coeffs(int bandlimit, std::uint64_t seed) {
  TestRng rng(seed);
  osht::ComplexVector values(bandlimit * bandlimit);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double re = rng.uniform();
    const double im = rng.uniform();
    values[i] = osht::Complex(re, im);
  }
  return {bandlimit, std::move(values)};
}

/// Brute-force synthesis: evaluates sum_{l,m} f_{l,m} Y_l^m at every sample
/// of the scheme by direct summation — no Fourier step, no recurrence reuse.
inline osht::SpatialSignal direct_synthesis(const osht::SamplingScheme& scheme,
                                            const osht::HarmonicCoeffs& coeffs) {
  const int L = scheme.bandlimit;
  osht::SpatialSignal out{L, osht::ComplexVector(L * L)};
  for (int k = 0; k < L; ++k) {
    for (int j = 0; j < osht::ring_size(k); ++j) {
      osht::Complex acc = 0.0;
      for (int l = 0; l < L; ++l) {
        for (int m = -l; m <= l; ++m) {
          acc += coeffs.values[osht::coeff_index(l, m)] *
                 osht::spherical_harmonic(l, m, scheme.theta[k],
                                          osht::ring_longitude(k, j));
        }
      }
      out.samples[osht::ring_offset(k) + j] = acc;
    }
  }
  return out;
}

inline double max_abs_diff(const osht::ComplexVector& a,
                           const osht::ComplexVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace osht_test
