#include "osht/multipass.hpp"

#include <string>
#include <utility>

#include "osht/errors.hpp"
#include "osht/sht.hpp"

namespace osht {
namespace {

Real max_abs(const ComplexVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace

SpatialSignal residual(const SamplingScheme& scheme, const SpatialSignal& signal,
                       const HarmonicCoeffs& coeffs) {
  const SpatialSignal synthesis = inverse_sht(scheme, coeffs);
  if (signal.bandlimit != synthesis.bandlimit ||
      signal.samples.size() != synthesis.samples.size()) {
    throw DimensionMismatchError(
        "signal shape does not match the scheme band-limit " +
        std::to_string(scheme.bandlimit));
  }
  return {signal.bandlimit, signal.samples - synthesis.samples};
}

MultipassResult multipass_sht(const SamplingScheme& scheme,
                              const SpatialSignal& signal, int max_passes,
                              const PassObserver& observe) {
  if (max_passes < 1) {
    throw Error("invalid-max-passes: must be >= 1, got " +
                std::to_string(max_passes));
  }

  HarmonicCoeffs best = forward_sht(scheme, signal);
  SpatialSignal best_residual = residual(scheme, signal, best);
  Real best_norm = max_abs(best_residual.samples);

  MultipassResult result;
  result.passes = 1;
  result.residual_history.push_back(best_norm);
  if (observe) observe(1, best, best_norm);

  while (result.passes < max_passes) {
    const HarmonicCoeffs correction = forward_sht(scheme, best_residual);
    HarmonicCoeffs candidate{best.bandlimit,
                             best.values + correction.values};
    SpatialSignal candidate_residual = residual(scheme, signal, candidate);
    const Real candidate_norm = max_abs(candidate_residual.samples);
    if (candidate_norm >= best_norm) break;  // ties stop the iteration too

    best = std::move(candidate);
    best_residual = std::move(candidate_residual);
    best_norm = candidate_norm;
    ++result.passes;
    result.residual_history.push_back(best_norm);
    if (observe) observe(result.passes, best, best_norm);
  }

  result.coeffs = std::move(best);
  return result;
}

}  // namespace osht
