#pragma once

#include <functional>
#include <vector>

#include "osht/types.hpp"

namespace osht {

/// Outcome of the multi-pass transform.  residual_history[p] is the
/// max-abs sample residual after accepted pass p+1; it is strictly
/// decreasing by construction, with one entry per accepted pass.
struct MultipassResult {
  HarmonicCoeffs coeffs;
  int passes = 0;
  std::vector<Real> residual_history;
};

/// Called once per accepted pass with the running coefficient estimate and
/// its max-abs sample residual.
using PassObserver =
    std::function<void(int pass, const HarmonicCoeffs& coeffs, Real residual_max)>;

/// signal minus the synthesis of coeffs, sample by sample.
SpatialSignal residual(const SamplingScheme& scheme, const SpatialSignal& signal,
                       const HarmonicCoeffs& coeffs);

/// Iterative refinement of the forward transform: after the initial solve,
/// each pass runs the forward transform on the current residual and adds the
/// correction.  A pass is accepted only if it strictly decreases the max-abs
/// residual; the first non-improving pass (ties included) stops the
/// iteration and the last accepted estimate is returned.
///
/// Throws Error unless max_passes >= 1; forward-transform errors propagate.
MultipassResult multipass_sht(const SamplingScheme& scheme,
                              const SpatialSignal& signal, int max_passes = 20,
                              const PassObserver& observe = {});

}  // namespace osht
