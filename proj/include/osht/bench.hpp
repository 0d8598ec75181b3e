#pragma once

#include <cstdint>
#include <vector>

#include "osht/types.hpp"

namespace osht {

/// Configuration of an accuracy experiment run.
struct TrialConfig {
  std::vector<int> bandlimits;   // each >= 2
  int trials = 10;               // >= 1
  std::uint64_t seed = 1;
  std::vector<Placement> methods = {Placement::elimination};
  bool multipass = false;
  int max_passes = 20;
};

/// One (band-limit, method, trial) cell of an accuracy experiment.
/// e_max is the max-abs coefficient error of the first pass; e_max_k holds
/// one entry per accepted pass.  passes == 0 marks a trial whose forward
/// transform failed on a singular system (e_max = +infinity, no pass rows).
/// wall_time (seconds) is informational and never serialized.
struct BenchRecord {
  int bandlimit = 0;
  Placement method = Placement::elimination;
  int trial = 0;
  Real e_max = 0.0;
  std::vector<Real> e_max_k;
  std::vector<Real> residual_history;
  int passes = 0;
  Real wall_time = 0.0;
};

/// Rows of a conditioning experiment: one Row per (band-limit, method,
/// order) and one MaxRow per (band-limit, method).
struct ConditioningData {
  struct Row {
    int bandlimit = 0;
    Placement method = Placement::elimination;
    int order = 0;
    Real kappa = 0.0;
  };
  struct MaxRow {
    int bandlimit = 0;
    Placement method = Placement::elimination;
    Real kappa_max = 0.0;
  };
  std::vector<Row> rows;
  std::vector<MaxRow> max_rows;
};

/// Mean per-(band-limit, method) accuracy over trials.  Failed trials
/// (passes == 0) propagate +infinity into the means.
struct AccuracySummary {
  int bandlimit = 0;
  Placement method = Placement::elimination;
  Real mean_e_max = 0.0;        // first pass
  Real mean_e_max_final = 0.0;  // last accepted pass
};

/// Coefficients with i.i.d. real and imaginary parts uniform on [0, 1):
/// for each flat index in order, the real part is drawn before the
/// imaginary part, each as a 53-bit mantissa from one std::mt19937_64 step.
/// Identical (bandlimit, seed) pairs produce bit-identical output on every
/// platform.
HarmonicCoeffs random_bandlimited(int bandlimit, std::uint64_t seed);

/// The per-trial RNG stream: base seed and cell coordinates absorbed through
/// a splitmix64 chain, so cells are decorrelated and independent of
/// evaluation order.
std::uint64_t trial_seed(std::uint64_t base, int bandlimit, Placement method,
                         int trial);

/// Synthesizes random band-limited signals and measures coefficient
/// recovery, single- or multi-pass, per (band-limit, method, trial).
/// Records are ordered band-limit-major, then method, then trial.
std::vector<BenchRecord> accuracy_experiment(const TrialConfig& config);

/// Designs each scheme and tabulates every per-order condition number.
ConditioningData conditioning_experiment(const std::vector<int>& bandlimits,
                                         const std::vector<Placement>& methods);

std::vector<AccuracySummary> summarize(const std::vector<BenchRecord>& records);

}  // namespace osht
