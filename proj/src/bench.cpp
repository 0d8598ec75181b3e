#include "osht/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "osht/errors.hpp"
#include "osht/multipass.hpp"
#include "osht/sampling.hpp"
#include "osht/sht.hpp"

namespace osht {
namespace {

Real max_abs(const ComplexVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

SamplingScheme design(Placement method, int bandlimit) {
  return method == Placement::elimination ? design_elimination(bandlimit)
                                          : design_ascending(bandlimit);
}

void check_config(const TrialConfig& config) {
  if (config.bandlimits.empty()) {
    throw Error("invalid-config: no band-limits given");
  }
  for (int L : config.bandlimits) {
    if (L < 2) {
      throw Error("invalid-bandlimit: experiment band-limits must be >= 2, got " +
                  std::to_string(L));
    }
  }
  if (config.trials < 1) {
    throw Error("invalid-config: trials must be >= 1, got " +
                std::to_string(config.trials));
  }
  if (config.methods.empty()) {
    throw Error("invalid-config: no placement methods given");
  }
  if (config.max_passes < 1) {
    throw Error("invalid-max-passes: must be >= 1, got " +
                std::to_string(config.max_passes));
  }
}

}  // namespace

HarmonicCoeffs random_bandlimited(int bandlimit, std::uint64_t seed) {
  if (bandlimit < 1) {
    throw Error("invalid-bandlimit: band-limit must be >= 1, got " +
                std::to_string(bandlimit));
  }
  std::mt19937_64 rng(seed);
  // top 53 bits of each draw, mapped to [0, 1); the standard pins the
  // mt19937_64 stream, so this is bit-identical everywhere
  const auto uniform = [&rng] {
    return static_cast<Real>(rng() >> 11) * 0x1p-53;
  };
  ComplexVector values(bandlimit * bandlimit);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const Real re = uniform();
    const Real im = uniform();
    values[i] = Complex(re, im);
  }
  return {bandlimit, std::move(values)};
}

std::uint64_t trial_seed(std::uint64_t base, int bandlimit, Placement method,
                         int trial) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ static_cast<std::uint64_t>(bandlimit));
  h = splitmix64(h ^ static_cast<std::uint64_t>(method == Placement::elimination ? 1 : 2));
  h = splitmix64(h ^ static_cast<std::uint64_t>(trial));
  return h;
}

std::vector<BenchRecord> accuracy_experiment(const TrialConfig& config) {
  check_config(config);
  std::vector<BenchRecord> records;
  records.reserve(config.bandlimits.size() * config.methods.size() *
                  config.trials);

  for (int L : config.bandlimits) {
    for (Placement method : config.methods) {
      const SamplingScheme scheme = design(method, L);
      for (int trial = 0; trial < config.trials; ++trial) {
        const auto start = std::chrono::steady_clock::now();
        const HarmonicCoeffs truth =
            random_bandlimited(L, trial_seed(config.seed, L, method, trial));
        const SpatialSignal signal = inverse_sht(scheme, truth);

        BenchRecord record;
        record.bandlimit = L;
        record.method = method;
        record.trial = trial;
        try {
          if (config.multipass) {
            const auto observe = [&](int, const HarmonicCoeffs& estimate,
                                     Real residual_max) {
              record.e_max_k.push_back(
                  max_abs(estimate.values - truth.values));
              record.residual_history.push_back(residual_max);
            };
            const MultipassResult run =
                multipass_sht(scheme, signal, config.max_passes, observe);
            record.passes = run.passes;
            record.e_max = record.e_max_k.front();
          } else {
            const HarmonicCoeffs estimate = forward_sht(scheme, signal);
            record.e_max = max_abs(estimate.values - truth.values);
            record.e_max_k = {record.e_max};
            record.residual_history = {
                max_abs(residual(scheme, signal, estimate).samples)};
            record.passes = 1;
          }
        } catch (const SingularSystemError&) {
          record.passes = 0;
          record.e_max = std::numeric_limits<Real>::infinity();
          record.e_max_k.clear();
          record.residual_history.clear();
        }
        record.wall_time =
            std::chrono::duration<Real>(std::chrono::steady_clock::now() -
                                        start)
                .count();
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

ConditioningData conditioning_experiment(const std::vector<int>& bandlimits,
                                         const std::vector<Placement>& methods) {
  if (bandlimits.empty() || methods.empty()) {
    throw Error("invalid-config: conditioning experiment needs band-limits and methods");
  }
  ConditioningData data;
  for (int L : bandlimits) {
    if (L < 1) {
      throw Error("invalid-bandlimit: band-limit must be >= 1, got " +
                  std::to_string(L));
    }
    for (Placement method : methods) {
      const ConditionReport report = condition_report(design(method, L));
      for (int m = 0; m < L; ++m) {
        data.rows.push_back({L, method, m, report.kappa[m]});
      }
      data.max_rows.push_back({L, method, report.kappa_max});
    }
  }
  return data;
}

std::vector<AccuracySummary> summarize(const std::vector<BenchRecord>& records) {
  std::vector<AccuracySummary> summaries;
  for (const BenchRecord& record : records) {
    AccuracySummary* cell = nullptr;
    for (AccuracySummary& existing : summaries) {
      if (existing.bandlimit == record.bandlimit &&
          existing.method == record.method) {
        cell = &existing;
        break;
      }
    }
    if (!cell) {
      summaries.push_back({record.bandlimit, record.method, 0.0, 0.0});
      cell = &summaries.back();
    }
    const Real e_first = record.e_max;
    const Real e_final = record.e_max_k.empty()
                             ? record.e_max
                             : record.e_max_k.back();
    cell->mean_e_max += e_first;
    cell->mean_e_max_final += e_final;
  }
  for (AccuracySummary& cell : summaries) {
    int count = 0;
    for (const BenchRecord& record : records) {
      if (record.bandlimit == cell.bandlimit && record.method == cell.method) {
        ++count;
      }
    }
    cell.mean_e_max /= count;
    cell.mean_e_max_final /= count;
  }
  return summaries;
}

}  // namespace osht
