#include "osht/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "osht/errors.hpp"
#include "osht/legendre.hpp"
#include "osht/parallel.hpp"
#include "osht/sht.hpp"

namespace osht {
namespace {

constexpr Real kSingularFloor = 1e-300;
constexpr Real kTieTolerance = 1e-12;
constexpr Real kGridTolerance = 1e-12;

// True when a is strictly better than b beyond the relative tie tolerance.
bool improves(Real a, Real b) {
  if (std::isinf(a)) return false;
  if (std::isinf(b)) return true;
  if (a >= b) return false;
  return (b - a) > kTieTolerance * std::max(std::abs(a), std::abs(b));
}

}  // namespace

CandidateGrid candidate_grid(int bandlimit) {
  if (bandlimit < 1) {
    throw Error("invalid-bandlimit: band-limit must be >= 1, got " +
                std::to_string(bandlimit));
  }
  const int L = bandlimit;
  Vector angles(L);
  for (int t = 0; t < L; ++t) {
    // the last quotient is exactly pi; write it as such so the pole is hit
    // by value, not by the luck of one rounding
    angles[t] = (2 * t + 1 == 2 * L - 1)
                    ? M_PI
                    : M_PI * (2.0 * t + 1.0) / (2.0 * L - 1.0);
  }
  return {L, std::move(angles)};
}

SamplingScheme design_ascending(int bandlimit) {
  CandidateGrid grid = candidate_grid(bandlimit);
  return {bandlimit, Placement::ascending, std::move(grid.angles)};
}

SamplingScheme design_elimination(int bandlimit) {
  const CandidateGrid grid = candidate_grid(bandlimit);
  const int L = bandlimit;
  std::vector<Real> pool(grid.angles.data(), grid.angles.data() + L);
  Vector theta(L);

  for (int step = 0; step + 1 < L; ++step) {
    const int m = step + 1;  // order the survivors must keep well-conditioned
    const int remaining = static_cast<int>(pool.size());
    const int n = remaining - 1;  // survivor-system dimension, = L - m

    // one recurrence sweep per pooled angle; candidate j's system is these
    // rows with row j struck out (pool is kept ascending)
    Matrix rows(remaining, n);
    for (int i = 0; i < remaining; ++i) {
      rows.row(i) = scaled_legendre_column(m, pool[i], L).transpose();
    }

    std::vector<Real> kappa(remaining);
    detail::parallel_for(remaining, [&](int j) {
      Matrix candidate(n, n);
      int r = 0;
      for (int i = 0; i < remaining; ++i) {
        if (i != j) candidate.row(r++) = rows.row(i);
      }
      kappa[j] = condition_number(candidate);
    });

    int best = 0;
    for (int j = 1; j < remaining; ++j) {
      if (improves(kappa[j], kappa[best])) best = j;
    }
    theta[step] = pool[best];
    pool.erase(pool.begin() + best);
  }
  theta[L - 1] = pool[0];
  return {L, Placement::elimination, std::move(theta)};
}

Real condition_number(const Matrix& mat) {
  Eigen::BDCSVD<Matrix> svd(mat);
  const Vector& sv = svd.singularValues();
  const Real smax = sv[0];
  const Real smin = sv[sv.size() - 1];
  if (!(smin > kSingularFloor)) {
    return std::numeric_limits<Real>::infinity();
  }
  return smax / smin;
}

ConditionReport condition_report(const SamplingScheme& scheme) {
  validate_scheme(scheme);
  const int L = scheme.bandlimit;
  Vector kappa(L);
  detail::parallel_for(L, [&](int m) {
    kappa[m] = condition_number(order_matrix(scheme, m));
  });
  const Real kappa_max = kappa.maxCoeff();
  return {L, std::move(kappa), kappa_max};
}

void validate_scheme(const SamplingScheme& scheme) {
  if (scheme.bandlimit < 1) {
    throw Error("invalid-bandlimit: band-limit must be >= 1, got " +
                std::to_string(scheme.bandlimit));
  }
  if (scheme.theta.size() != scheme.bandlimit) {
    throw DimensionMismatchError(
        "scheme has " + std::to_string(scheme.theta.size()) +
        " ring angles for band-limit " + std::to_string(scheme.bandlimit));
  }
  const CandidateGrid grid = candidate_grid(scheme.bandlimit);
  std::vector<Real> sorted(scheme.theta.data(),
                           scheme.theta.data() + scheme.bandlimit);
  std::sort(sorted.begin(), sorted.end());
  for (int t = 0; t < scheme.bandlimit; ++t) {
    if (!(std::abs(sorted[t] - grid.angles[t]) <= kGridTolerance)) {
      throw Error(
          "scheme theta is not a permutation of the candidate grid for L=" +
          std::to_string(scheme.bandlimit));
    }
  }
}

}  // namespace osht
