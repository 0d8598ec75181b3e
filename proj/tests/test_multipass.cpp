#include "osht/multipass.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

#include "osht/errors.hpp"
#include "osht/sht.hpp"
#include "support/helpers.hpp"

using osht::ComplexVector;
using osht::HarmonicCoeffs;
using osht::MultipassResult;
using osht::Real;
using osht::SamplingScheme;
using osht::SpatialSignal;
using osht::multipass_sht;
using osht::residual;

TEST_CASE("residual of the exact coefficients is numerically zero") {
  const int L = 8;
  const SamplingScheme scheme = osht_test::elimination_scheme(L);
  const HarmonicCoeffs coeffs = osht_test::random_coeffs(L, 31);
  const SpatialSignal signal = osht::inverse_sht(scheme, coeffs);
  const SpatialSignal r = residual(scheme, signal, coeffs);
  CHECK(r.samples.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("residual of zero coefficients is the signal itself") {
  const int L = 6;
  const SamplingScheme scheme = osht_test::elimination_scheme(L);
  const SpatialSignal signal =
      osht::inverse_sht(scheme, osht_test::random_coeffs(L, 32));
  const HarmonicCoeffs zero{L, ComplexVector::Zero(L * L)};
  const SpatialSignal r = residual(scheme, signal, zero);
  CHECK((r.samples - signal.samples).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("residual plus synthesis returns the signal") {
  const int L = 6;
  const SamplingScheme scheme = osht_test::elimination_scheme(L);
  const SpatialSignal signal =
      osht::inverse_sht(scheme, osht_test::random_coeffs(L, 33));
  const HarmonicCoeffs coeffs = osht_test::random_coeffs(L, 34);
  const SpatialSignal r = residual(scheme, signal, coeffs);
  const ComplexVector reconstructed =
      r.samples + osht::inverse_sht(scheme, coeffs).samples;
  // (a - b) + b eats at most one rounding per entry
  CHECK((reconstructed - signal.samples).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("multipass stops at one pass when the first solve is converged") {
  const int L = 4;
  const SamplingScheme scheme = osht_test::elimination_scheme(L);
  const SpatialSignal signal =
      osht::inverse_sht(scheme, osht_test::random_coeffs(L, 35));
  const MultipassResult run = multipass_sht(scheme, signal, 20);
  CHECK(run.passes >= 1);
  CHECK(run.passes <= 3);  // at machine precision a pass or two at most
  CHECK(run.residual_history.size() == static_cast<std::size_t>(run.passes));
  // the result is at least as good as the single-pass solve
  const HarmonicCoeffs single = osht::forward_sht(scheme, signal);
  const Real single_residual =
      residual(scheme, signal, single).samples.cwiseAbs().maxCoeff();
  CHECK(run.residual_history.back() <= single_residual);
}

TEST_CASE("accepted passes strictly decrease the residual") {
  const int L = 32;
  const SamplingScheme scheme = osht_test::elimination_scheme(L);
  const SpatialSignal signal =
      osht::inverse_sht(scheme, osht_test::random_coeffs(L, 36));
  const MultipassResult run = multipass_sht(scheme, signal, 20);
  REQUIRE(run.residual_history.size() == static_cast<std::size_t>(run.passes));
  for (std::size_t p = 1; p < run.residual_history.size(); ++p) {
    CHECK(run.residual_history[p] < run.residual_history[p - 1]);
  }
  CHECK(run.passes <= 20);
}

TEST_CASE("refinement never loses to the single pass") {
  const int L = 64;
  const SamplingScheme scheme = osht_test::elimination_scheme(L);
  const HarmonicCoeffs truth = osht_test::random_coeffs(L, 37);
  const SpatialSignal signal = osht::inverse_sht(scheme, truth);

  const HarmonicCoeffs single = osht::forward_sht(scheme, signal);
  const Real e_single = osht_test::max_abs_diff(single.values, truth.values);

  const MultipassResult run = multipass_sht(scheme, signal, 20);
  const Real e_multi = osht_test::max_abs_diff(run.coeffs.values, truth.values);
  CHECK(e_multi <= e_single);
}

TEST_CASE("pass observer sees every accepted pass in order") {
  const int L = 16;
  const SamplingScheme scheme = osht_test::elimination_scheme(L);
  const SpatialSignal signal =
      osht::inverse_sht(scheme, osht_test::random_coeffs(L, 38));
  std::vector<int> passes;
  std::vector<Real> residuals;
  const MultipassResult run = multipass_sht(
      scheme, signal, 20,
      [&](int pass, const HarmonicCoeffs& estimate, Real residual_max) {
        passes.push_back(pass);
        residuals.push_back(residual_max);
        CHECK(estimate.bandlimit == L);
      });
  REQUIRE(passes.size() == static_cast<std::size_t>(run.passes));
  for (int p = 0; p < run.passes; ++p) {
    CHECK(passes[p] == p + 1);
    CHECK(residuals[p] == run.residual_history[p]);
  }
}

TEST_CASE("a pass budget of one runs exactly one pass") {
  const int L = 8;
  const SamplingScheme scheme = osht_test::elimination_scheme(L);
  const SpatialSignal signal =
      osht::inverse_sht(scheme, osht_test::random_coeffs(L, 39));
  const MultipassResult run = multipass_sht(scheme, signal, 1);
  CHECK(run.passes == 1);
  const HarmonicCoeffs single = osht::forward_sht(scheme, signal);
  CHECK(osht_test::max_abs_diff(run.coeffs.values, single.values) == 0.0);
}

TEST_CASE("invalid pass budgets and propagated failures") {
  const SamplingScheme scheme = osht_test::elimination_scheme(4);
  const SpatialSignal signal =
      osht::inverse_sht(scheme, osht_test::random_coeffs(4, 40));
  CHECK_THROWS_AS(multipass_sht(scheme, signal, 0), osht::Error);

  const SamplingScheme ascending = osht_test::ascending_scheme(8);
  const SpatialSignal bad =
      osht::inverse_sht(ascending, osht_test::random_coeffs(8, 41));
  CHECK_THROWS_AS(multipass_sht(ascending, bad, 5),
                  osht::SingularSystemError);
}
