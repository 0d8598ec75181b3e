#include "osht/legendre.hpp"

#include <cmath>
#include <string>

#include "osht/errors.hpp"

namespace osht {
namespace {

// While the running values sit below the normal double range they are
// carried as value * 2^(kScaleBits * scale) with scale < 0; the pair is
// rescaled whenever the stored part outgrows 2^kScaleBits.  This keeps the
// seed sin^|m|(theta) — which can fall below the smallest subnormal long
// before the recurrence climbs back into range — at full precision.
constexpr int kScaleBits = 600;
constexpr Real kScaleLimit = 0x1p+600;
constexpr Real kScaleStep = 0x1p-600;

void check_colatitude(Real theta) {
  if (!(theta >= 0.0 && theta <= M_PI)) {
    throw Error("colatitude out of range [0, pi]: " + std::to_string(theta));
  }
}

bool at_pole(Real theta) { return theta == 0.0 || theta == M_PI; }

}  // namespace

Vector scaled_legendre_column(int order, Real theta, int bandlimit) {
  if (bandlimit < 1) {
    throw Error("invalid-bandlimit: band-limit must be >= 1, got " +
                std::to_string(bandlimit));
  }
  const int am = std::abs(order);
  if (am >= bandlimit) {
    throw Error("invalid-order: |m| must be below the band-limit, got m=" +
                std::to_string(order) + ", L=" + std::to_string(bandlimit));
  }
  check_colatitude(theta);

  Vector out(bandlimit - am);
  if (am != 0 && at_pole(theta)) {
    // sin^|m| factor: exactly zero at the poles for every nonzero order
    out.setZero();
    return out;
  }

  const Real x = std::cos(theta);
  const Real s = std::sin(theta);
  const Real sign = (order >= 0 && (am & 1)) ? -1.0 : 1.0;

  // Seed P~_|m|^|m| = sign * sqrt((2|m|+1)/(4 pi) prod_k (2k-1)/(2k)) sin^|m|.
  // The product stays comfortably inside double range for any feasible m.
  Real ratio = 1.0;
  for (int k = 1; k <= am; ++k) ratio *= (2.0 * k - 1.0) / (2.0 * k);
  const Real norm = std::sqrt((2.0 * am + 1.0) / (4.0 * M_PI) * ratio);

  Real curr;
  int scale = 0;
  const Real log2_sin = (am == 0) ? 0.0 : am * std::log2(s);
  if (log2_sin > -960.0) {
    curr = sign * norm * std::pow(s, am);
  } else {
    // sin^|m| alone is out of double range; assemble the seed from its
    // base-2 logarithm with the excess tucked into the scale slot
    const Real log2_seed = log2_sin + std::log2(norm);
    scale = static_cast<int>(std::floor(log2_seed / kScaleBits));
    curr = sign * std::exp2(log2_seed - static_cast<Real>(scale) * kScaleBits);
  }
  out[0] = std::ldexp(curr, scale * kScaleBits);

  Real prev = 0.0;
  for (int l = am + 1; l < bandlimit; ++l) {
    const Real dl = l;
    const Real a = std::sqrt((2.0 * dl - 1.0) * (2.0 * dl + 1.0) /
                             ((dl - am) * (dl + am)));
    const Real b = (l == am + 1)
                       ? 0.0
                       : std::sqrt((2.0 * dl + 1.0) * (dl - 1.0 - am) *
                                   (dl - 1.0 + am) /
                                   ((2.0 * dl - 3.0) * (dl - am) * (dl + am)));
    const Real next = a * x * curr - b * prev;
    prev = curr;
    curr = next;
    if (scale < 0 && std::abs(curr) >= kScaleLimit) {
      curr *= kScaleStep;
      prev *= kScaleStep;
      ++scale;
    }
    out[l - am] = std::ldexp(curr, scale * kScaleBits);
  }
  return out;
}

Real scaled_legendre(int degree, int order, Real theta) {
  if (degree < 0 || std::abs(order) > degree) {
    throw Error("invalid-degree-order: require |m| <= l, got l=" +
                std::to_string(degree) + ", m=" + std::to_string(order));
  }
  const Vector column = scaled_legendre_column(order, theta, degree + 1);
  return column[column.size() - 1];
}

Complex spherical_harmonic(int degree, int order, Real theta, Real phi) {
  const Real p = scaled_legendre(degree, order, theta);
  const Real arg = static_cast<Real>(order) * phi;
  return Complex(p * std::cos(arg), p * std::sin(arg));
}

}  // namespace osht
