#pragma once

#include "osht/types.hpp"

namespace osht {

/// Scaled associated Legendre function
///   P~_l^m(theta) = Y_l^m(theta, 0)
///                 = sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_l^m(cos theta)
/// with the Condon-Shortley phase inside P_l^m.  Exactly zero at the poles
/// (theta == 0 or theta == pi) whenever m != 0, and P~_l^{-m} = (-1)^m P~_l^m.
///
/// Throws Error unless 0 <= |m| <= l and 0 <= theta <= pi.
Real scaled_legendre(int degree, int order, Real theta);

/// One recurrence sweep at fixed order: element i holds
/// P~_{|m|+i}^m(theta) for i = 0 .. bandlimit-1-|m|.
///
/// Intermediates are carried with an explicit power-of-two scale, so the
/// sweep neither overflows nor flushes to zero for band-limits up to 1024
/// even where the seed sin^|m|(theta) falls far below the double range.
///
/// Throws Error unless |m| < bandlimit and 0 <= theta <= pi.
Vector scaled_legendre_column(int order, Real theta, int bandlimit);

/// Y_l^m(theta, phi) = P~_l^m(theta) e^{i m phi}.
Complex spherical_harmonic(int degree, int order, Real theta, Real phi);

}  // namespace osht
