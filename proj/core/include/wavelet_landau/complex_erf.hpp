#pragma once

#include "wavelet_landau/constants.hpp"

namespace wavelet_landau {

// Error function of a complex argument, phi(z) = (2/sqrt(pi)) int_0^z e^{-t^2} dt.
//
// Accuracy: better than 1e-12 relative throughout the documented envelope
// |Im z| <= erf_im_max (measured worst case ~4e-15 against a 40-digit
// reference).  Two regimes: a Maclaurin series for |Re z| <= 1.25, where the
// series cancellation is bounded by e^{2 Re(z)^2} for any Im z, and the
// trigonometric series of Abramowitz & Stegun 7.1.29 elsewhere, with folded
// exponentials e^{+-ny - n^2/4 - x^2} to avoid spurious overflow.

inline constexpr double erf_im_max = 12.0;

struct ErfValue {
  cd z;
  cd value;
};

// phi(z).  Throws std::domain_error outside the accuracy envelope.
cd cerf(cd z);

// 1 - phi(z), relatively accurate in the whole plane (used to evaluate
// differences of near-unit error functions without cancellation).
cd cerfc(cd z);

// erfc(u) - erfc(v), rearranged through erfc(-z) = 2 - erfc(z) so that the
// difference stays relatively accurate when both arguments sit deep in the
// left half plane.
cd cerfc_diff(cd u, cd v);

ErfValue make_erf_value(cd z);

}  // namespace wavelet_landau
