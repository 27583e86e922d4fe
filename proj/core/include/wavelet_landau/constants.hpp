#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace wavelet_landau {

using cd = std::complex<double>;

// Lattice constant of the kq cell: a^2 = 2*pi exactly (rationality condition).
inline const double cell_a = std::sqrt(2.0 * std::numbers::pi);

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr cd iu{0.0, 1.0};

}  // namespace wavelet_landau
