#pragma once

#include <array>
#include <vector>

#include "wavelet_landau/constants.hpp"

namespace wavelet_landau {

// Closed-form lowest-Landau-level wavefunctions for the 2-tap bank, and the
// prior-construction wavefunction H00, both in terms of the complex error
// function, together with their large-|x - iy| asymptotes.
//
// The published four-erf expression and its asymptote contain misprints
// (verified against direct quadrature of the defining integral): the second
// erf pair must carry e^{i x a - (y-a)^2/2} instead of the common e^{-y^2/2},
// and two asymptotic terms acquire wrong exponential factors.  T2_closed /
// T2_asym are the corrected expressions; the *_printed variants transcribe
// the published formulas literally for diagnostic comparison.  The H00 pair
// is consistent as published.

inline constexpr double asym_min_radius = 3.0;

cd T2_closed(double x, double y);
cd T2_asym(double x, double y);  // throws std::domain_error if |x-iy| < 3
cd T2_closed_printed(double x, double y);
cd T2_asym_printed(double x, double y);

cd H00_closed(double x, double y);
cd H00_asym(double x, double y);  // throws std::domain_error if |x-iy| < 3

// Term-by-term magnitudes (prefactor included) of the corrected and printed
// asymptotes at one point; corrected_total/printed_total are the moduli of
// the full expressions, closed_total the corrected closed form's modulus.
struct AsymTermReport {
  double x = 0.0, y = 0.0;
  std::array<double, 4> corrected_mag{};
  std::array<double, 4> printed_mag{};
  double corrected_total = 0.0;
  double printed_total = 0.0;
  double closed_total = 0.0;
};
AsymTermReport asym_terms(double x, double y);

// Axis tabulation of |T2_closed| and |H00_closed| plus least-squares slopes
// of log|f| against the squared coordinate: Gaussian decay shows up as a
// slope near -1/2 along x, the slow y-decay as a slope near 0.
struct LocalizationReport {
  std::vector<double> x_values;
  std::vector<double> t2_x, h00_x;
  std::vector<double> y_values;
  std::vector<double> t2_y, h00_y;
  double slope_t2_x = 0.0, slope_h00_x = 0.0;
  double slope_t2_y = 0.0, slope_h00_y = 0.0;
};
LocalizationReport localization_compare();

// |closed| vs |quadrature synthesis| (and the asymptote where it applies,
// NaN inside the non-asymptotic disk) over an n x n grid on
// [-half_width, half_width]^2.
struct ComparisonRow {
  double x = 0.0, y = 0.0;
  double abs_closed = 0.0, abs_quad = 0.0, abs_asym = 0.0;
  double rel_err = 0.0;
};
struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  double max_rel_err = 0.0;
};
ComparisonTable closed_vs_quadrature_table(int n = 21, double half_width = 3.0);

}  // namespace wavelet_landau
