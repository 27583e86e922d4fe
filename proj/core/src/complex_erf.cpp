#include "wavelet_landau/complex_erf.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelet_landau {

namespace {

constexpr double kSeriesSplit = 1.25;  // Maclaurin below, A&S 7.1.29 above

// Maclaurin series of erf.  Relative cancellation is bounded by
// e^{2x^2} <= e^{2*1.25^2} ~ 23 for x <= kSeriesSplit, independent of y.
cd erf_maclaurin(cd z) {
  cd term = z;
  cd sum = z;
  const cd zz = z * z;
  for (int k = 1; k < 4000; ++k) {
    term *= -zz / static_cast<double>(k);
    const cd add = term / static_cast<double>(2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return 2.0 / std::sqrt(pi) * sum;
}

struct SalzerTail {
  double re = 0.0;  // correction to erf(x), real part
  double im = 0.0;
};

// Correction terms of A&S 7.1.29 for erf(x+iy) - erf(x), x > 0, y >= 0.
// All exponentials are combined as exp(+-ny - n^2/4 - x^2) before
// evaluation, so intermediates overflow only when the result itself would.
SalzerTail salzer_tail(double x, double y) {
  const double x2 = x * x;
  const double c2 = std::cos(2.0 * x * y);
  const double s2 = std::sin(2.0 * x * y);
  double sum_re = 0.0;
  double sum_im = 0.0;
  const int nmax = static_cast<int>(2.0 * y) + 64;
  for (int n = 1; n <= nmax; ++n) {
    const double q = 0.25 * n * n + x2;
    const double ep = std::exp(n * y - q);
    const double em = std::exp(-n * y - q);
    const double ch = 0.5 * (ep + em);
    const double sh = 0.5 * (ep - em);
    const double den = n * n + 4.0 * x2;
    sum_re += (2.0 * x * std::exp(-q) - 2.0 * x * ch * c2 + n * sh * s2) / den;
    sum_im += (2.0 * x * ch * s2 + n * sh * c2) / den;
  }
  const double ex = std::exp(-x2);
  SalzerTail t;
  t.re = ex * (1.0 - c2) / (2.0 * pi * x) + (2.0 / pi) * sum_re;
  t.im = ex * s2 / (2.0 * pi * x) + (2.0 / pi) * sum_im;
  return t;
}

// First-quadrant erf, x = Re z >= 0, y = Im z >= 0.
cd erf_quadrant(double x, double y) {
  if (x <= kSeriesSplit) return erf_maclaurin(cd(x, y));
  const SalzerTail t = salzer_tail(x, y);
  return cd(std::erf(x) + t.re, t.im);
}

// First-quadrant erfc.  The x > split branch subtracts the Salzer tail from
// std::erfc(x), which keeps the result relatively accurate arbitrarily deep
// into the erfc ~ e^{-x^2} regime.
cd erfc_quadrant(double x, double y) {
  if (x <= kSeriesSplit) return 1.0 - erf_maclaurin(cd(x, y));
  const SalzerTail t = salzer_tail(x, y);
  return cd(std::erfc(x) - t.re, -t.im);
}

}  // namespace

cd cerf(cd z) {
  if (std::abs(z.imag()) > erf_im_max)
    throw std::domain_error("cerf: |Im z| exceeds the accuracy envelope of 12");
  cd v = erf_quadrant(std::abs(z.real()), std::abs(z.imag()));
  if (z.imag() < 0.0) v = std::conj(v);
  if (z.real() < 0.0) v = -std::conj(v);  // erf(-x+iy) = -conj(erf(x+iy))
  return v;
}

cd cerfc(cd z) {
  if (z.real() < 0.0) return 2.0 - cerfc(-z);
  cd v = erfc_quadrant(z.real(), std::abs(z.imag()));
  if (z.imag() < 0.0) v = std::conj(v);
  return v;
}

cd cerfc_diff(cd u, cd v) {
  if (u.real() < 0.0 && v.real() < 0.0) return cerfc(-v) - cerfc(-u);
  return cerfc(u) - cerfc(v);
}

ErfValue make_erf_value(cd z) { return ErfValue{z, cerf(z)}; }

}  // namespace wavelet_landau
