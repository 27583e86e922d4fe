#include "wavelet_landau/filter_bank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavelet_landau {

FilterBank make_filter(const std::string& builtin) {
  const double r2 = std::sqrt(2.0);
  if (builtin == "haar") {
    return FilterBank{"haar", 0, {1.0 / r2, 1.0 / r2}};
  }
  if (builtin == "d4") {
    const double s3 = std::sqrt(3.0);
    const double c = 4.0 * r2;
    return FilterBank{
        "d4", 0, {(1.0 + s3) / c, (3.0 + s3) / c, (3.0 - s3) / c, (1.0 - s3) / c}};
  }
  if (builtin == "d6") {
    const double s10 = std::sqrt(10.0);
    const double s52 = std::sqrt(5.0 + 2.0 * s10);
    const double c = 16.0 * r2;
    return FilterBank{"d6",
                      0,
                      {(1.0 + s10 + s52) / c, (5.0 + s10 + 3.0 * s52) / c,
                       (10.0 - 2.0 * s10 + 2.0 * s52) / c,
                       (10.0 - 2.0 * s10 - 2.0 * s52) / c,
                       (5.0 + s10 - 3.0 * s52) / c, (1.0 + s10 - s52) / c}};
  }
  throw std::invalid_argument("make_filter: unknown builtin \"" + builtin +
                              "\" (expected haar, d4 or d6)");
}

FilterBank make_filter(int n_min, std::vector<cd> coeffs, std::string name) {
  if (coeffs.empty())
    throw std::invalid_argument("make_filter: empty coefficient list");
  return FilterBank{std::move(name), n_min, std::move(coeffs)};
}

cd m_o(const FilterBank& fb, double omega) {
  cd sum{0.0, 0.0};
  for (int n = fb.n_min; n <= fb.n_max(); ++n)
    sum += fb.h(n) * std::exp(-iu * (static_cast<double>(n) * omega));
  return sum / std::sqrt(2.0);
}

double QmfReport::max_residual() const {
  return std::max({res_normalization, res_shift, res_modulation, res_double_sum});
}

QmfReport verify_qmf(const FilterBank& fb, double tol, int grid_points) {
  if (tol <= 0.0) throw std::invalid_argument("verify_qmf: tol must be > 0");
  if (grid_points < 256) grid_points = 256;

  QmfReport report;
  report.tol = tol;
  report.grid_points = grid_points;

  double norm = 0.0;
  for (const cd& c : fb.coeffs) norm += std::norm(c);
  report.res_normalization = std::abs(norm - 1.0);

  const int ncoef = static_cast<int>(fb.coeffs.size());
  for (int k = 1; 2 * k < ncoef; ++k) {
    cd s{0.0, 0.0};
    for (int n = fb.n_min; n <= fb.n_max(); ++n)
      s += fb.h(n) * std::conj(fb.h(n + 2 * k));
    report.res_shift = std::max(report.res_shift, std::abs(s));
  }

  for (int g = 0; g < grid_points; ++g) {
    const double w = two_pi * g / grid_points;
    const double mod =
        std::norm(m_o(fb, w)) + std::norm(m_o(fb, w + pi));
    report.res_modulation = std::max(report.res_modulation, std::abs(mod - 1.0));

    // the double-sum identity: only even l+n contributes
    cd dsum{0.0, 0.0};
    for (int n = fb.n_min; n <= fb.n_max(); ++n) {
      for (int l = fb.n_min; l <= fb.n_max(); ++l) {
        if ((l + n) % 2 != 0) continue;
        dsum += fb.h(n) * std::conj(fb.h(l)) *
                std::exp(iu * (static_cast<double>(l - n) * w));
      }
    }
    report.res_double_sum =
        std::max(report.res_double_sum, std::abs(dsum - 1.0));
  }

  report.pass = report.max_residual() <= tol;
  return report;
}

}  // namespace wavelet_landau
