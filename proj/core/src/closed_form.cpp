#include "wavelet_landau/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wavelet_landau/complex_erf.hpp"
#include "wavelet_landau/filter_bank.hpp"
#include "wavelet_landau/landau.hpp"
#include "wavelet_landau/parallel.hpp"

namespace wavelet_landau {

namespace {

const double root2 = std::sqrt(2.0);

void require_asym_regime(const cd& w) {
  if (std::abs(w) < asym_min_radius)
    throw std::domain_error(
        "asymptotic form evaluated inside the non-asymptotic disk |x-iy| < 3");
}

// erf pair differences of the four-erf expression, stable at large |x|.
struct ErfPairs {
  cd A;  // erf((x+a-iy)/r2)     - erf((x-iy)/r2)
  cd B;  // erf((x+a-i(y-a))/r2) - erf((x-i(y-a))/r2)
};

ErfPairs erf_pairs(double x, double y) {
  const cd z1{(x + cell_a) / root2, -y / root2};
  const cd z2{(x + cell_a) / root2, -(y - cell_a) / root2};
  const cd z3{x / root2, -y / root2};
  const cd z4{x / root2, -(y - cell_a) / root2};
  return {cerfc_diff(z3, z1), cerfc_diff(z4, z2)};
}

}  // namespace

cd T2_closed(double x, double y) {
  const ErfPairs p = erf_pairs(x, y);
  const cd pref = std::sqrt(cell_a) / (4.0 * std::pow(pi, 0.75)) *
                  std::exp(cd{0.0, -0.5 * x * y});
  const double ya = y - cell_a;
  return pref * (std::exp(-0.5 * y * y) * p.A +
                 std::exp(cd{-0.5 * ya * ya, x * cell_a}) * p.B);
}

cd T2_closed_printed(double x, double y) {
  // Literal transcription: common e^{-y^2/2}, no e^{ixa} on the second pair.
  const ErfPairs p = erf_pairs(x, y);
  const cd pref = std::sqrt(cell_a) / (4.0 * std::pow(pi, 0.75)) *
                  std::exp(cd{-0.5 * y * y, -0.5 * x * y});
  return pref * (p.A + p.B);
}

namespace {

cd asym_prefactor(double x, double y) {
  return std::sqrt(cell_a) / (2.0 * root2 * std::pow(pi, 1.25)) *
         std::exp(cd{-0.5 * x * x, 0.5 * x * y});
}

std::array<cd, 4> asym_terms_corrected(const cd& w) {
  const cd ia{0.0, cell_a};
  const cd e = std::exp(-pi - cell_a * w);
  return {1.0 / w, 1.0 / (w + ia), -e / (w + cell_a), -e / (w + cell_a + ia)};
}

std::array<cd, 4> asym_terms_printed(const cd& w) {
  const cd ia{0.0, cell_a};
  return {1.0 / w, std::exp(pi - iu * (cell_a * w)) / (w + ia),
          -std::exp(-pi - cell_a * w) / (w + cell_a),
          -std::exp(-cell_a * w * cd{1.0, 1.0}) / (w + cell_a + ia)};
}

}  // namespace

cd T2_asym(double x, double y) {
  const cd w{x, -y};
  require_asym_regime(w);
  const std::array<cd, 4> t = asym_terms_corrected(w);
  return asym_prefactor(x, y) * (t[0] + t[1] + t[2] + t[3]);
}

cd T2_asym_printed(double x, double y) {
  const cd w{x, -y};
  require_asym_regime(w);
  const std::array<cd, 4> t = asym_terms_printed(w);
  return asym_prefactor(x, y) * (t[0] + t[1] + t[2] + t[3]);
}

cd H00_closed(double x, double y) {
  const cd z{x / root2, -y / root2};
  const double b = 0.5 / root2;
  // 2 erf(z+b) - erf(z) - erf(z+2b) as complementary-difference pairs.
  const cd combo = cerfc_diff(z, z + b) - cerfc_diff(z + b, z + 2.0 * b);
  const cd pref =
      std::exp(cd{-0.5 * y * y, -0.5 * x * y}) / (2.0 * std::pow(pi, 0.25));
  return pref * combo;
}

cd H00_asym(double x, double y) {
  const cd w{x, -y};
  require_asym_regime(w);
  const cd sum = 1.0 / w + std::exp(-0.5 - w) / (w + 1.0) -
                 2.0 * std::exp(-0.125 - 0.5 * w) / (w + 0.5);
  const cd pref = std::sqrt(2.0 / pi) *
                  std::exp(cd{-0.5 * x * x, 0.5 * x * y}) /
                  (2.0 * std::pow(pi, 0.25));
  return pref * sum;
}

AsymTermReport asym_terms(double x, double y) {
  AsymTermReport rep;
  rep.x = x;
  rep.y = y;
  const cd w{x, -y};
  const cd pref = asym_prefactor(x, y);
  const std::array<cd, 4> tc = asym_terms_corrected(w);
  const std::array<cd, 4> tp = asym_terms_printed(w);
  cd sc{0.0, 0.0}, sp{0.0, 0.0};
  for (int i = 0; i < 4; ++i) {
    rep.corrected_mag[i] = std::abs(pref * tc[i]);
    rep.printed_mag[i] = std::abs(pref * tp[i]);
    sc += tc[i];
    sp += tp[i];
  }
  rep.corrected_total = std::abs(pref * sc);
  rep.printed_total = std::abs(pref * sp);
  rep.closed_total = std::abs(T2_closed(x, y));
  return rep;
}

namespace {

double fit_slope(const std::vector<double>& u, const std::vector<double>& v) {
  const std::size_t n = u.size();
  double mu = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= n;
  mv /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (u[i] - mu) * (v[i] - mv);
    den += (u[i] - mu) * (u[i] - mu);
  }
  return num / den;
}

double axis_slope(const std::vector<double>& coords,
                  const std::vector<double>& mods, double lo, double hi) {
  std::vector<double> u, v;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= lo - 1e-12 && coords[i] <= hi + 1e-12) {
      u.push_back(coords[i] * coords[i]);
      v.push_back(std::log(mods[i]));
    }
  }
  return fit_slope(u, v);
}

}  // namespace

LocalizationReport localization_compare() {
  LocalizationReport rep;
  for (int i = 0; i <= 12; ++i) {
    const double c = 0.5 * i;
    rep.x_values.push_back(c);
    rep.t2_x.push_back(std::abs(T2_closed(c, 0.0)));
    rep.h00_x.push_back(std::abs(H00_closed(c, 0.0)));
    rep.y_values.push_back(c);
    rep.t2_y.push_back(std::abs(T2_closed(0.0, c)));
    rep.h00_y.push_back(std::abs(H00_closed(0.0, c)));
  }
  rep.slope_t2_x = axis_slope(rep.x_values, rep.t2_x, 3.0, 6.0);
  rep.slope_h00_x = axis_slope(rep.x_values, rep.h00_x, 3.0, 6.0);
  rep.slope_t2_y = axis_slope(rep.y_values, rep.t2_y, 3.0, 6.0);
  rep.slope_h00_y = axis_slope(rep.y_values, rep.h00_y, 3.0, 6.0);
  return rep;
}

ComparisonTable closed_vs_quadrature_table(int n, double half_width) {
  if (n < 2)
    throw std::invalid_argument("closed_vs_quadrature_table: grid too small");
  LandauOrbital orb;
  orb.level = 0;
  orb.hP = build_T(make_filter("haar"), 1);

  ComparisonTable tab;
  tab.rows.assign(static_cast<std::size_t>(n) * n, ComparisonRow{});
  const double step = 2.0 * half_width / (n - 1);
  parallel_for(n, [&](int i) {
    const double x = -half_width + i * step;
    for (int j = 0; j < n; ++j) {
      const double y = -half_width + j * step;
      ComparisonRow& r = tab.rows[static_cast<std::size_t>(i) * n + j];
      r.x = x;
      r.y = y;
      r.abs_closed = std::abs(T2_closed(x, y));
      r.abs_quad = std::abs(synth(orb, x, y));
      r.abs_asym = (std::hypot(x, y) >= asym_min_radius)
                       ? std::abs(T2_asym(x, y))
                       : std::numeric_limits<double>::quiet_NaN();
      r.rel_err =
          std::abs(r.abs_closed - r.abs_quad) / std::max(r.abs_closed, 1e-300);
    }
  });
  for (const auto& r : tab.rows)
    tab.max_rel_err = std::max(tab.max_rel_err, r.rel_err);
  return tab;
}

}  // namespace wavelet_landau
