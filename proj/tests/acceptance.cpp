// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every threshold is the contractual tolerance, not a tuned value.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "wavelet_landau/closed_form.hpp"
#include "wavelet_landau/inverse_map.hpp"
#include "wavelet_landau/landau.hpp"
#include "wavelet_landau/zak.hpp"

using namespace wavelet_landau;

namespace {

int g_criterion = 0;
int g_failures = 0;

void report(bool pass, const std::string& what, double measured, double bound) {
  ++g_criterion;
  if (!pass) ++g_failures;
  std::printf("[%2d] %s  %-58s  worst %.3e  bound %.0e\n", g_criterion,
              pass ? "PASS" : "FAIL", what.c_str(), measured, bound);
}

void filter_identities() {
  double exact = 0.0, sampled = 0.0;
  for (const char* name : {"haar", "d4", "d6"}) {
    const QmfReport rep = verify_qmf(make_filter(name));
    exact = std::max({exact, rep.res_normalization, rep.res_shift});
    sampled = std::max({sampled, rep.res_modulation, rep.res_double_sum});
  }
  report(exact <= 1e-12 && sampled <= 1e-10,
         "tap orthogonality, exact and sampled forms (haar d4 d6)",
         std::max(exact, sampled), 1e-10);
}

void cell_criterion() {
  double worst = 0.0;
  for (const char* name : {"haar", "d4"})
    for (int L : {1, 2, 3})
      worst = std::max(
          worst,
          J_criterion(t_kq_field(make_filter(name), L, 64, 64), 2 * L).max_dev);
  report(worst <= 1e-10, "cell sum J_M constant at M/(2pi) (haar d4; L=1,2,3)",
         worst, 1e-10);
}

void sublattice_orthonormality() {
  double worst = 0.0;
  for (const char* name : {"haar", "d4"})
    for (int L : {1, 2}) {
      const FilterBank fb = make_filter(name);
      const OverlapReport line = sublattice_overlaps(build_T(fb, L), L, 3);
      const OverlapReport cell = sublattice_overlaps_kq(t_kq_field(fb, L), L, 3);
      worst = std::max({worst, line.max_dev, cell.max_dev});
      for (const auto& [mn, v] : line.entries)
        worst = std::max(worst, std::abs(v - cell.entries.at(mn)));
    }
  report(worst <= 1e-8,
         "sublattice overlaps = identity, two routes + cross (haar d4; L=1,2)",
         worst, 1e-8);
}

void off_sublattice_witness() {
  const cd s = overlap_S(build_T(make_filter("haar"), 1), 0, 1);
  const double dev = std::abs(s - cd{0.5, 0.0});
  report(dev <= 1e-8, "off-sublattice overlap S_{0,1} = 1/2 (haar, L=1)", dev,
         1e-8);
}

void inverse_construction() {
  double tap_dev = 0.0, k_var = 0.0, shift_res = 0.0;
  for (const char* name : {"haar", "d4", "d6"}) {
    const RoundtripReport rt = roundtrip(make_filter(name));
    tap_dev = std::max(tap_dev, rt.max_dev);
    const auto [lo, hi] =
        std::minmax_element(rt.dev_at_k.begin(), rt.dev_at_k.end());
    k_var = std::max(k_var, *hi - *lo);
    const KqFunction fld = t_kq_field(make_filter(name), 1);
    for (int j = 0; j < 8; ++j) {
      const MraConditionReport mra =
          verify_mra_condition(extract_filter(fld, j * cell_a / 8.0));
      for (int l = 0; l <= 2; ++l)
        shift_res = std::max(shift_res, mra.residuals[l]);
    }
  }
  auto phase = [](double k, double q) {
    const double cell = std::floor(q / cell_a);
    const double q0 = q - cell * cell_a;
    return std::exp(iu * (k * cell * cell_a)) *
           std::exp(iu * std::sin(two_pi * q0 / cell_a)) / std::sqrt(two_pi);
  };
  const KqFunction hp = make_kq_from_evaluator(phase);
  double phase_res = 0.0;
  for (int j = 0; j < 8; ++j)
    phase_res =
        std::max(phase_res,
                 verify_mra_condition(extract_filter(hp, j * cell_a / 8.0))
                     .max_residual);
  const bool pass = tap_dev <= 1e-10 && k_var <= 1e-10 &&
                    shift_res <= 1e-10 && phase_res <= 1e-8;
  report(pass,
         "tap recovery roundtrip, shift sums, k-independence, pure phase",
         std::max({tap_dev, k_var, shift_res, phase_res}), 1e-8);
}

void closed_vs_quadrature() {
  const ComparisonTable tab = closed_vs_quadrature_table(21, 3.0);
  report(tab.max_rel_err <= 1e-6,
         "closed form vs quadrature synthesis, 21x21 moduli on [-3,3]^2",
         tab.max_rel_err, 1e-6);
}

void asymptotics() {
  auto ratio = [](bool t2, double x) {
    const double c =
        t2 ? std::abs(T2_closed(x, 0.0)) : std::abs(H00_closed(x, 0.0));
    const double a = t2 ? std::abs(T2_asym(x, 0.0)) : std::abs(H00_asym(x, 0.0));
    return std::abs(a / c - 1.0);
  };
  bool pass = true;
  double at6 = 0.0;
  for (bool t2 : {true, false}) {
    const double r4 = ratio(t2, 4.0), r6 = ratio(t2, 6.0), r8 = ratio(t2, 8.0);
    at6 = std::max(at6, r6);
    pass = pass && r6 < 0.05 && r4 > r6 && r6 > r8;
  }
  report(pass, "asymptote within 5% at (6,0), improving along x=4,6,8 (both)",
         at6, 5e-2);
}

void level_equivalence() {
  const std::vector<std::pair<int, int>> pairs{{0, 0}, {1, 0}, {0, 1}, {1, 2}};
  const double dev_t2 =
      ill_overlap_equivalence(build_T(make_filter("haar"), 1), pairs).max_dev;
  const double dev_g = ill_overlap_equivalence(gaussian_line(), pairs).max_dev;
  const double worst = std::max(dev_t2, dev_g);
  report(worst <= 1e-6,
         "first-level overlaps equal lowest-level overlaps (haar T2, gaussian)",
         worst, 1e-6);
}

void cell_transform_unitarity() {
  const LineFunction g = gaussian_line();
  const KqFunction zg = zak_transform(g);
  const double norm_dev = std::abs(cell_norm_squared(zg) - line_norm_squared(g));
  double rt = 0.0;
  for (int n : {-1, 0, 1})
    for (int iq : {0, 7, 33}) {
      const double x = zg.q_at(iq);
      rt = std::max(rt, std::abs(inverse_zak(zg, n, x) - g(x + n * cell_a)));
    }
  report(norm_dev <= 1e-8 && rt <= 1e-8,
         "cell transform: norm preservation and inversion (gaussian)",
         std::max(norm_dev, rt), 1e-8);
}

void gram_determinant() {
  const GramResult ortho = gram_slater(build_T(make_filter("haar"), 1), 2,
                                       {{0, 0}, {1, 0}, {0, 2}, {1, 2}});
  const double dev = std::abs(ortho.abs_det - 1.0);
  const GramResult witness =
      gram_slater(gaussian_line(), 1, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  report(dev <= 1e-8 && witness.abs_det < 1.0 - 1e-3,
         "4-site Gram |det| = 1; non-orthonormal witness |det| < 1 - 1e-3",
         dev, 1e-8);
}

}  // namespace

int main() {
  filter_identities();
  cell_criterion();
  sublattice_orthonormality();
  off_sublattice_witness();
  inverse_construction();
  closed_vs_quadrature();
  asymptotics();
  level_equivalence();
  cell_transform_unitarity();
  gram_determinant();
  std::printf("summary: %d/%d criteria pass\n", g_criterion - g_failures,
              g_criterion);
  return g_failures == 0 ? 0 : 1;
}
