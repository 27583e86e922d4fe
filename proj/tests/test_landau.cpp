#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "wavelet_landau/landau.hpp"

using namespace wavelet_landau;

namespace {
const double kA = cell_a;
}

TEST_CASE("reduced cell function from a two-tap bank") {
  const FilterBank haar = make_filter("haar");
  const LineFunction T2 = build_T(haar, 1);
  CHECK(T2.kind() == LineFunction::Kind::compact);
  CHECK(std::abs(line_norm_squared(T2) - 1.0) < 1e-12);
  // (1/sqrt(a)) (1 + e^{-i q a}) : maximal at q=0, zero at q=a/2
  CHECK(std::abs(T2(0.0) - cd{std::sqrt(2.0 / kA), 0.0}) < 1e-13);
  CHECK(std::abs(T2(0.5 * kA)) < 1e-13);
  CHECK(std::abs(T2(-0.1)) == 0.0);
  CHECK(std::abs(line_norm_squared(build_T(make_filter("d4"), 1)) - 1.0) < 1e-12);
  CHECK(std::abs(line_norm_squared(build_T(haar, 2)) - 1.0) < 1e-12);
}

TEST_CASE("bank gating and lattice validation") {
  const FilterBank bad = make_filter(0, {cd{1.0, 0.0}, cd{1.0, 0.0}});
  CHECK_THROWS_AS((void)build_T(bad, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)build_T(make_filter("haar"), 0), std::invalid_argument);
  CHECK(LatticeSpec{}.M() == 2);
}

TEST_CASE("scalar cell values match the grid field") {
  const FilterBank haar = make_filter("haar");
  const KqFunction fld = t_kq_field(haar, 1);
  double dev = 0.0;
  for (int ik : {0, 5})
    for (int iq : {0, 11, 40})
      dev = std::max(dev, std::abs(t_kq(haar, 1, fld.k_at(ik), fld.q_at(iq)) -
                                   fld.at(ik, iq)));
  CHECK(dev < 1e-13);
}

TEST_CASE("cell criterion is constant at M/(2pi)") {
  for (const char* name : {"haar", "d4"}) {
    const FilterBank fb = make_filter(name);
    for (int L : {1, 2}) {
      const JReport rep = J_criterion(t_kq_field(fb, L), 2 * L);
      INFO("filter ", name, " L ", L);
      CHECK(rep.target == doctest::Approx(L / pi).epsilon(1e-14));
      CHECK(rep.max_dev <= 1e-10);
    }
  }
  CHECK(J_criterion(t_kq_field(make_filter("haar"), 3), 6).max_dev <= 1e-10);
}

TEST_CASE("cell criterion input validation") {
  const KqFunction fld = t_kq_field(make_filter("haar"), 1);
  CHECK_THROWS_AS((void)J_criterion(fld, 0), std::invalid_argument);
  KqFunction grid_only;
  grid_only.n_k = grid_only.n_q = 8;
  grid_only.values.assign(64, cd{0.0, 0.0});
  CHECK_THROWS_AS((void)J_criterion(grid_only, 2), std::invalid_argument);
}

TEST_CASE("orbital synthesis agrees with the closed form") {
  const LandauOrbital orb{0, build_T(make_filter("haar"), 1), 0, 0};
  CHECK(std::abs(synth(orb, 0.0, 0.0) -
                 cd{0.171718396495382647, -0.0658923874502612972}) < 1e-12);
  CHECK(std::abs(synth(orb, 1.5, -0.7) -
                 cd{0.0145047996733277899, -0.0286931220803578538}) < 1e-12);
  LandauOrbital bad = orb;
  bad.level = 2;
  CHECK_THROWS_AS((void)synth(bad, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("lattice translations compose exactly") {
  const LandauOrbital orb{0, gaussian_line(), 0, 0};
  const OrbitalEvaluator base = [&](double x, double y) {
    return synth(orb, x, y);
  };
  const OrbitalEvaluator once = magnetic_translate(base, 1, 0);
  const OrbitalEvaluator twice = magnetic_translate(once, 1, 1);
  const OrbitalEvaluator direct = magnetic_translate(base, 2, 1);
  for (double x : {-0.7, 0.4})
    for (double y : {0.0, 1.3})
      CHECK(std::abs(twice(x, y) - direct(x, y)) < 1e-13);
}

TEST_CASE("translated orbital equals translated synthesis") {
  const LineFunction g = gaussian_line();
  const LandauOrbital at_site{0, g, 1, 2};
  const OrbitalEvaluator moved =
      magnetic_translate(LandauOrbital{0, g, 0, 0}, 1, 2);
  for (double x : {0.0, -0.9})
    for (double y : {0.2, 1.1})
      CHECK(std::abs(synth(at_site, x, y) - moved(x, y)) < 1e-13);
}

TEST_CASE("gaussian overlaps in closed form") {
  // S_{m,n} = (-1)^{mn} e^{-pi (m^2+n^2)/2} for the normalized gaussian
  const LineFunction g = gaussian_line();
  for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}}) {
    const double expect =
        ((m * n) & 1 ? -1.0 : 1.0) * std::exp(-0.5 * pi * (m * m + n * n));
    INFO("m ", m, " n ", n);
    CHECK(std::abs(overlap_S(g, m, n) - expect) < 1e-12);
  }
}

TEST_CASE("off-sublattice overlap witness is one half") {
  const LineFunction T2 = build_T(make_filter("haar"), 1);
  CHECK(std::abs(overlap_S(T2, 0, 1) - cd{0.5, 0.0}) < 1e-10);
  // disjoint compact supports short-circuit to an exact zero
  CHECK(overlap_S(T2, 2, 0) == cd{0.0, 0.0});
}

TEST_CASE("line and cell overlap routes agree") {
  const FilterBank haar = make_filter("haar");
  const LineFunction T2 = build_T(haar, 1);
  const KqFunction fld = t_kq_field(haar, 1);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 2}})
    CHECK(std::abs(overlap_S(T2, m, n) - overlap_S_kq(fld, m, n)) < 1e-10);
}

TEST_CASE("sublattice overlap tables") {
  const FilterBank haar = make_filter("haar");
  const FilterBank d4 = make_filter("d4");

  const OverlapReport line1 = sublattice_overlaps(build_T(haar, 1), 1, 3);
  CHECK(line1.M == 2);
  CHECK(line1.entries.size() == 49);
  CHECK(line1.max_dev <= 1e-10);

  const OverlapReport kq1 = sublattice_overlaps_kq(t_kq_field(haar, 1), 1, 3);
  CHECK(kq1.max_dev <= 1e-10);
  double cross = 0.0;
  for (const auto& [mn, v] : line1.entries)
    cross = std::max(cross, std::abs(v - kq1.entries.at(mn)));
  CHECK(cross <= 1e-10);

  CHECK(sublattice_overlaps(build_T(d4, 2), 2, 3).max_dev <= 1e-10);
  CHECK_THROWS_AS((void)sublattice_overlaps(build_T(haar, 1), 0),
                  std::invalid_argument);
}

TEST_CASE("Gram determinant of an orthonormal four-site family") {
  const LineFunction T2 = build_T(make_filter("haar"), 1);
  const GramResult gr =
      gram_slater(T2, 2, {{0, 0}, {1, 0}, {0, 2}, {1, 2}});
  CHECK(gr.size == 4);
  CHECK(std::abs(gr.abs_det - 1.0) < 1e-10);
  // hermitian Gram: G_ij = conj(G_ji)
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(gr.matrix[i * 4 + j] - std::conj(gr.matrix[j * 4 + i])) <
            1e-12);
}

TEST_CASE("non-orthonormal family is detected by the determinant") {
  // gaussian overlaps on the full lattice are nonzero, |det G| < 1
  const GramResult gr =
      gram_slater(gaussian_line(), 1, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(gr.abs_det < 1.0 - 1e-3);
  CHECK(gr.abs_det == doctest::Approx(0.80815).epsilon(1e-3));
}

TEST_CASE("Gram site validation") {
  const LineFunction T2 = build_T(make_filter("haar"), 1);
  CHECK_THROWS_AS((void)gram_slater(T2, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS((void)gram_slater(T2, 2, {{0, 0}, {0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)gram_slater(T2, 2, {{0, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)gram_slater(T2, 0, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("first-level overlaps reduce to lowest-level overlaps") {
  const std::vector<std::pair<int, int>> pairs{{0, 0}, {1, 0}, {0, 1}, {1, 2}};
  const EquivalenceReport eh =
      ill_overlap_equivalence(build_T(make_filter("haar"), 1), pairs);
  CHECK(eh.entries.size() == pairs.size());
  CHECK(std::abs(eh.entries[0].level0 - cd{1.0, 0.0}) < 1e-10);
  CHECK(eh.max_dev <= 1e-10);
  const EquivalenceReport eg = ill_overlap_equivalence(gaussian_line(), pairs);
  CHECK(eg.max_dev <= 1e-10);
}

TEST_CASE("independent planar route to a first-level overlap") {
  const LineFunction g = gaussian_line();
  const cd sxy = overlap_level1_xy(g, 1, 0);
  CHECK(std::abs(sxy - overlap_S(g, 1, 0)) < 1e-8);
  // compact reduced functions decay too slowly in the planar integral
  CHECK_THROWS_AS(
      (void)overlap_level1_xy(build_T(make_filter("haar"), 1), 1, 0),
      std::invalid_argument);
}
