#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wavelet_landau/filter_bank.hpp"

using namespace wavelet_landau;

namespace {
double cdist(cd a, cd b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("builtin taps match their closed forms") {
  const double r2 = std::sqrt(2.0);
  const FilterBank haar = make_filter("haar");
  REQUIRE(haar.n_min == 0);
  REQUIRE(haar.coeffs.size() == 2);
  CHECK(cdist(haar.h(0), 1.0 / r2) < 1e-15);
  CHECK(cdist(haar.h(1), 1.0 / r2) < 1e-15);

  const double s3 = std::sqrt(3.0);
  const FilterBank d4 = make_filter("d4");
  REQUIRE(d4.coeffs.size() == 4);
  CHECK(cdist(d4.h(0), (1.0 + s3) / (4.0 * r2)) < 1e-15);
  CHECK(cdist(d4.h(3), (1.0 - s3) / (4.0 * r2)) < 1e-15);

  const FilterBank d6 = make_filter("d6");
  REQUIRE(d6.coeffs.size() == 6);
  // taps sum to sqrt(2) (unit constant after the two-scale normalization)
  cd sum{0.0, 0.0};
  for (int n = d6.n_min; n <= d6.n_max(); ++n) sum += d6.h(n);
  CHECK(cdist(sum, r2) < 1e-14);
}

TEST_CASE("taps vanish outside the stored range") {
  const FilterBank d4 = make_filter("d4");
  CHECK(d4.h(-1) == cd{0.0, 0.0});
  CHECK(d4.h(4) == cd{0.0, 0.0});
  CHECK(d4.n_max() == 3);
}

TEST_CASE("builtins pass the orthogonality identities") {
  for (const char* name : {"haar", "d4", "d6"}) {
    const QmfReport rep = verify_qmf(make_filter(name));
    INFO("filter ", name);
    CHECK(rep.res_normalization <= 1e-12);
    CHECK(rep.res_shift <= 1e-12);
    CHECK(rep.res_modulation <= 1e-10);
    CHECK(rep.res_double_sum <= 1e-10);
    CHECK(rep.grid_points == 256);
    CHECK(rep.pass);
    CHECK(rep.max_residual() <= 1e-10);
  }
}

TEST_CASE("transfer function at the two half-band points") {
  for (const char* name : {"haar", "d4", "d6"}) {
    const FilterBank fb = make_filter(name);
    INFO("filter ", name);
    CHECK(cdist(m_o(fb, 0.0), cd{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(m_o(fb, pi)) < 1e-14);
  }
}

TEST_CASE("modulated complex taps keep the identities") {
  // h_n -> e^{i n alpha} h_n preserves every orthogonality relation.
  const FilterBank d4 = make_filter("d4");
  const double alpha = 0.731;
  std::vector<cd> mod;
  for (int n = d4.n_min; n <= d4.n_max(); ++n)
    mod.push_back(std::exp(iu * (alpha * n)) * d4.h(n));
  const FilterBank fb = make_filter(d4.n_min, mod, "d4-modulated");
  const QmfReport rep = verify_qmf(fb, user_qmf_tol);
  CHECK(rep.pass);
  CHECK(rep.max_residual() <= 1e-12);
}

TEST_CASE("a non-orthogonal tap list is rejected with residual 1") {
  const FilterBank bad = make_filter(0, {cd{1.0, 0.0}, cd{1.0, 0.0}});
  const QmfReport rep = verify_qmf(bad, user_qmf_tol);
  CHECK(!rep.pass);
  CHECK(rep.res_normalization == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("constructor error paths") {
  CHECK_THROWS_AS((void)make_filter("db97"), std::invalid_argument);
  CHECK_THROWS_AS((void)make_filter(0, std::vector<cd>{}), std::invalid_argument);
  CHECK_THROWS_AS((void)verify_qmf(make_filter("haar"), 0.0), std::invalid_argument);
}
