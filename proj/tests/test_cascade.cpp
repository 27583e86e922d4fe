#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "wavelet_landau/cascade.hpp"
#include "wavelet_landau/sampled_function.hpp"

using namespace wavelet_landau;

TEST_CASE("two-tap scaling function is the unit indicator") {
  const SampledFunction phi = scaling_function(make_filter("haar"), 6);
  CHECK(phi.origin == doctest::Approx(0.0));
  // every sample in [0,1) equals 1 exactly
  for (std::size_t j = 0; j < phi.samples.size(); ++j) {
    if (phi.x_at(j) >= 1.0 - 1e-12) break;
    CHECK(std::abs(phi.samples[j] - cd{1.0, 0.0}) < 1e-14);
  }
  CHECK(std::abs(phi.riemann_integral() - cd{1.0, 0.0}) < 1e-13);
}

TEST_CASE("two-tap wavelet is the square pulse pair") {
  const SampledFunction psi = mother_wavelet(make_filter("haar"), 6);
  // +1 on [0,1/2), -1 on [1/2,1)
  bool saw_pos = false, saw_neg = false;
  for (std::size_t j = 0; j < psi.samples.size(); ++j) {
    const double x = psi.x_at(j);
    if (x >= 0.0 && x < 0.5 - 1e-12) {
      CHECK(std::abs(psi.samples[j] - cd{1.0, 0.0}) < 1e-14);
      saw_pos = true;
    } else if (x >= 0.5 && x < 1.0 - 1e-12) {
      CHECK(std::abs(psi.samples[j] + cd{1.0, 0.0}) < 1e-14);
      saw_neg = true;
    }
  }
  CHECK(saw_pos);
  CHECK(saw_neg);
  const SampledFunction phi = scaling_function(make_filter("haar"), 6);
  CHECK(std::abs(riemann_inner_product(psi, psi) - cd{1.0, 0.0}) < 1e-13);
  CHECK(std::abs(riemann_inner_product(psi, phi)) < 1e-13);
}

TEST_CASE("four-tap cascade keeps the partition of unity") {
  // Translates of the scaling function sum to 1 at every cascade depth, so
  // the grid Riemann integral is exact.
  const SampledFunction phi = scaling_function(make_filter("d4"), 12);
  CHECK(std::abs(phi.riemann_integral() - cd{1.0, 0.0}) < 1e-10);
}

TEST_CASE("four-tap wavelet orthonormality on the deep dyadic grid") {
  const FilterBank d4 = make_filter("d4");
  const SampledFunction psi = mother_wavelet(d4, 19);
  const SampledFunction phi = scaling_function(d4, 19);
  CHECK(std::abs(riemann_inner_product(psi, psi) - cd{1.0, 0.0}) < 1e-8);
  CHECK(std::abs(riemann_inner_product(psi, phi)) < 1e-6);
}

TEST_CASE("degenerate single-impulse bank fails to converge") {
  // {1, 0} passes every orthogonality identity but its two-scale iteration
  // concentrates mass and the sup norm grows without bound.
  const FilterBank impulse = make_filter(0, {cd{1.0, 0.0}, cd{0.0, 0.0}});
  CHECK(verify_qmf(impulse, user_qmf_tol).pass);
  CHECK_THROWS_AS((void)scaling_function(impulse, 8), std::runtime_error);
}

TEST_CASE("cascade input validation") {
  CHECK_THROWS_AS((void)scaling_function(make_filter("haar"), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)scaling_function(make_filter(0, {cd{1.0, 0.0}})),
                  std::invalid_argument);
  const FilterBank bad = make_filter(0, {cd{1.0, 0.0}, cd{1.0, 0.0}});
  CHECK_THROWS_AS((void)scaling_function(bad), std::invalid_argument);
  CHECK_THROWS_AS((void)mother_wavelet(bad), std::invalid_argument);
}
