#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "wavelet_landau/quadrature.hpp"
#include "wavelet_landau/sampled_function.hpp"

using namespace wavelet_landau;

TEST_CASE("legendre rule integrates its exact-degree polynomials") {
  const QuadratureRule& rule = gauss_legendre(8);
  REQUIRE(rule.nodes.size() == 8);
  // even monomial inside the degree-15 exactness range
  double v = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    v += rule.weights[i] * std::pow(rule.nodes[i], 14);
  CHECK(v == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
  double w = 0.0;
  for (double wi : rule.weights) w += wi;
  CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("hermite rule reproduces gaussian moments") {
  const QuadratureRule& rule = gauss_hermite(32);
  double m0 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    m0 += rule.weights[i];
    m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
  }
  CHECK(m0 == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(0.5 * std::sqrt(pi)).epsilon(1e-13));
}

TEST_CASE("panel integration of an oscillatory integrand") {
  const cd v = integrate_panels([](double x) { return cd{std::sin(x), 0.0}; },
                                0.0, pi, 4);
  CHECK(std::abs(v - cd{2.0, 0.0}) < 1e-13);
}

TEST_CASE("whole-line integration under a gaussian envelope") {
  // normalized gaussian integrates to one for any admissible center/sigma
  for (double c : {0.0, 1.7}) {
    const double s = 0.8;
    const cd v = integrate_gaussian(
        [&](double x) {
          return cd{std::exp(-0.5 * (x - c) * (x - c) / (s * s)) /
                        (s * std::sqrt(two_pi)),
                    0.0};
        },
        c, s);
    CHECK(std::abs(v - cd{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("rules are cached per order") {
  const QuadratureRule& a = gauss_legendre(24);
  const QuadratureRule& b = gauss_legendre(24);
  CHECK(&a == &b);
  CHECK_THROWS_AS((void)gauss_legendre(0), std::invalid_argument);
  CHECK_THROWS_AS((void)gauss_hermite(-3), std::invalid_argument);
}

TEST_CASE("riemann inner product demands commensurate grids") {
  SampledFunction f{0.0, 0.5, {cd{1.0, 0.0}, cd{1.0, 0.0}, cd{1.0, 0.0}}};
  SampledFunction g{1.0, 0.5, {cd{2.0, 0.0}, cd{2.0, 0.0}, cd{2.0, 0.0}}};
  // overlap is the single node x = 1.0
  CHECK(std::abs(riemann_inner_product(f, g) - cd{1.0, 0.0}) < 1e-15);
  SampledFunction h{0.0, 0.25, {cd{1.0, 0.0}}};
  CHECK_THROWS_AS((void)riemann_inner_product(f, h), std::invalid_argument);
  SampledFunction off{0.13, 0.5, {cd{1.0, 0.0}}};
  CHECK_THROWS_AS((void)riemann_inner_product(f, off), std::invalid_argument);
}
