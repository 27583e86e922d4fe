#pragma once

#include <cmath>
#include <vector>

#include "wavelet_landau/constants.hpp"

namespace wavelet_landau {

// Gauss quadrature rules, computed once per order by Golub-Welsch and cached.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes/weights on [-1, 1], weight 1.
const QuadratureRule& gauss_legendre(int order);

// Nodes/weights on the whole line, weight e^{-t^2}.
const QuadratureRule& gauss_hermite(int order);

inline constexpr int default_panel_order = 32;
inline constexpr int default_hermite_order = 96;

// int_lo^hi f(x) dx by Gauss-Legendre panels.
template <class F>
cd integrate_panels(F&& f, double lo, double hi, int panels,
                    int order = default_panel_order) {
  const QuadratureRule& rule = gauss_legendre(order);
  cd total{0.0, 0.0};
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    const double half = 0.5 * width;
    cd acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += half * acc;
  }
  return total;
}

// int f(x) dx over the whole line for integrands with a Gaussian envelope
// ~ e^{-(x-center)^2/(2 sigma^2)}: substitute x = center + sqrt(2) sigma t and
// apply Gauss-Hermite with the weight divided back out.  The scaled weights
// w_i e^{t_i^2} are O(1) for the orders used here.
template <class F>
cd integrate_gaussian(F&& f, double center, double sigma,
                      int order = default_hermite_order) {
  const QuadratureRule& rule = gauss_hermite(order);
  const double s = std::sqrt(2.0) * sigma;
  cd acc{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    acc += rule.weights[i] * std::exp(t * t) * f(center + s * t);
  }
  return s * acc;
}

}  // namespace wavelet_landau
