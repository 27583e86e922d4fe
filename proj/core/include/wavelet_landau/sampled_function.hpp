#pragma once

#include <vector>

#include "wavelet_landau/constants.hpp"

namespace wavelet_landau {

// Complex samples on a uniform real-line grid x_j = origin + j*step.
struct SampledFunction {
  double origin = 0.0;
  double step = 1.0;
  std::vector<cd> samples;

  double x_at(std::size_t j) const { return origin + step * static_cast<double>(j); }

  // Left-endpoint Riemann sum of the samples.
  cd riemann_integral() const {
    cd sum{0.0, 0.0};
    for (const cd& v : samples) sum += v;
    return step * sum;
  }
};

// Riemann inner product <f, g> = step * sum conj(f) g over the grid overlap.
// Grids must share the step and be offset by an integer number of steps.
cd riemann_inner_product(const SampledFunction& f, const SampledFunction& g);

}  // namespace wavelet_landau
