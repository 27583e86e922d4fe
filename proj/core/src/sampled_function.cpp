#include "wavelet_landau/sampled_function.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelet_landau {

cd riemann_inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (std::abs(f.step - g.step) > 1e-14 * f.step)
    throw std::invalid_argument("riemann_inner_product: grid steps differ");
  const double shift = (g.origin - f.origin) / f.step;
  const double rounded = std::round(shift);
  if (std::abs(shift - rounded) > 1e-9)
    throw std::invalid_argument(
        "riemann_inner_product: grids are not aligned to a common lattice");
  // g index j corresponds to f index j + offset
  const long offset = static_cast<long>(rounded);
  cd sum{0.0, 0.0};
  for (long j = 0; j < static_cast<long>(g.samples.size()); ++j) {
    const long i = j + offset;
    if (i < 0 || i >= static_cast<long>(f.samples.size())) continue;
    sum += std::conj(f.samples[static_cast<std::size_t>(i)]) *
           g.samples[static_cast<std::size_t>(j)];
  }
  return f.step * sum;
}

}  // namespace wavelet_landau
