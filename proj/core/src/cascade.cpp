#include "wavelet_landau/cascade.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wavelet_landau {

namespace {

void require_valid(const FilterBank& fb, int depth) {
  if (depth < 1)
    throw std::invalid_argument("cascade: depth must be >= 1");
  if (fb.coeffs.size() < 2)
    throw std::invalid_argument("cascade: filter needs at least two taps");
  const QmfReport qmf = verify_qmf(fb, user_qmf_tol);
  if (qmf.res_normalization > 1e-6 || qmf.res_shift > 1e-6)
    throw std::invalid_argument("cascade: filter bank \"" + fb.name +
                                "\" fails QMF verification (residual " +
                                std::to_string(qmf.max_residual()) + ")");
}

}  // namespace

SampledFunction scaling_function(const FilterBank& fb, int depth) {
  require_valid(fb, depth);
  const int width = fb.n_max() - fb.n_min;  // support length
  const double sqrt2 = std::sqrt(2.0);

  // depth 0: indicator of [0,1) sampled on the integers of [n_min, n_max]
  std::vector<cd> vals(static_cast<std::size_t>(width) + 1, cd{0.0, 0.0});
  if (fb.n_min <= 0 && 0 <= fb.n_max())
    vals[static_cast<std::size_t>(-fb.n_min)] = cd{1.0, 0.0};

  double prev_diff = -1.0;
  for (int d = 1; d <= depth; ++d) {
    const long half = 1L << (d - 1);
    const long m = static_cast<long>(width) * 2L * half + 1L;
    std::vector<cd> next(static_cast<std::size_t>(m), cd{0.0, 0.0});
    // phi_d(n_min + j 2^-d) = sqrt2 sum_n h_n phi_{d-1} at old index
    // j + (n_min - n) 2^{d-1}
    for (int n = fb.n_min; n <= fb.n_max(); ++n) {
      const cd hn = sqrt2 * fb.h(n);
      const long shift = static_cast<long>(fb.n_min - n) * half;
      const long lo = std::max(0L, -shift);
      const long hi = std::min(m, static_cast<long>(vals.size()) - shift);
      for (long j = lo; j < hi; ++j)
        next[static_cast<std::size_t>(j)] +=
            hn * vals[static_cast<std::size_t>(j + shift)];
    }
    // contraction check on the shared (coarser) grid
    double diff = 0.0;
    for (std::size_t j = 0; j < vals.size(); ++j)
      diff = std::max(diff, std::abs(next[2 * j] - vals[j]));
    if (d >= 4 && prev_diff >= 0.0 && diff > prev_diff * 1.000001 + 1e-13 &&
        diff > 1e-9)
      throw std::runtime_error(
          "scaling_function: cascade residual grows at depth " +
          std::to_string(d) + " (" + std::to_string(diff) + " > " +
          std::to_string(prev_diff) + "); iteration does not converge");
    prev_diff = diff;
    vals = std::move(next);
  }

  SampledFunction out;
  out.origin = fb.n_min;
  out.step = std::ldexp(1.0, -depth);
  out.samples = std::move(vals);
  return out;
}

SampledFunction mother_wavelet(const FilterBank& fb, int depth) {
  const SampledFunction phi = scaling_function(fb, depth);
  const double sqrt2 = std::sqrt(2.0);
  const long scale = 1L << depth;

  // psi support: x with 2x - n in [n_min, n_max] for n in [1-n_max, 1-n_min]
  const double lo = 0.5 * (fb.n_min + 1 - fb.n_max());
  const long m = static_cast<long>(fb.n_max() - fb.n_min) * scale + 1L;

  SampledFunction psi;
  psi.origin = lo;
  psi.step = phi.step;
  psi.samples.assign(static_cast<std::size_t>(m), cd{0.0, 0.0});
  for (int n = 1 - fb.n_max(); n <= 1 - fb.n_min; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const cd g = sqrt2 * sign * fb.h(1 - n);
    // phi(2x - n) at x = lo + j 2^-depth: phi index 2j + (2*lo - n - n_min)*2^depth
    const long base = static_cast<long>(
        std::lround((2.0 * lo - n - fb.n_min) * static_cast<double>(scale)));
    for (long j = 0; j < m; ++j) {
      const long i = 2L * j + base;
      if (i < 0 || i >= static_cast<long>(phi.samples.size())) continue;
      psi.samples[static_cast<std::size_t>(j)] +=
          g * phi.samples[static_cast<std::size_t>(i)];
    }
  }
  return psi;
}

}  // namespace wavelet_landau
