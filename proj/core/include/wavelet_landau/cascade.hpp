#pragma once

#include "wavelet_landau/filter_bank.hpp"
#include "wavelet_landau/sampled_function.hpp"

namespace wavelet_landau {

inline constexpr int default_cascade_depth = 10;

// Scaling function phi on the dyadic grid of resolution 2^{-depth} over the
// filter support [n_min, n_max], by cascade iteration of the two-scale
// relation phi_{j+1}(x) = sqrt(2) sum_n h_n phi_j(2x - n) from the indicator
// seed.  The bank must pass verify_qmf at the user tolerance.  Throws
// std::runtime_error if the sup-norm residual between successive depths
// grows (non-convergent cascade).
SampledFunction scaling_function(const FilterBank& fb,
                                 int depth = default_cascade_depth);

// Mother wavelet psi(x) = sqrt(2) sum_n (-1)^n h_{1-n} phi(2x - n) on the
// same dyadic resolution, support [(n_min+1-n_max)/2, (n_max+1-n_min)/2].
SampledFunction mother_wavelet(const FilterBank& fb,
                               int depth = default_cascade_depth);

}  // namespace wavelet_landau
