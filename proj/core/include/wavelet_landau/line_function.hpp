#pragma once

#include <functional>
#include <memory>

#include "wavelet_landau/constants.hpp"
#include "wavelet_landau/sampled_function.hpp"

namespace wavelet_landau {

// A function on the real line together with the decay information the
// quadrature and Zak-truncation routines need.  Two kinds:
//   compact  — supported in [support_lo, support_hi], zero outside;
//   gaussian — |f(x)| <= env_amp * exp(-(x-env_center)^2 / (2 env_sigma^2)).
class LineFunction {
 public:
  enum class Kind { compact, gaussian };

  LineFunction() = default;

  static LineFunction compact(std::function<cd(double)> f, double lo, double hi);
  static LineFunction gaussian_decay(std::function<cd(double)> f, double amp,
                                     double center, double sigma);

  cd operator()(double x) const;

  Kind kind() const { return kind_; }
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }
  double env_amp() const { return env_amp_; }
  double env_center() const { return env_center_; }
  double env_sigma() const { return env_sigma_; }

  // Bound on |f(x)| at distance r from the envelope center (gaussian kind);
  // zero beyond the support for the compact kind.
  double tail_bound(double r) const;

 private:
  Kind kind_ = Kind::compact;
  std::function<cd(double)> f_;
  double support_lo_ = 0.0, support_hi_ = 0.0;        // compact
  double env_amp_ = 0.0, env_center_ = 0.0, env_sigma_ = 1.0;  // gaussian
};

// The normalized Gaussian reduced function h(P) = pi^{-1/4} e^{-P^2/2}.
LineFunction gaussian_line();

// Wrap dyadic-grid samples as a compact LineFunction (linear interpolation).
LineFunction sampled_line(const SampledFunction& samples);

// ||f||^2 by the quadrature scheme matching the decay kind.
double line_norm_squared(const LineFunction& f);

}  // namespace wavelet_landau
