#include "wavelet_landau/line_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "wavelet_landau/quadrature.hpp"

namespace wavelet_landau {

LineFunction LineFunction::compact(std::function<cd(double)> f, double lo,
                                   double hi) {
  if (!(lo < hi))
    throw std::invalid_argument("LineFunction::compact: empty support");
  LineFunction out;
  out.kind_ = Kind::compact;
  out.f_ = std::move(f);
  out.support_lo_ = lo;
  out.support_hi_ = hi;
  return out;
}

LineFunction LineFunction::gaussian_decay(std::function<cd(double)> f,
                                          double amp, double center,
                                          double sigma) {
  if (!(sigma > 0.0) || !(amp > 0.0))
    throw std::invalid_argument("LineFunction::gaussian_decay: bad envelope");
  LineFunction out;
  out.kind_ = Kind::gaussian;
  out.f_ = std::move(f);
  out.env_amp_ = amp;
  out.env_center_ = center;
  out.env_sigma_ = sigma;
  return out;
}

cd LineFunction::operator()(double x) const {
  if (!f_) throw std::logic_error("LineFunction: empty");
  if (kind_ == Kind::compact && (x < support_lo_ || x >= support_hi_))
    return cd{0.0, 0.0};
  return f_(x);
}

double LineFunction::tail_bound(double r) const {
  if (kind_ == Kind::compact) return 0.0;
  const double u = r / env_sigma_;
  return env_amp_ * std::exp(-0.5 * u * u);
}

LineFunction gaussian_line() {
  const double amp = std::pow(pi, -0.25);
  return LineFunction::gaussian_decay(
      [amp](double p) { return cd{amp * std::exp(-0.5 * p * p), 0.0}; }, amp,
      0.0, 1.0);
}

LineFunction sampled_line(const SampledFunction& samples) {
  if (samples.samples.size() < 2)
    throw std::invalid_argument("sampled_line: need at least two samples");
  auto data = std::make_shared<SampledFunction>(samples);
  const double lo = data->origin;
  const double hi = data->x_at(data->samples.size() - 1);
  return LineFunction::compact(
      [data](double x) {
        const double t = (x - data->origin) / data->step;
        const long j = static_cast<long>(std::floor(t));
        if (j < 0 || j + 1 >= static_cast<long>(data->samples.size()))
          return cd{0.0, 0.0};
        const double frac = t - static_cast<double>(j);
        return (1.0 - frac) * data->samples[static_cast<std::size_t>(j)] +
               frac * data->samples[static_cast<std::size_t>(j) + 1];
      },
      lo, hi);
}

double line_norm_squared(const LineFunction& f) {
  if (f.kind() == LineFunction::Kind::compact) {
    const cd v = integrate_panels(
        [&f](double x) { return cd{std::norm(f(x)), 0.0}; }, f.support_lo(),
        f.support_hi(), 24);
    return v.real();
  }
  // |f|^2 envelope has sigma/sqrt(2)
  const cd v = integrate_gaussian(
      [&f](double x) { return cd{std::norm(f(x)), 0.0}; }, f.env_center(),
      f.env_sigma() / std::sqrt(2.0));
  return v.real();
}

}  // namespace wavelet_landau
