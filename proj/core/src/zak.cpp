#include "wavelet_landau/zak.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "wavelet_landau/parallel.hpp"

namespace wavelet_landau {

cd KqFunction::eval(double k, double q) const {
  if (!evaluator)
    throw std::runtime_error(
        "KqFunction: no extended evaluation available (grid-only field)");
  return evaluator(k, q);
}

namespace {

// Term range covering H(q + na) for q in [0, a), padded so the evaluator
// stays exact on the neighbouring cells probed by check_boundary.
void term_range(const LineFunction& H, int n_max, double tail_tol, int& n_lo,
                int& n_hi) {
  const double a = cell_a;
  if (H.kind() == LineFunction::Kind::compact) {
    n_lo = static_cast<int>(std::floor(H.support_lo() / a)) - 2;
    n_hi = static_cast<int>(std::ceil(H.support_hi() / a)) + 2;
    if (n_max >= 0) {
      // requested symmetric window must cover the support
      if (-n_max > n_lo + 2 || n_max < n_hi - 2)
        throw std::runtime_error(
            "zak_transform: n_max truncates a compactly supported term");
      n_lo = -n_max - 2;
      n_hi = n_max + 2;
    }
    return;
  }
  // gaussian decay: find the first n with bound below tail_tol at the worst
  // in-cell q, then apply the safety factor of 2
  int need = 1;
  while (need < 1000) {
    const double r = (need - 1) * a - std::abs(H.env_center());
    if (r > 0.0 && H.tail_bound(r) < tail_tol) break;
    ++need;
  }
  if (n_max >= 0) {
    if (n_max < need)
      throw std::runtime_error(
          "zak_transform: truncation bound violated (tail estimate " +
          std::to_string(H.tail_bound((n_max - 1) * a -
                                      std::abs(H.env_center()))) +
          " exceeds tolerance)");
    n_lo = -n_max - 2;
    n_hi = n_max + 2;
    return;
  }
  n_lo = -2 * need - 2;
  n_hi = 2 * need + 2;
}

}  // namespace

KqFunction zak_transform(const LineFunction& H, int n_k, int n_q, int n_max,
                         double tail_tol) {
  if (n_k < 8 || n_q < 8)
    throw std::invalid_argument("zak_transform: grid sizes must be >= 8");
  int n_lo = 0, n_hi = 0;
  term_range(H, n_max, tail_tol, n_lo, n_hi);

  const double a = cell_a;
  auto Hp = std::make_shared<LineFunction>(H);
  auto eval = [Hp, n_lo, n_hi, a](double k, double q) {
    cd sum{0.0, 0.0};
    for (int n = n_lo; n <= n_hi; ++n) {
      const cd term = (*Hp)(q + n * a);
      if (term != cd{0.0, 0.0})
        sum += std::exp(-iu * (k * n * a)) * term;
    }
    return sum / std::sqrt(a);
  };

  KqFunction out;
  out.a = a;
  out.n_k = n_k;
  out.n_q = n_q;
  out.values.resize(static_cast<std::size_t>(n_k) * n_q);
  parallel_for(n_k, [&](int ik) {
    const double k = out.k_at(ik);
    for (int iq = 0; iq < n_q; ++iq)
      out.values[static_cast<std::size_t>(ik) * n_q + iq] =
          eval(k, out.q_at(iq));
  });
  out.evaluator = std::move(eval);
  return out;
}

cd inverse_zak(const KqFunction& h, int n, double x) {
  if (x < 0.0 || x >= h.a)
    throw std::invalid_argument("inverse_zak: x must lie in [0, a)");
  const double a = h.a;
  cd sum{0.0, 0.0};
  if (h.has_evaluator()) {
    for (int ik = 0; ik < h.n_k; ++ik) {
      const double k = h.k_at(ik);
      sum += std::exp(iu * (k * n * a)) * h.eval(k, x);
    }
  } else {
    const double pos = x / a * h.n_q;
    const int iq = static_cast<int>(std::lround(pos));
    if (iq < 0 || iq >= h.n_q || std::abs(pos - iq) > 1e-9)
      throw std::invalid_argument(
          "inverse_zak: x off the q grid and no evaluator available");
    for (int ik = 0; ik < h.n_k; ++ik) {
      const double k = h.k_at(ik);
      sum += std::exp(iu * (k * n * a)) * h.at(ik, iq);
    }
  }
  return sum * (a / h.n_k) / std::sqrt(a);
}

BoundaryReport check_boundary(const KqFunction& h, double tol) {
  if (!h.has_evaluator())
    throw std::runtime_error(
        "check_boundary: no extended evaluation available");
  BoundaryReport report;
  report.tol = tol;
  const double a = h.a;
  for (int ik = 0; ik < h.n_k; ++ik) {
    const double k = h.k_at(ik);
    const cd phase = std::exp(iu * (k * a));
    for (int iq = 0; iq < h.n_q; ++iq) {
      const double q = h.q_at(iq);
      const cd base = h.eval(k, q);
      report.res_k_period =
          std::max(report.res_k_period, std::abs(h.eval(k + a, q) - base));
      report.res_q_quasi =
          std::max(report.res_q_quasi, std::abs(h.eval(k, q + a) - phase * base));
    }
  }
  report.pass = report.res_k_period <= tol && report.res_q_quasi <= tol;
  return report;
}

KqFunction make_kq_from_evaluator(std::function<cd(double, double)> eval,
                                  int n_k, int n_q) {
  if (n_k < 8 || n_q < 8)
    throw std::invalid_argument("make_kq_from_evaluator: grid sizes must be >= 8");
  KqFunction out;
  out.n_k = n_k;
  out.n_q = n_q;
  out.values.resize(static_cast<std::size_t>(n_k) * n_q);
  for (int ik = 0; ik < n_k; ++ik)
    for (int iq = 0; iq < n_q; ++iq)
      out.values[static_cast<std::size_t>(ik) * n_q + iq] =
          eval(out.k_at(ik), out.q_at(iq));
  out.evaluator = std::move(eval);
  return out;
}

double cell_norm_squared(const KqFunction& h) {
  double sum = 0.0;
  for (const cd& v : h.values) sum += std::norm(v);
  return sum * (h.a / h.n_k) * (h.a / h.n_q);
}

}  // namespace wavelet_landau
