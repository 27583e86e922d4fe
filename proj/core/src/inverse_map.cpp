#include "wavelet_landau/inverse_map.hpp"

#include <cmath>
#include <stdexcept>

#include "wavelet_landau/landau.hpp"

namespace wavelet_landau {

namespace {

// One row q -> h(k,q) over the q-grid at fixed k.
std::vector<cd> q_row(const KqFunction& h, double k) {
  std::vector<cd> row(static_cast<std::size_t>(h.n_q));
  if (h.has_evaluator()) {
    for (int iq = 0; iq < h.n_q; ++iq) row[iq] = h.eval(k, h.q_at(iq));
    return row;
  }
  const double pos = k / (h.a / h.n_k);
  const int ik = static_cast<int>(std::lround(pos));
  if (std::abs(pos - ik) > 1e-9 || ik < 0 || ik >= h.n_k)
    throw std::invalid_argument(
        "extract: k is off the grid and the field has no evaluator");
  for (int iq = 0; iq < h.n_q; ++iq) row[iq] = h.at(ik, iq);
  return row;
}

cd coeff_from_row(const KqFunction& h, const std::vector<cd>& row, int n) {
  const double dq = h.a / h.n_q;
  cd s{0.0, 0.0};
  for (int iq = 0; iq < h.n_q; ++iq)
    s += std::exp(iu * (n * cell_a * h.q_at(iq))) * row[iq];
  return s * dq;
}

}  // namespace

cd extract_hn(const KqFunction& h, int n, double k) {
  return coeff_from_row(h, q_row(h, k), n);
}

ExtractedFilter extract_filter(const KqFunction& h, double k, int n_window) {
  const std::vector<cd> row = q_row(h, k);
  ExtractedFilter ef;
  ef.k = k;

  if (n_window >= 0) {
    ef.n_min = -n_window;
    ef.coeffs.reserve(2 * n_window + 1);
    for (int n = -n_window; n <= n_window; ++n)
      ef.coeffs.push_back(coeff_from_row(h, row, n));
    return ef;
  }

  // The q-rectangle rule aliases indices modulo n_q; keep the scan inside
  // the Nyquist window of the grid.
  const int W = std::min(extract_max_window, h.n_q / 2 - 1);
  std::vector<cd> scan(2 * W + 1);
  for (int n = -W; n <= W; ++n) scan[n + W] = coeff_from_row(h, row, n);

  int lo = W + 1, hi = -W - 1;
  for (int n = -W; n <= W; ++n) {
    if (std::abs(scan[n + W]) > extract_tail_tol) {
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
  }
  if (lo > hi)
    throw std::invalid_argument(
        "extract_filter: all coefficients below tolerance");
  if (lo <= -W + 3 || hi >= W - 3)
    throw std::runtime_error(
        "extract_filter: coefficient tail has not decayed within the scan "
        "window");

  ef.n_min = std::max(lo - 8, -W);
  const int n_hi = std::min(hi + 8, W);
  ef.coeffs.assign(scan.begin() + (ef.n_min + W),
                   scan.begin() + (n_hi + W) + 1);
  return ef;
}

MraConditionReport verify_mra_condition(const ExtractedFilter& ef,
                                        double tol) {
  MraConditionReport rep;
  const int count = static_cast<int>(ef.coeffs.size());
  rep.l_range = count / 2;
  rep.residuals.reserve(rep.l_range + 1);
  for (int l = 0; l <= rep.l_range; ++l) {
    cd s{0.0, 0.0};
    for (int n = ef.n_min; n <= ef.n_max(); ++n)
      s += ef.h(n) * std::conj(ef.h(n + 2 * l));
    const double target = (l == 0) ? 1.0 : 0.0;
    rep.residuals.push_back(std::abs(s - target));
  }
  for (double r : rep.residuals) rep.max_residual = std::max(rep.max_residual, r);
  rep.pass = rep.max_residual <= tol;
  return rep;
}

RoundtripReport roundtrip(const FilterBank& fb, int n_k, int n_q) {
  const KqFunction field = t_kq_field(fb, 1, n_k, n_q);
  RoundtripReport rep;
  for (int j = 0; j < 8; ++j) {
    const double k = j * cell_a / 8.0;
    const std::vector<cd> row = q_row(field, k);
    double dev = 0.0;
    for (int n = fb.n_min - 4; n <= fb.n_max() + 4; ++n) {
      const cd extracted = coeff_from_row(field, row, n);
      dev = std::max(dev, std::abs(extracted - fb.h(n)));
    }
    rep.k_values.push_back(k);
    rep.dev_at_k.push_back(dev);
    rep.max_dev = std::max(rep.max_dev, dev);
  }
  return rep;
}

}  // namespace wavelet_landau
