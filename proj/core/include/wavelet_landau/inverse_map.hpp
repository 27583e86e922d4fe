#pragma once

#include <vector>

#include "wavelet_landau/constants.hpp"
#include "wavelet_landau/filter_bank.hpp"
#include "wavelet_landau/zak.hpp"

namespace wavelet_landau {

// Fourier coefficients of a cell function q -> h(k,q) at fixed k:
//   h_n(k) = int_0^a e^{i n a q} h(k,q) dq,
// so that h(k,q) = (1/a) sum_n h_n(k) e^{-i n a q}.  Since a^2 = 2*pi the
// q-rectangle rule is exact for trigonometric cell functions of degree
// below the q-grid size.
struct ExtractedFilter {
  double k = 0.0;
  int n_min = 0;
  std::vector<cd> coeffs;
  int n_max() const { return n_min + static_cast<int>(coeffs.size()) - 1; }
  cd h(int n) const {
    const int i = n - n_min;
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return cd{0.0, 0.0};
    return coeffs[static_cast<std::size_t>(i)];
  }
};

// Single coefficient.  Uses the extended evaluator when present, otherwise
// requires k to lie on the k-grid.
cd extract_hn(const KqFunction& h, int n, double k);

// All coefficients at fixed k.  n_window < 0 selects the window
// automatically: scan |n| <= extract_max_window, keep indices with
// |h_n| > extract_tail_tol plus an 8-coefficient margin, and reject fields
// whose coefficients have not decayed by the scan edge.
inline constexpr int extract_max_window = 64;
inline constexpr double extract_tail_tol = 1e-14;
ExtractedFilter extract_filter(const KqFunction& h, double k,
                               int n_window = -1);

struct MraConditionReport {
  int l_range = 0;
  std::vector<double> residuals;  // | sum_n h_n conj(h_{n+2l}) - delta_{l,0} |
  double max_residual = 0.0;
  bool pass = false;
};

// Double-shift orthogonality of the extracted coefficients:
//   sum_n h_n(k) conj(h_{n+2l}(k)) = delta_{l,0}.
MraConditionReport verify_mra_condition(const ExtractedFilter& ef,
                                        double tol = 1e-10);

struct RoundtripReport {
  std::vector<double> k_values;
  std::vector<double> dev_at_k;  // max_n |h_n(k) - h_n| over the window
  double max_dev = 0.0;
};

// Filter bank -> T_{2L} -> Zak field -> extracted coefficients, compared
// against the original taps over [n_min - 4, n_max + 4] at several k.
// For L = 1 the extraction returns the taps with unit constant.
RoundtripReport roundtrip(const FilterBank& fb, int n_k = default_kq_grid,
                          int n_q = default_kq_grid);

}  // namespace wavelet_landau
