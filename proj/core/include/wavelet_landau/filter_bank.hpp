#pragma once

#include <string>
#include <vector>

#include "wavelet_landau/constants.hpp"

namespace wavelet_landau {

// Finite filter bank {h_n}, n = n_min .. n_min + coeffs.size() - 1.
// A valid bank satisfies the quadrature-mirror identities
//   sum_n |h_n|^2 = 1,
//   sum_n h_n conj(h_{n+2k}) = delta_{k,0}.
struct FilterBank {
  std::string name;
  int n_min = 0;
  std::vector<cd> coeffs;

  int n_max() const { return n_min + static_cast<int>(coeffs.size()) - 1; }

  // h_n, zero outside the stored range.
  cd h(int n) const {
    const int j = n - n_min;
    if (j < 0 || j >= static_cast<int>(coeffs.size())) return cd{0.0, 0.0};
    return coeffs[static_cast<std::size_t>(j)];
  }
};

inline constexpr double builtin_qmf_tol = 1e-12;
inline constexpr double user_qmf_tol = 1e-10;

// Builtin banks: "haar" (two equal taps), "d4", "d6" (the 4- and 6-tap
// orthonormal banks with maximal vanishing moments, in closed form).
// Throws std::invalid_argument for unknown names.
FilterBank make_filter(const std::string& builtin);

// Explicit coefficient list starting at index n_min.
// Throws std::invalid_argument for an empty list.
FilterBank make_filter(int n_min, std::vector<cd> coeffs,
                       std::string name = "custom");

// m_o(omega) = (1/sqrt(2)) sum_n h_n e^{-in omega}; 2*pi-periodic.
cd m_o(const FilterBank& fb, double omega);

struct QmfReport {
  double res_normalization = 0.0;      // |sum |h|^2 - 1|
  double res_shift = 0.0;              // max_{k!=0} |sum h_n conj(h_{n+2k})|
  double res_modulation = 0.0;         // max |  |m_o(w)|^2 + |m_o(w+pi)|^2 - 1 |
  double res_double_sum = 0.0;         // max | (1/2) sum_{n,l} h_n conj(h_l)
                                       //        e^{i(l-n)w} (1 + (-1)^{l+n}) - 1 |
  int grid_points = 0;
  double tol = 0.0;
  bool pass = false;

  double max_residual() const;
};

// Checks all four identity forms; the modulation and double-sum forms are
// sampled on grid_points frequencies in [0, 2*pi).
QmfReport verify_qmf(const FilterBank& fb, double tol = builtin_qmf_tol,
                     int grid_points = 256);

}  // namespace wavelet_landau
