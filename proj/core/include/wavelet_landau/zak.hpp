#pragma once

#include <functional>
#include <vector>

#include "wavelet_landau/constants.hpp"
#include "wavelet_landau/line_function.hpp"

namespace wavelet_landau {

inline constexpr int default_kq_grid = 64;

// Function on the unit cell [0,a) x [0,a), a = sqrt(2*pi), sampled on an
// n_k x n_q uniform grid, optionally with a closed-form evaluator valid on
// the extended (k,q) plane.  Quasi-periodicity of a kq function:
//   h(k+a, q) = h(k, q),   h(k, q+a) = e^{ika} h(k, q).
struct KqFunction {
  double a = cell_a;
  int n_k = 0, n_q = 0;
  std::vector<cd> values;  // index ik * n_q + iq
  std::function<cd(double, double)> evaluator;

  double k_at(int ik) const { return a * ik / n_k; }
  double q_at(int iq) const { return a * iq / n_q; }
  cd at(int ik, int iq) const {
    return values[static_cast<std::size_t>(ik) * n_q + iq];
  }
  bool has_evaluator() const { return static_cast<bool>(evaluator); }
  // Extended-plane evaluation; throws std::runtime_error without evaluator.
  cd eval(double k, double q) const;
};

// Zak transform h(k,q) = (1/sqrt(a)) sum_{|n| <= n_max} e^{-ikna} H(q + na).
// n_max < 0 selects the truncation automatically from the declared decay
// (exact term count for compact support, safety factor 2 for gaussian decay);
// an explicit n_max is validated against tail_tol and rejected if the tail
// bound exceeds it.  The returned evaluator computes the same truncated sum
// anywhere on the extended plane.
KqFunction zak_transform(const LineFunction& H, int n_k = default_kq_grid,
                         int n_q = default_kq_grid, int n_max = -1,
                         double tail_tol = 1e-12);

// H(x + na) = (1/sqrt(a)) int_0^a dk e^{ikna} h(k,x), by the rectangle rule
// over the periodic k grid.  x must lie in [0,a); without an evaluator it
// must coincide with a q-grid line.
cd inverse_zak(const KqFunction& h, int n, double x);

struct BoundaryReport {
  double res_k_period = 0.0;  // max |h(k+a,q) - h(k,q)|
  double res_q_quasi = 0.0;   // max |h(k,q+a) - e^{ika} h(k,q)|
  double tol = 0.0;
  bool pass = false;
};

// Verifies the quasi-periodicity on the grid; requires an evaluator.
BoundaryReport check_boundary(const KqFunction& h, double tol);

// Grid fill from an arbitrary extended-plane evaluator (kept on the result).
KqFunction make_kq_from_evaluator(std::function<cd(double, double)> eval,
                                  int n_k = default_kq_grid,
                                  int n_q = default_kq_grid);

// Cell quadrature of |h|^2 (rectangle rule, spectrally accurate for the
// periodic directions).
double cell_norm_squared(const KqFunction& h);

}  // namespace wavelet_landau
