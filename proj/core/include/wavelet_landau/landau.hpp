#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "wavelet_landau/constants.hpp"
#include "wavelet_landau/filter_bank.hpp"
#include "wavelet_landau/line_function.hpp"
#include "wavelet_landau/quadrature.hpp"
#include "wavelet_landau/zak.hpp"

namespace wavelet_landau {

// Square lattice with unit-cell area 2*pi at filling 1/(2L); orthonormality
// is demanded on the (1, M) sublattice, M = 2L.
struct LatticeSpec {
  double a = cell_a;
  int L = 1;
  int M() const { return 2 * L; }
};

// A lowest- (level 0) or first- (level 1) Landau-level orbital, parametrized
// by the reduced function hP, translated to lattice site (m, n).
struct LandauOrbital {
  int level = 0;
  LineFunction hP;
  int m = 0, n = 0;
};

// T_{2L}(w) = (1/sqrt(a)) sum_l h_l e^{-i l w L a} on [0,a), zero elsewhere.
// ||T_{2L}|| = 1 for any verified bank.  Throws std::invalid_argument when
// the bank fails QMF verification.
LineFunction build_T(const FilterBank& fb, int L);

// t_{2L}(k,q) = (1/sqrt(a)) T_{2L}(q) on the cell; k-independent.
cd t_kq(const FilterBank& fb, int L, double k, double q);

// The same field as a KqFunction (grid + extended evaluator), via the Zak
// transform of build_T.
KqFunction t_kq_field(const FilterBank& fb, int L, int n_k = default_kq_grid,
                      int n_q = default_kq_grid);

struct JReport {
  int M = 0;
  int n_k = 0, n_q = 0;
  std::vector<double> values;  // J_M(k,q), index ik * n_q + iq
  double target = 0.0;         // M / (2*pi)
  double max_dev = 0.0;
};

// J_M(k,q) = sum_{j=0}^{M-1} |h(k, (q+ja)/M)|^2; constancy at M/(2*pi) is
// equivalent to sublattice orthonormality.  Needs the extended evaluator.
JReport J_criterion(const KqFunction& h, int M);

// Orbital value at (x,y): the level kernel at the translated point with the
// magnetic-translation phase (-1)^{mn} e^{i(a/2)(m y - n x)}.
//   level 0: e^{ixy/2}/(sqrt(2) pi^{3/4}) int e^{iyP} e^{-(x+P)^2/2} hP(P) dP
//   level 1: i e^{-ixy/2}/pi^{3/4} int e^{iyP} e^{-P^2/2} P hP(P-x) dP
cd synth(const LandauOrbital& orb, double x, double y);

using OrbitalEvaluator = std::function<cd(double, double)>;

// Magnetic translation acting on an evaluator:
//   (T f)(x,y) = (-1)^{mn} e^{i(a/2)(m y - n x)} f(x + m a, y + n a).
OrbitalEvaluator magnetic_translate(OrbitalEvaluator f, int m, int n);
OrbitalEvaluator magnetic_translate(const LandauOrbital& orb, int m, int n);

// S_{m,n} = int e^{inap} conj(hP(p + m a)) hP(p) dp.  Disjoint compact
// supports return an exact zero without quadrature.
cd overlap_S(const LineFunction& hP, int m, int n);

// S_{m,n} = int_cell dk dq e^{i n a q - i k m a} |h(k,q)|^2 (rectangle rule
// on the grid values).
cd overlap_S_kq(const KqFunction& h, int m, int n);

struct OverlapReport {
  int M = 1;                                     // sublattice stride in n
  std::map<std::pair<int, int>, cd> entries;     // (m,n) -> S_{m, M n}
  double max_dev = 0.0;                          // max |S - delta delta|
};

// Sublattice overlap table S_{m, M n} for |m|, |n| <= range.
OverlapReport sublattice_overlaps(const LineFunction& hP, int L, int range = 3);
OverlapReport sublattice_overlaps_kq(const KqFunction& h, int L, int range = 3);

struct GramResult {
  int size = 0;
  std::vector<cd> matrix;  // row-major Gram G_ij = S_{m_i - m_j, n_i - n_j}
  cd det{0.0, 0.0};
  double abs_det = 0.0;
};

// Gram matrix and Slater-normalization determinant for lattice sites
// (m_i, n_i) with n_i on the stride-M sublattice.  Throws on duplicate or
// off-sublattice sites.
GramResult gram_slater(const LineFunction& hP, int M,
                       const std::vector<std::pair<int, int>>& sites);

struct EquivalenceEntry {
  int m = 0, n = 0;
  cd level0{0.0, 0.0};
  cd level1{0.0, 0.0};
};

struct EquivalenceReport {
  std::vector<EquivalenceEntry> entries;
  double max_dev = 0.0;
};

// First-Landau-level overlaps against lowest-level overlaps.  The level-1
// value reduces (y-integral delta, then x -> u = P - x) to
//   S^1_{m,n} = (2/sqrt(pi)) int dP du e^{inau} P^2 e^{-P^2}
//               conj(hP(u)) hP(u - m a),
// evaluated by Gauss-Hermite x (support-adapted) quadrature.
EquivalenceReport ill_overlap_equivalence(
    const LineFunction& hP, const std::vector<std::pair<int, int>>& pairs);

// Independent cross-check of one level-1 overlap by a full 2D (x,y)
// quadrature of conj((T_{m,n} psi^1)) psi^1 with psi^1 from synth.  Only
// available for gaussian-decay hP (compact hP gives 1/y integrand decay).
cd overlap_level1_xy(const LineFunction& hP, int m, int n, int order_xy = 64,
                     int order_p = default_hermite_order);

}  // namespace wavelet_landau
