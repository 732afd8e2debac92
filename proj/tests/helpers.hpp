#pragma once

// Shared fixtures and independent test-side oracles. Everything here stays
// deliberately separate from the implementation paths it cross-checks.

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "qaplin/qaplin.hpp"

namespace testutil {

using qaplin::IndexSubset;
using qaplin::Permutation;
using qaplin::SquareMatrix;

// 4x4 directed cut matrix with source set {1,2}; the running example
// instance of the whole suite.
inline SquareMatrix cut12_matrix() {
  return SquareMatrix::from_rows({{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
}

// Upper-triangular all-ones matrix; asymmetric and not a weak sum.
inline SquareMatrix upper_ones4() {
  return SquareMatrix::from_rows({{0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}});
}

// Integer cost matrix whose first two ROWS carry the j-i pattern. Satisfies
// lap_value(C, p) = qap_value(cut12, F_4, p^-1); its transpose satisfies
// the direct identity.
inline SquareMatrix row_form_cut_costs() {
  return SquareMatrix::from_rows({{0, 1, 2, 3}, {-1, 0, 1, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}});
}

inline Permutation perm1(std::vector<int> one_based) {
  return Permutation::from_one_based(std::move(one_based));
}

// Exhaustive LAP minimum, independent of solve_lap.
inline double brute_force_lap_value(const SquareMatrix& c) {
  double best = std::numeric_limits<double>::infinity();
  qaplin::for_each_permutation(c.order(), [&](const std::vector<int>& p) {
    best = std::min(best, qaplin::detail::lap_value_raw(c, p));
    return true;
  });
  return best;
}

// Largest 3-cycle balance violation, scanned directly from the definition.
inline double max_balance_residual(const SquareMatrix& a) {
  const int n = a.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double lhs = a(i, j) + a(j, k) + a(k, i);
        const double rhs = a(j, i) + a(k, j) + a(i, k);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

// Completeness oracle for the weak-sum recognizer: least-squares fit of the
// off-diagonal system a(i,j) = alpha_i + beta_j over 2n unknowns; returns
// the maximum residual of the best fit.
inline double weak_sum_fit_residual(const SquareMatrix& a) {
  const int n = a.order();
  const int rows = n * n - n;
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(rows, 2 * n);
  Eigen::VectorXd rhs(rows);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      system(row, i) = 1.0;
      system(row, n + j) = 1.0;
      rhs(row) = a(i, j);
      ++row;
    }
  const Eigen::VectorXd x = system.completeOrthogonalDecomposition().solve(rhs);
  return (system * x - rhs).cwiseAbs().maxCoeff();
}

inline SquareMatrix random_matrix(int n, qaplin::SplitMix64& gen, double lo = -10.0,
                                  double hi = 10.0) {
  SquareMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = gen.next_real(lo, hi);
  return a;
}

inline SquareMatrix generated(qaplin::GeneratorKind kind, int n, std::uint64_t seed,
                              double lo = -10.0, double hi = 10.0,
                              std::optional<double> perturbation = std::nullopt) {
  qaplin::GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  spec.lo = lo;
  spec.hi = hi;
  spec.perturbation = perturbation;
  return qaplin::generate(spec).matrices.at(0);
}

}  // namespace testutil
