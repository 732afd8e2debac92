#pragma once

#include <Eigen/Dense>
#include <optional>

#include "qaplin/matrix.hpp"
#include "qaplin/objective.hpp"
#include "qaplin/permutation.hpp"

namespace qaplin {

struct OracleVerdict {
  bool linearizable;
  double residual;              // max equation residual of the least-squares fit
  std::optional<SquareMatrix> c;  // fitted cost matrix, present iff linearizable
};

/// Independent linearizability decision by brute force over the defining
/// equations: one equation sum_i x(i, p(i)) = qap_value(A,B,p) per
/// permutation, n^2 unknowns, solved in the least-squares sense. The
/// instance is linearizable exactly when the system is consistent, i.e. the
/// maximum residual vanishes (up to tol * max(1, largest |rhs|)); the
/// fitted matrix itself is not unique and only the residual decides.
/// Guarded at n <= 7 (5040 x 49 system).
inline OracleVerdict linearizability_oracle(const SquareMatrix& a, const SquareMatrix& b,
                                            double tol = default_tolerance) {
  if (a.order() != b.order())
    throw DimensionError("linearizability_oracle: operand orders differ");
  const int n = a.order();
  if (n > 7) throw TooLarge("linearizability_oracle: requires n <= 7");

  const auto rows = static_cast<Eigen::Index>(factorial(n));
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(n) * n);
  Eigen::VectorXd rhs(rows);
  Eigen::Index row = 0;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    for (int i = 0; i < n; ++i) system(row, static_cast<Eigen::Index>(i) * n + p[i]) = 1.0;
    rhs(row) = detail::qap_value_raw(a, b, p);
    ++row;
    return true;
  });

  // Rank-revealing solver: the system is always rank-deficient (adding a
  // constant to a row of C and subtracting it from a column preserves every
  // LAP objective), and only the residual decides the verdict.
  const Eigen::VectorXd x = system.completeOrthogonalDecomposition().solve(rhs);
  const double residual = (system * x - rhs).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  if (residual > tol * scale) return {false, residual, std::nullopt};

  SquareMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = x(static_cast<Eigen::Index>(i) * n + j);
  return {true, residual, std::move(c)};
}

}  // namespace qaplin
