#pragma once

#include <vector>

#include "qaplin/matrix.hpp"

namespace qaplin {

/// Backward-arc matrix of a linear layout: entry (i,j) = 1 iff j < i.
inline SquareMatrix feedback_matrix(int n) {
  SquareMatrix f(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) f(i, j) = 1.0;
  return f;
}

/// Adjacency matrix of the directed cycle 1 -> 2 -> ... -> n -> 1.
/// Every row and column sums to exactly 1. Requires n >= 2.
inline SquareMatrix hamiltonian_matrix(int n) {
  if (n < 2) throw DegenerateInstance("hamiltonian_matrix: needs at least two vertices");
  SquareMatrix h(n);
  for (int i = 0; i + 1 < n; ++i) h(i, i + 1) = 1.0;
  h(n - 1, 0) = 1.0;
  return h;
}

/// Directed cut matrix: entry (i,j) = 1 iff i is in the subset and j is not.
inline SquareMatrix cut_matrix(const IndexSubset& subset) {
  const int n = subset.ambient();
  SquareMatrix a(n);
  for (int i : subset.members())
    for (int j = 0; j < n; ++j)
      if (!subset.contains(j)) a(i, j) = 1.0;
  return a;
}

/// Entry (i,j) = alpha[i] + beta[j], diagonal included.
inline SquareMatrix sum_matrix(const std::vector<double>& alpha, const std::vector<double>& beta) {
  if (alpha.size() != beta.size() || alpha.empty())
    throw DimensionError("sum_matrix: alpha and beta must have equal nonzero length");
  const int n = static_cast<int>(alpha.size());
  SquareMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = alpha[i] + beta[j];
  return a;
}

/// Rows and columns restricted to the subset, kept in increasing index
/// order. Requires a nonempty subset.
inline SquareMatrix principal_submatrix(const SquareMatrix& a, const IndexSubset& subset) {
  if (subset.empty()) throw DegenerateInstance("principal_submatrix: empty index subset");
  if (subset.ambient() != a.order())
    throw DimensionError("principal_submatrix: subset ambient size differs from matrix order");
  const auto& m = subset.members();
  const int k = subset.size();
  SquareMatrix s(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s(i, j) = a(m[i], m[j]);
  return s;
}

}  // namespace qaplin
