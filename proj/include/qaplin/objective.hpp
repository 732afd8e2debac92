#pragma once

#include <vector>

#include "qaplin/matrix.hpp"
#include "qaplin/permutation.hpp"

namespace qaplin {
namespace detail {

// Unchecked evaluation on a raw image vector; hot path of the enumerators.
inline double qap_value_raw(const SquareMatrix& a, const SquareMatrix& b,
                            const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) total += a(p[i], p[j]) * b(i, j);
  return total;
}

inline double lap_value_raw(const SquareMatrix& c, const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += c(i, p[i]);
  return total;
}

}  // namespace detail

/// Quadratic assignment objective: sum over i,j of A[p(i)][p(j)] * B[i][j].
inline double qap_value(const SquareMatrix& a, const SquareMatrix& b, const Permutation& p) {
  if (a.order() != b.order() || a.order() != p.order())
    throw DimensionError("qap_value: operand orders differ");
  return detail::qap_value_raw(a, b, p.images());
}

/// Linear assignment objective: sum over i of C[i][p(i)].
inline double lap_value(const SquareMatrix& c, const Permutation& p) {
  if (c.order() != p.order()) throw DimensionError("lap_value: operand orders differ");
  return detail::lap_value_raw(c, p.images());
}

}  // namespace qaplin
