#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "qaplin/matrix.hpp"

namespace qaplin {

/// Violating index triple with the two sides of the 3-cycle balance
/// equation: lhs = a(i,j)+a(j,k)+a(k,i), rhs = a(j,i)+a(k,j)+a(i,k).
struct BalanceWitness {
  int i, j, k;
  double lhs, rhs;
};

struct BalanceCheck {
  bool balanced;
  std::optional<BalanceWitness> witness;  // present iff !balanced
};

/// A matrix is a balanced 3-cycle matrix when every triple of distinct
/// indices carries equal clockwise and counter-clockwise weight. Triples
/// with repeated indices hold trivially and cyclic relabelings are
/// equivalent, so scanning i < j < k suffices; runs in Theta(n^3). The
/// witness, if any, is the lexicographically first violating triple.
inline BalanceCheck check_balanced_3cycle(const SquareMatrix& a,
                                          double tol = default_tolerance) {
  const int n = a.order();
  const double bound = tol * tolerance_scale(a);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double lhs = a(i, j) + a(j, k) + a(k, i);
        const double rhs = a(j, i) + a(k, j) + a(i, k);
        if (std::abs(lhs - rhs) > bound)
          return {false, BalanceWitness{i, j, k, lhs, rhs}};
      }
  return {true, std::nullopt};
}

/// Parameter vectors realizing every off-diagonal entry as alpha[i]+beta[j].
struct WeakSumCertificate {
  std::vector<double> alpha, beta;
};

/// First off-diagonal entry (row-major) not matched by the candidate
/// certificate, with its residual a(i,j) - alpha[i] - beta[j].
struct WeakSumWitness {
  int i, j;
  double residual;
};

struct WeakSumCheck {
  bool weak_sum;
  std::optional<WeakSumCertificate> certificate;  // present iff weak_sum
  std::optional<WeakSumWitness> witness;          // present iff !weak_sum
};

/// Decides whether the matrix becomes a sum matrix after changing only its
/// main diagonal. The off-diagonal system a(i,j) = alpha[i] + beta[j] has a
/// one-dimensional solution gauge (shift alpha by c, beta by -c) whenever it
/// is consistent, so anchoring alpha[0] = 0 and reading the remaining
/// parameters off the first rows decides membership; the candidate is then
/// verified against every off-diagonal entry. n <= 2 is always a weak sum
/// and gets an explicit certificate.
inline WeakSumCheck recognize_weak_sum(const SquareMatrix& a, double tol = default_tolerance) {
  const int n = a.order();
  std::vector<double> alpha(n, 0.0), beta(n, 0.0);
  if (n == 2) {
    beta[0] = a(1, 0);
    beta[1] = a(0, 1);
  } else if (n >= 3) {
    for (int j = 1; j < n; ++j) beta[j] = a(0, j);
    for (int i = 1; i < n; ++i) {
      const int jstar = (i == 1) ? 2 : 1;
      alpha[i] = a(i, jstar) - beta[jstar];
    }
    beta[0] = a(1, 0) - alpha[1];
  }
  const double bound = tol * tolerance_scale(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double residual = a(i, j) - alpha[i] - beta[j];
      if (std::abs(residual) > bound)
        return {false, std::nullopt, WeakSumWitness{i, j, residual}};
    }
  return {true, WeakSumCertificate{std::move(alpha), std::move(beta)}, std::nullopt};
}

inline bool is_symmetric(const SquareMatrix& a, double tol = default_tolerance) {
  const double bound = tol * tolerance_scale(a);
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > bound) return false;
  return true;
}

}  // namespace qaplin
