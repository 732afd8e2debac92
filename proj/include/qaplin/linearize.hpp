#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qaplin/builders.hpp"
#include "qaplin/decompose.hpp"
#include "qaplin/matrix.hpp"
#include "qaplin/objective.hpp"
#include "qaplin/permutation.hpp"
#include "qaplin/recognize.hpp"
#include "qaplin/rng.hpp"

namespace qaplin {

/// LAP cost matrix satisfying qap_value(A,B,p) = lap_value(C,p) for every
/// permutation of the instance it certifies.
struct Linearization {
  SquareMatrix c;
};

/// All entries value/n, so every permutation's LAP objective is the given
/// value.
inline SquareMatrix constant_lap_matrix(int n, double value) {
  SquareMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = value / n;
  return c;
}

/// Linearization of the cut-instance FAS objective: with k = |I|, column v
/// of C carries (i+1) - (k+1)/2 in row i for every v in I, zeroes elsewhere.
/// Row i of the LAP picks column p(i), so the k rows whose image lies in I
/// contribute the positions of I's vertices in the layout; summed against
/// the centering constant this equals the number of layout-backward arcs
/// leaving I. Requires a proper nonempty subset.
inline Linearization linearize_cut_fas(const IndexSubset& subset) {
  if (!subset.proper_nonempty())
    throw DegenerateInstance(
        "linearize_cut_fas: empty or full subset induces the zero cut matrix");
  const int n = subset.ambient();
  const double center = 0.5 * (subset.size() + 1);
  SquareMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int v : subset.members()) c(i, v) = (i + 1) - center;
  return {std::move(c)};
}

struct FasLinearization {
  bool ok;
  std::optional<Linearization> linearization;  // present iff ok
  std::optional<BalanceWitness> witness;       // present iff !ok
};

/// Linearizes the feedback-arc-set QAP of a balanced 3-cycle matrix: the
/// cut decomposition's symmetric part contributes the constant
/// sum_{i<j} S(i,j) (either relative order of a vertex pair matches the
/// pair's weight exactly once) and each cut term contributes its scaled cut
/// linearization; linearity of both objectives glues the pieces.
inline FasLinearization linearize_fas(const SquareMatrix& a, double tol = default_tolerance) {
  const int n = a.order();
  DecomposeResult d = decompose(a, tol);
  if (!d.ok) return {false, std::nullopt, std::move(d.witness)};

  double constant = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) constant += d.decomposition->symmetric_part(i, j);
  SquareMatrix c = constant_lap_matrix(n, constant);
  for (const CutTerm& term : d.decomposition->terms)
    c = c + term.coefficient * linearize_cut_fas(term.subset).c;
  return {true, Linearization{std::move(c)}, std::nullopt};
}

struct TspLinearization {
  bool ok;
  std::optional<Linearization> linearization;  // present iff ok
  double tour_value = 0.0;                     // meaningful iff ok
  std::optional<WeakSumWitness> witness;       // present iff !ok
};

/// Linearizes the traveling-salesman QAP of a weak sum matrix: around any
/// directed tour every city occurs once as arc tail and once as arc head,
/// so each permutation's objective is the constant sum of all parameters,
/// and diagonal entries never matter. n = 1 and n = 2 traverse a fixed arc
/// multiset and are linearizable unconditionally.
inline TspLinearization linearize_tsp(const SquareMatrix& a, double tol = default_tolerance) {
  const int n = a.order();
  if (n == 1) return {true, Linearization{SquareMatrix(1, {a(0, 0)})}, a(0, 0), std::nullopt};
  WeakSumCheck check = recognize_weak_sum(a, tol);
  if (!check.weak_sum) return {false, std::nullopt, 0.0, std::move(check.witness)};
  double value = 0.0;
  for (int i = 0; i < n; ++i) value += check.certificate->alpha[i] + check.certificate->beta[i];
  return {true, Linearization{constant_lap_matrix(n, value)}, value, std::nullopt};
}

struct GeneralLinearization {
  bool ok;
  std::optional<Linearization> linearization;  // present iff ok
  std::optional<WeakSumWitness> witness;       // present iff !ok
};

/// Folklore construction: when A is a weak sum matrix with parameters
/// (alpha, beta) and diagonal d, the matrix
///   C(i,v) = alpha[v] * rowsum_B(i) + beta[v] * colsum_B(i)
///          + (d[v] - alpha[v] - beta[v]) * B(i,i)
/// linearizes the QAP of (A, B) for arbitrary B: splitting the objective
/// into its off-diagonal sum-matrix part plus a diagonal correction makes
/// every term depend on one row of the assignment only. Only the A-side
/// role is implemented.
inline GeneralLinearization linearize_weak_sum_general(const SquareMatrix& a,
                                                       const SquareMatrix& b,
                                                       double tol = default_tolerance) {
  if (a.order() != b.order())
    throw DimensionError("linearize_weak_sum_general: operand orders differ");
  const int n = a.order();
  WeakSumCheck check = recognize_weak_sum(a, tol);
  if (!check.weak_sum) return {false, std::nullopt, std::move(check.witness)};
  const auto& alpha = check.certificate->alpha;
  const auto& beta = check.certificate->beta;

  std::vector<double> row_sum(n, 0.0), col_sum(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      row_sum[i] += b(i, j);
      col_sum[j] += b(i, j);
    }
  SquareMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < n; ++v)
      c(i, v) = alpha[v] * row_sum[i] + beta[v] * col_sum[i] +
                (a(v, v) - alpha[v] - beta[v]) * b(i, i);
  return {true, Linearization{std::move(c)}, std::nullopt};
}

struct VerifyOutcome {
  bool ok;
  std::optional<Permutation> counterexample;  // present iff !ok
  double qap_at = 0.0, lap_at = 0.0;          // objectives at the counterexample
  std::uint64_t permutations_checked = 0;
};

namespace detail {

inline void check_verify_orders(const SquareMatrix& a, const SquareMatrix& b,
                                const SquareMatrix& c) {
  if (a.order() != b.order() || a.order() != c.order())
    throw DimensionError("verify_linearization: operand orders differ");
}

}  // namespace detail

/// Checks qap_value(A,B,p) == lap_value(C,p) over all n! permutations in
/// lexicographic order, reporting the first counterexample. Guarded at
/// n <= 10 (10! is about 3.6M evaluations).
inline VerifyOutcome verify_linearization(const SquareMatrix& a, const SquareMatrix& b,
                                          const SquareMatrix& c,
                                          double tol = default_tolerance) {
  detail::check_verify_orders(a, b, c);
  const int n = a.order();
  if (n > 10) throw TooLarge("verify_linearization: exhaustive mode requires n <= 10");
  const double bound = tol * std::max(tolerance_scale(a, b), tolerance_scale(c));
  VerifyOutcome out{true, std::nullopt, 0.0, 0.0, 0};
  for_each_permutation(n, [&](const std::vector<int>& p) {
    ++out.permutations_checked;
    const double q = detail::qap_value_raw(a, b, p);
    const double l = detail::lap_value_raw(c, p);
    if (std::abs(q - l) > bound) {
      out = {false, Permutation(p), q, l, out.permutations_checked};
      return false;
    }
    return true;
  });
  return out;
}

/// Sampled variant: draws `count` permutations from the seeded uniform
/// sampler and reports the first counterexample in draw order.
inline VerifyOutcome verify_linearization_sampled(const SquareMatrix& a, const SquareMatrix& b,
                                                  const SquareMatrix& c, double tol,
                                                  std::uint64_t count, std::uint64_t seed) {
  detail::check_verify_orders(a, b, c);
  const double bound = tol * std::max(tolerance_scale(a, b), tolerance_scale(c));
  SplitMix64 gen(seed);
  VerifyOutcome out{true, std::nullopt, 0.0, 0.0, 0};
  for (std::uint64_t t = 0; t < count; ++t) {
    Permutation p = random_permutation(a.order(), gen);
    ++out.permutations_checked;
    const double q = detail::qap_value_raw(a, b, p.images());
    const double l = detail::lap_value_raw(c, p.images());
    if (std::abs(q - l) > bound) return {false, std::move(p), q, l, out.permutations_checked};
  }
  return out;
}

/// Restriction of a FAS linearization to a principal submatrix: if C
/// linearizes the FAS-QAP of A, then for J = {j_1 < ... < j_k} with
/// complement {m_1 < ... < m_{n-k}} the matrix
///   C'(t,u) = C(t, j_u) + constant/k,
///   constant = sum_t C(k+t, m_t) - W2 - W3,
/// linearizes the FAS-QAP of A[J]. W2 is the backward weight inside the
/// complement laid out in increasing order and W3 the total weight of arcs
/// from the complement into J; both depend on J only. Rows of C index
/// layout positions while columns index vertices, so restricting to the
/// subproblem keeps the first k rows and J's columns.
inline Linearization reduce_principal(const SquareMatrix& a, const SquareMatrix& c,
                                      const IndexSubset& subset) {
  if (subset.empty()) throw DegenerateInstance("reduce_principal: empty index subset");
  if (a.order() != c.order() || subset.ambient() != a.order())
    throw DimensionError("reduce_principal: operand orders differ");
  const auto& j = subset.members();
  const std::vector<int> m = subset.complement();
  const int k = subset.size();

  double w2 = 0.0, w3 = 0.0;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < x; ++y) w2 += a(m[x], m[y]);
  for (int u : m)
    for (int v : j) w3 += a(u, v);

  double constant = -(w2 + w3);
  for (std::size_t t = 0; t < m.size(); ++t) constant += c(k + static_cast<int>(t), m[t]);

  SquareMatrix reduced(k);
  for (int t = 0; t < k; ++t)
    for (int u = 0; u < k; ++u) reduced(t, u) = c(t, j[u]) + constant / k;
  return {std::move(reduced)};
}

}  // namespace qaplin
