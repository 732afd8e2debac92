#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "qaplin/builders.hpp"
#include "qaplin/matrix.hpp"
#include "qaplin/recognize.hpp"

namespace qaplin {

struct CutTerm {
  double coefficient;  // > 0
  IndexSubset subset;  // proper and nonempty
};

/// Certificate of the balanced-3-cycle characterization: the source matrix
/// equals symmetric_part + sum of coefficient * cut_matrix(subset).
struct CutDecomposition {
  SquareMatrix symmetric_part;
  std::vector<CutTerm> terms;
};

inline SquareMatrix recompose(const CutDecomposition& d) {
  SquareMatrix a = d.symmetric_part;
  for (const CutTerm& t : d.terms) a = a + t.coefficient * cut_matrix(t.subset);
  return a;
}

/// Splits A into a symmetric matrix S and residual R = A - S with
/// S(i,j) = min(A(i,j), A(j,i)) off the diagonal and S(i,i) = A(i,i).
/// R then has zero diagonal, nonnegative entries, and R(i,j)*R(j,i) = 0.
inline std::pair<SquareMatrix, SquareMatrix> split_symmetric(const SquareMatrix& a) {
  const int n = a.order();
  SquareMatrix s(n), r(n);
  for (int i = 0; i < n; ++i) {
    s(i, i) = a(i, i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      s(i, j) = std::min(a(i, j), a(j, i));
      r(i, j) = a(i, j) - s(i, j);
    }
  }
  return {std::move(s), std::move(r)};
}

/// One greedy extraction: the chosen maximum entry (r,s), the half-threshold
/// set, the minimum crossing entry (p,q) and its value lambda.
struct DecompositionStep {
  int r, s;
  IndexSubset subset;
  int p, q;
  double lambda;
};

struct CutStep {
  enum class Status { done, step, failure };
  Status status;
  std::optional<DecompositionStep> step;        // Status::step
  std::optional<SquareMatrix> residual;         // Status::step: R after subtraction
  std::optional<std::pair<int, int>> zero_pair;  // Status::failure: crossing pair at ~0
  int failure_r = -1;                           // Status::failure: the max-row index
};

namespace detail {

// Core of the greedy step; `bound` is the caller's tol*scale.
inline CutStep cut_step_with_bound(const SquareMatrix& r, double bound) {
  const int n = r.order();
  int mr = 0, ms = 0;
  double mx = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r(i, j) > mx) {
        mx = r(i, j);
        mr = i;
        ms = j;
      }
  if (mx <= bound) return {CutStep::Status::done, std::nullopt, std::nullopt, std::nullopt, -1};

  // Strict half-threshold with a small margin so that entries mathematically
  // equal to mx/2 stay out of the set even under rounding dust.
  const double threshold = 0.5 * mx - std::min(bound, 0.25 * mx);
  std::vector<int> inside;
  for (int i = 0; i < n; ++i)
    if (r(mr, i) < threshold) inside.push_back(i);
  IndexSubset subset(n, inside);

  int p = -1, q = -1;
  double lambda = 0.0;
  for (int i : subset.members()) {
    for (int j = 0; j < n; ++j) {
      if (subset.contains(j)) continue;
      const double e = r(i, j);
      if (e <= bound)
        return {CutStep::Status::failure, std::nullopt, std::nullopt, std::make_pair(i, j), mr};
      if (p < 0 || e < lambda) {
        lambda = e;
        p = i;
        q = j;
      }
    }
  }

  SquareMatrix next = r;
  for (int i : subset.members())
    for (int j = 0; j < n; ++j) {
      if (subset.contains(j)) continue;
      next(i, j) -= lambda;
      if (std::abs(next(i, j)) <= bound) next(i, j) = 0.0;
    }
  return {CutStep::Status::step, DecompositionStep{mr, ms, std::move(subset), p, q, lambda},
          std::move(next), std::nullopt, -1};
}

}  // namespace detail

/// One step of the constructive characterization on a residual matrix:
/// done when the maximum entry is within tolerance of zero; otherwise picks
/// the (lexicographically first) maximum entry (r,s), forms
/// I = { i : R(r,i) < R(r,s)/2 }, and either reports a crossing entry at
/// zero (which certifies the source matrix was not balanced) or subtracts
/// lambda * cut_matrix(I) with lambda the minimum crossing entry. Entries
/// within tolerance of zero are snapped to exactly zero afterwards.
inline CutStep extract_cut_step(const SquareMatrix& r, double tol = default_tolerance) {
  const int n = r.order();
  const double bound = tol * tolerance_scale(r);
  for (int i = 0; i < n; ++i) {
    if (std::abs(r(i, i)) > bound)
      throw MalformedResidual("extract_cut_step: nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (r(i, j) < -bound) throw MalformedResidual("extract_cut_step: negative entry");
      if (i < j && std::abs(r(i, j) * r(j, i)) > bound * tolerance_scale(r))
        throw MalformedResidual("extract_cut_step: opposite entries both positive");
    }
  }
  return detail::cut_step_with_bound(r, bound);
}

struct DecomposeResult {
  bool ok;
  std::optional<CutDecomposition> decomposition;  // present iff ok
  std::vector<DecompositionStep> trace;           // greedy steps, in order
  std::optional<BalanceWitness> witness;          // present iff !ok
};

/// Full constructive characterization: split off the pairwise-minimum
/// symmetric part, then repeatedly extract directed cuts until the residual
/// vanishes. Succeeds exactly on balanced 3-cycle matrices; each step zeroes
/// at least one more off-diagonal entry, so there are at most n^2 - n steps.
/// The comparison scale is fixed from the input matrix for the whole run.
inline DecomposeResult decompose(const SquareMatrix& a, double tol = default_tolerance) {
  const int n = a.order();
  const double bound = tol * tolerance_scale(a);
  auto [s, r] = split_symmetric(a);

  CutDecomposition d{std::move(s), {}};
  std::vector<DecompositionStep> trace;
  const int max_steps = n * n - n + 1;
  for (int iter = 0; iter <= max_steps; ++iter) {
    CutStep step = detail::cut_step_with_bound(r, bound);
    if (step.status == CutStep::Status::done)
      return {true, std::move(d), std::move(trace), std::nullopt};
    if (step.status == CutStep::Status::failure) {
      // The zero crossing pair together with the max-entry row forms a
      // violated triple; report the recognizer's canonical witness when it
      // finds one, the step's own triple otherwise.
      BalanceCheck check = check_balanced_3cycle(a, tol);
      std::optional<BalanceWitness> witness = check.witness;
      if (!witness) {
        int t[3] = {step.zero_pair->first, step.zero_pair->second, step.failure_r};
        std::sort(t, t + 3);
        if (t[0] < t[1] && t[1] < t[2])
          witness = BalanceWitness{t[0], t[1], t[2],
                                   a(t[0], t[1]) + a(t[1], t[2]) + a(t[2], t[0]),
                                   a(t[1], t[0]) + a(t[2], t[1]) + a(t[0], t[2])};
      }
      return {false, std::nullopt, std::move(trace), std::move(witness)};
    }
    d.terms.push_back(CutTerm{step.step->lambda, step.step->subset});
    trace.push_back(std::move(*step.step));
    r = std::move(*step.residual);
  }
  throw MalformedResidual("decompose: no progress within n^2 - n steps");
}

}  // namespace qaplin
