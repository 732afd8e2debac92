#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qaplin/builders.hpp"
#include "qaplin/lap.hpp"
#include "qaplin/linearize.hpp"
#include "qaplin/matrix.hpp"
#include "qaplin/objective.hpp"
#include "qaplin/permutation.hpp"

namespace qaplin {

struct AssignmentSolution {
  Permutation assignment;
  double value;
};

/// Exhaustive QAP minimum; among co-optimal permutations returns the
/// lexicographically first. Guarded at n <= 10.
inline AssignmentSolution brute_force_qap(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) throw DimensionError("brute_force_qap: operand orders differ");
  const int n = a.order();
  if (n > 10) throw TooLarge("brute_force_qap: requires n <= 10");
  std::optional<AssignmentSolution> best;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    const double v = detail::qap_value_raw(a, b, p);
    if (!best || v < best->value) best = AssignmentSolution{Permutation(p), v};
    return true;
  });
  return std::move(*best);
}

struct BackwardArc {
  int from, to;
  double weight;
};

/// Minimum-weight feedback arc set of a balanced instance: the layout
/// (vertex at position i is layout(i)), the optimal backward-arc weight,
/// and the nonzero arcs running from a later position to an earlier one.
struct FasSolution {
  Permutation layout;
  double value;
  std::vector<BackwardArc> backward_arcs;
};

struct FasSolveResult {
  bool ok;
  std::optional<FasSolution> solution;    // present iff ok
  std::optional<BalanceWitness> witness;  // present iff !ok
};

/// The well-solvable case: linearize the FAS-QAP of a balanced 3-cycle
/// matrix and solve the resulting LAP exactly.
inline FasSolveResult solve_fas_balanced(const SquareMatrix& a, double tol = default_tolerance) {
  const int n = a.order();
  FasLinearization lin = linearize_fas(a, tol);
  if (!lin.ok) return {false, std::nullopt, std::move(lin.witness)};
  LapSolution lap = solve_lap(lin.linearization->c);

  const Permutation position = lap.assignment.inverse();  // position[v] = slot of vertex v
  std::vector<BackwardArc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && position(u) > position(v) && a(u, v) != 0.0)
        arcs.push_back(BackwardArc{u, v, a(u, v)});
  const double value = qap_value(a, feedback_matrix(n), lap.assignment);
  return {true, FasSolution{std::move(lap.assignment), value, std::move(arcs)}, std::nullopt};
}

/// Exhaustive scan of the TSP-QAP objective over all n! permutations (the
/// QAP relaxation deliberately admits non-cyclic permutations). Returns the
/// sorted exactly-distinct value set and the lexicographically first
/// minimizer. Guarded at 2 <= n <= 9.
struct TspEnumeration {
  std::vector<double> distinct_values;
  AssignmentSolution minimum;
};

inline TspEnumeration brute_force_tsp(const SquareMatrix& a) {
  const int n = a.order();
  if (n < 2) throw DegenerateInstance("brute_force_tsp: needs at least two cities");
  if (n > 9) throw TooLarge("brute_force_tsp: requires n <= 9");
  const SquareMatrix h = hamiltonian_matrix(n);
  std::vector<double> values;
  std::optional<AssignmentSolution> best;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    const double v = detail::qap_value_raw(a, h, p);
    values.push_back(v);
    if (!best || v < best->value) best = AssignmentSolution{Permutation(p), v};
    return true;
  });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return {std::move(values), std::move(*best)};
}

}  // namespace qaplin
