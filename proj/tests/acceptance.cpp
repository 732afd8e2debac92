// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qaplin/oracle.hpp"
#include "qaplin/qaplin.hpp"

using namespace qaplin;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// 1. The four-vertex cut fixture with its integer cost matrix verifies
//    exhaustively over all 24 permutations with residual exactly zero.
Outcome cut_fixture_exact() {
  const SquareMatrix a = testutil::cut12_matrix();
  const SquareMatrix f4 = feedback_matrix(4);
  const SquareMatrix c = testutil::row_form_cut_costs().transpose();
  double worst = 0.0;
  std::uint64_t count = 0;
  for_each_permutation(4, [&](const std::vector<int>& p) {
    worst = std::max(worst, std::abs(detail::qap_value_raw(a, f4, p) -
                                     detail::lap_value_raw(c, p)));
    ++count;
    return true;
  });
  const VerifyOutcome v = verify_linearization(a, f4, c, 0.0);
  const bool pass = v.ok && worst == 0.0 && count == 24;
  return {pass, "24 permutations, max residual " + std::to_string(worst)};
}

// 2. Decomposition round-trip: 100 instances each of n = 4, 6, 8, integer
//    mode reproduces the input exactly, float mode within 1e-9 * scale;
//    step count <= n^2 - n throughout.
Outcome decomposition_round_trip() {
  SplitMix64 seeds(20240001);
  int failures = 0;
  double worst_float = 0.0;
  for (const bool integer : {true, false}) {
    for (const int n : {4, 6, 8}) {
      for (int trial = 0; trial < 100; ++trial) {
        const SquareMatrix a =
            integer ? testutil::generated(GeneratorKind::balanced, n, seeds.next(), -9, 9)
                    : testutil::generated(GeneratorKind::balanced, n, seeds.next(), -9.5, 9.5);
        const DecomposeResult d = decompose(a);
        if (!d.ok || d.trace.size() > static_cast<std::size_t>(n * n - n)) {
          ++failures;
          continue;
        }
        const double err = (recompose(*d.decomposition) - a).max_abs();
        if (integer) {
          if (err != 0.0) ++failures;
        } else {
          worst_float = std::max(worst_float, err / tolerance_scale(a));
          if (err > 1e-9 * tolerance_scale(a)) ++failures;
        }
      }
    }
  }
  char worst[32];
  std::snprintf(worst, sizeof worst, "%.2e", worst_float);
  return {failures == 0, "600 instances, failures " + std::to_string(failures) +
                             ", worst float error " + worst + " * scale"};
}

// 3. FAS characterization: constructive linearizer verdict agrees with the
//    least-squares oracle on 200 instances per n in {3,4,5} (half balanced,
//    half perturbed); every positive verifies exhaustively.
Outcome fas_equivalence() {
  SplitMix64 seeds(20240002);
  int disagreements = 0, verify_failures = 0, positives = 0;
  for (const int n : {3, 4, 5}) {
    const SquareMatrix f = feedback_matrix(n);
    for (int trial = 0; trial < 200; ++trial) {
      const bool perturb = trial % 2 == 1;
      const SquareMatrix a =
          perturb ? testutil::generated(GeneratorKind::balanced, n, seeds.next(), -10, 10, 1.0)
                  : testutil::generated(GeneratorKind::balanced, n, seeds.next());
      const FasLinearization lin = linearize_fas(a);
      const OracleVerdict oracle = linearizability_oracle(a, f);
      if (lin.ok != oracle.linearizable) ++disagreements;
      if (lin.ok) {
        ++positives;
        if (!verify_linearization(a, f, lin.linearization->c).ok) ++verify_failures;
      }
    }
  }
  return {disagreements == 0 && verify_failures == 0,
          "600 instances, " + std::to_string(positives) + " positives, disagreements " +
              std::to_string(disagreements) + ", verification failures " +
              std::to_string(verify_failures)};
}

// 4. TSP characterization: same protocol against the cycle matrix; every
//    positive instance has a one-point tour value set equal to tour_value
//    within 1e-9 * scale.
Outcome tsp_equivalence() {
  SplitMix64 seeds(20240003);
  int disagreements = 0, verify_failures = 0, tour_failures = 0, positives = 0;
  for (const int n : {3, 4, 5}) {
    const SquareMatrix h = hamiltonian_matrix(n);
    for (int trial = 0; trial < 200; ++trial) {
      const bool perturb = trial % 2 == 1;
      const SquareMatrix a =
          perturb ? testutil::generated(GeneratorKind::weak_sum, n, seeds.next(), -10, 10, 1.0)
                  : testutil::generated(GeneratorKind::weak_sum, n, seeds.next());
      const TspLinearization lin = linearize_tsp(a);
      const OracleVerdict oracle = linearizability_oracle(a, h);
      if (lin.ok != oracle.linearizable) ++disagreements;
      if (lin.ok) {
        ++positives;
        if (!verify_linearization(a, h, lin.linearization->c).ok) ++verify_failures;
        const TspEnumeration e = brute_force_tsp(a);
        const double bound = 1e-9 * tolerance_scale(a);
        const double spread = e.distinct_values.back() - e.distinct_values.front();
        if (spread > bound || std::abs(e.distinct_values.front() - lin.tour_value) > bound)
          ++tour_failures;
      }
    }
  }
  return {disagreements == 0 && verify_failures == 0 && tour_failures == 0,
          "600 instances, " + std::to_string(positives) + " positives, disagreements " +
              std::to_string(disagreements) + ", tour-value failures " +
              std::to_string(tour_failures)};
}

// 5. Principal reduction: 50 balanced instances of order 6, 3 random
//    nonempty subsets each; the reduced cost matrix verifies exhaustively.
Outcome principal_reduction() {
  SplitMix64 seeds(20240004);
  SplitMix64 subsets(20240005);
  int failures = 0, checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6;
    const SquareMatrix a = testutil::generated(GeneratorKind::balanced, n, seeds.next());
    const FasLinearization lin = linearize_fas(a);
    if (!lin.ok) {
      ++failures;
      continue;
    }
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<int> members;
      for (int i = 0; i < n; ++i)
        if (subsets.next_below(2)) members.push_back(i);
      if (members.empty()) members.push_back(static_cast<int>(subsets.next_below(n)));
      const IndexSubset j(n, members);
      const Linearization reduced = reduce_principal(a, lin.linearization->c, j);
      ++checked;
      if (!verify_linearization(principal_submatrix(a, j), feedback_matrix(j.size()), reduced.c)
               .ok)
        ++failures;
    }
  }
  return {failures == 0,
          std::to_string(checked) + " reductions, failures " + std::to_string(failures)};
}

// 6. Linearity: 100 random combinations lambda1 * A1 + lambda2 * A2 of
//    balanced instances of order 4; the combined cost matrix verifies
//    exhaustively.
Outcome linear_combinations() {
  SplitMix64 seeds(20240006);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4;
    const SquareMatrix a1 = testutil::generated(GeneratorKind::balanced, n, seeds.next());
    const SquareMatrix a2 = testutil::generated(GeneratorKind::balanced, n, seeds.next());
    const double l1 = seeds.next_real(-5, 5), l2 = seeds.next_real(-5, 5);
    const FasLinearization f1 = linearize_fas(a1), f2 = linearize_fas(a2);
    if (!f1.ok || !f2.ok) {
      ++failures;
      continue;
    }
    const SquareMatrix combined = l1 * f1.linearization->c + l2 * f2.linearization->c;
    if (!verify_linearization(l1 * a1 + l2 * a2, feedback_matrix(n), combined).ok) ++failures;
  }
  return {failures == 0, "100 combinations, failures " + std::to_string(failures)};
}

// 7. Well-solvable case end to end: for n in {4,...,7}, 50 balanced
//    instances each, the polynomial solver matches the exhaustive optimum
//    within 1e-9 * scale.
Outcome fas_solver_end_to_end() {
  SplitMix64 seeds(20240007);
  int failures = 0;
  for (int n = 4; n <= 7; ++n) {
    const SquareMatrix f = feedback_matrix(n);
    for (int trial = 0; trial < 50; ++trial) {
      const SquareMatrix a = testutil::generated(GeneratorKind::balanced, n, seeds.next());
      const FasSolveResult r = solve_fas_balanced(a);
      if (!r.ok) {
        ++failures;
        continue;
      }
      const double exact = brute_force_qap(a, f).value;
      if (std::abs(r.solution->value - exact) > 1e-9 * tolerance_scale(a)) ++failures;
    }
  }
  return {failures == 0, "200 instances, failures " + std::to_string(failures)};
}

// 8. LAP solver: equals the brute-force minimum on 100 random 8x8 real
//    matrices; dual feasibility and complementary slackness hold within
//    1e-9 * scale.
Outcome lap_solver() {
  SplitMix64 gen(20240008);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const SquareMatrix c = testutil::random_matrix(8, gen);
    const LapSolution s = solve_lap(c);
    const double bound = 1e-9 * tolerance_scale(c);
    if (std::abs(s.value - testutil::brute_force_lap_value(c)) > bound) ++failures;
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j)
        if (s.row_potentials[i] + s.col_potentials[j] > c(i, j) + bound) ++failures;
      if (std::abs(s.row_potentials[i] + s.col_potentials[s.assignment(i)] -
                   c(i, s.assignment(i))) > bound)
        ++failures;
    }
  }
  return {failures == 0, "100 instances, failures " + std::to_string(failures)};
}

// 9. Cyclic-shift identities: the tour objective is shift-invariant and the
//    n shifts of any permutation tile the cost matrix, 100 random triples
//    (A, C, p) of order 6, within 1e-9 * scale.
Outcome cyclic_shift_identities() {
  SplitMix64 gen(20240009);
  int failures = 0;
  const int n = 6;
  const SquareMatrix h = hamiltonian_matrix(n);
  for (int trial = 0; trial < 100; ++trial) {
    const SquareMatrix a = testutil::random_matrix(n, gen);
    const SquareMatrix c = testutil::random_matrix(n, gen);
    const Permutation p = random_permutation(n, gen);

    double qap_total = 0.0, lap_total = 0.0;
    for (int k = 0; k < n; ++k) {
      const Permutation shifted = cyclic_shift(p, k);
      qap_total += qap_value(a, h, shifted);
      lap_total += lap_value(c, shifted);
    }
    if (std::abs(qap_total - n * qap_value(a, h, p)) > 1e-9 * tolerance_scale(a)) ++failures;
    double entry_total = 0.0;
    for (double x : c.entries()) entry_total += x;
    if (std::abs(lap_total - entry_total) > 1e-9 * tolerance_scale(c)) ++failures;
  }
  return {failures == 0, "100 triples, failures " + std::to_string(failures)};
}

// 10. Six-permutation identity: for 1000 random integer 3x3 matrices the
//     alternating sum of the six FAS objectives equals the balance residual
//     of the triple exactly.
Outcome six_permutation_identity() {
  SplitMix64 gen(20240010);
  int failures = 0;
  const SquareMatrix f3 = feedback_matrix(3);
  const Permutation rotations[3] = {Permutation({0, 1, 2}), Permutation({1, 2, 0}),
                                    Permutation({2, 0, 1})};
  const Permutation swaps[3] = {Permutation({0, 2, 1}), Permutation({1, 0, 2}),
                                Permutation({2, 1, 0})};
  for (int trial = 0; trial < 1000; ++trial) {
    SquareMatrix a(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = static_cast<double>(gen.next_int(-9, 9));
    double diff = 0.0;
    for (const Permutation& p : rotations) diff += qap_value(a, f3, p);
    for (const Permutation& p : swaps) diff -= qap_value(a, f3, p);
    const double residual = (a(1, 0) + a(2, 1) + a(0, 2)) - (a(0, 1) + a(1, 2) + a(2, 0));
    if (diff != residual) ++failures;
  }
  return {failures == 0, "1000 matrices, failures " + std::to_string(failures)};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
  double budget_ms;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"cut fixture verifies exhaustively with residual 0", cut_fixture_exact, 1.0},
      {"decomposition round-trip, integer exact / float 1e-9", decomposition_round_trip, 5000.0},
      {"FAS linearizer agrees with least-squares oracle", fas_equivalence, 60000.0},
      {"TSP linearizer agrees with oracle, constant tours", tsp_equivalence, 60000.0},
      {"principal reduction verifies exhaustively", principal_reduction, 30000.0},
      {"linear combinations stay linearizable", linear_combinations, 10000.0},
      {"balanced FAS solver matches brute force", fas_solver_end_to_end, 120000.0},
      {"LAP solver matches brute force with dual certificates", lap_solver, 10000.0},
      {"cyclic-shift identities", cyclic_shift_identities, 1000.0},
      {"six-permutation balance identity", six_permutation_identity, 1000.0},
  };

  int failed = 0;
  int id = 0;
  for (const Criterion& criterion : criteria) {
    ++id;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = ms_since(start);
    const bool in_budget = elapsed < criterion.budget_ms;
    const bool pass = outcome.pass && in_budget;
    if (!pass) ++failed;
    std::printf("[%2d] %s  %-55s (%.2f ms, budget %.0f ms)  %s\n", id, pass ? "PASS" : "FAIL",
                criterion.name, elapsed, criterion.budget_ms, outcome.detail.c_str());
  }
  if (failed == 0)
    std::printf("all %d acceptance criteria passed\n",
                static_cast<int>(std::size(criteria)));
  else
    std::printf("%d acceptance criteria FAILED\n", failed);
  return failed;
}
