#pragma once

#include <limits>
#include <vector>

#include "qaplin/matrix.hpp"
#include "qaplin/objective.hpp"
#include "qaplin/permutation.hpp"

namespace qaplin {

/// Optimal assignment with the dual certificate: row_potentials[i] +
/// col_potentials[j] <= C(i,j) for all i,j, with equality on assigned pairs.
struct LapSolution {
  Permutation assignment;
  double value;
  std::vector<double> row_potentials, col_potentials;
};

/// O(n^3) shortest augmenting path method with dual potentials. Handles
/// arbitrary real costs without preshifting. Deterministic: rows are
/// assigned in increasing order and column scans take the first minimum, so
/// ties resolve lexicographically.
inline LapSolution solve_lap(const SquareMatrix& c) {
  const int n = c.order();
  constexpr double inf = std::numeric_limits<double>::infinity();
  // One virtual column 0; p[j] is the row currently assigned to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    minv.assign(n + 1, inf);
    used.assign(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> images(n);
  for (int j = 1; j <= n; ++j) images[p[j] - 1] = j - 1;
  Permutation assignment(std::move(images));
  double value = 0.0;
  for (int i = 0; i < n; ++i) value += c(i, assignment(i));
  return {std::move(assignment), value, std::vector<double>(u.begin() + 1, u.end()),
          std::vector<double>(v.begin() + 1, v.end())};
}

}  // namespace qaplin
