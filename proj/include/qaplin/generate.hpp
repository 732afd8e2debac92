#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "qaplin/builders.hpp"
#include "qaplin/io.hpp"
#include "qaplin/matrix.hpp"
#include "qaplin/rng.hpp"

namespace qaplin {

enum class GeneratorKind { balanced, weak_sum, symmetric, cut };

/// Seeded instance specification. When both range bounds are integers every
/// generated entry is an integer, which gives the exact-arithmetic test
/// tier. A perturbation magnitude turns the kind into its perturbed
/// variant: the base instance with one off-diagonal entry bumped.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::balanced;
  int n = 4;
  std::uint64_t seed = 0;
  double lo = -10.0;
  double hi = 10.0;
  std::optional<double> perturbation;
};

inline bool integer_mode(const GeneratorSpec& spec) {
  return spec.lo == std::floor(spec.lo) && spec.hi == std::floor(spec.hi);
}

namespace detail {

inline double draw_entry(const GeneratorSpec& spec, SplitMix64& gen) {
  if (integer_mode(spec))
    return static_cast<double>(gen.next_int(static_cast<std::int64_t>(spec.lo),
                                            static_cast<std::int64_t>(spec.hi)));
  return gen.next_real(spec.lo, spec.hi);
}

inline IndexSubset draw_proper_subset(int n, SplitMix64& gen) {
  for (;;) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (gen.next_below(2) == 1) members.push_back(i);
    IndexSubset subset(n, std::move(members));
    if (subset.proper_nonempty()) return subset;
  }
}

// Positive cut coefficient in (0, max(1, hi)]; integer mode draws from
// {1, ..., max(1, hi)}.
inline double draw_coefficient(const GeneratorSpec& spec, SplitMix64& gen) {
  if (integer_mode(spec)) {
    const auto top = std::max<std::int64_t>(1, static_cast<std::int64_t>(spec.hi));
    return static_cast<double>(gen.next_int(1, top));
  }
  const double top = std::max(1.0, spec.hi);
  return top * (1.0 - gen.next_double());
}

inline SquareMatrix draw_symmetric(const GeneratorSpec& spec, SplitMix64& gen) {
  SquareMatrix a(spec.n);
  for (int i = 0; i < spec.n; ++i)
    for (int j = i; j < spec.n; ++j) a(i, j) = a(j, i) = draw_entry(spec, gen);
  return a;
}

}  // namespace detail

/// Deterministic: identical spec (including seed) yields identical bytes.
/// `balanced` draws a random symmetric matrix plus a positive combination
/// of at most n random directed cuts, so it is balanced by construction;
/// `weak_sum` draws parameter vectors and overwrites the diagonal;
/// `perturbed` bumps one random off-diagonal entry of the base instance,
/// which breaks either characterization for n >= 3.
inline InstanceFile generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw DomainError("generate: order must be >= 1");
  if (spec.lo > spec.hi) throw DomainError("generate: entry range is empty");
  if (spec.perturbation && !(*spec.perturbation > 0.0))
    throw DomainError("generate: perturbation magnitude must be positive");
  SplitMix64 gen(spec.seed);

  SquareMatrix a(spec.n);
  switch (spec.kind) {
    case GeneratorKind::symmetric:
      a = detail::draw_symmetric(spec, gen);
      break;
    case GeneratorKind::cut:
      if (spec.n < 2) throw DegenerateInstance("generate: cut instances need n >= 2");
      a = cut_matrix(detail::draw_proper_subset(spec.n, gen));
      break;
    case GeneratorKind::balanced: {
      a = detail::draw_symmetric(spec, gen);
      if (spec.n >= 2) {
        const int cuts = 1 + static_cast<int>(gen.next_below(static_cast<std::uint64_t>(spec.n)));
        for (int t = 0; t < cuts; ++t) {
          const IndexSubset subset = detail::draw_proper_subset(spec.n, gen);
          a = a + detail::draw_coefficient(spec, gen) * cut_matrix(subset);
        }
      }
      break;
    }
    case GeneratorKind::weak_sum: {
      std::vector<double> alpha(spec.n), beta(spec.n);
      for (double& x : alpha) x = detail::draw_entry(spec, gen);
      for (double& x : beta) x = detail::draw_entry(spec, gen);
      a = sum_matrix(alpha, beta);
      for (int i = 0; i < spec.n; ++i) a(i, i) = detail::draw_entry(spec, gen);
      break;
    }
  }

  if (spec.perturbation) {
    if (spec.n < 2) throw DegenerateInstance("generate: perturbation needs an off-diagonal entry");
    const int i = static_cast<int>(gen.next_below(static_cast<std::uint64_t>(spec.n)));
    int j = static_cast<int>(gen.next_below(static_cast<std::uint64_t>(spec.n) - 1));
    if (j >= i) ++j;
    a(i, j) += *spec.perturbation;
  }
  return InstanceFile{spec.n, {std::move(a)}};
}

}  // namespace qaplin
