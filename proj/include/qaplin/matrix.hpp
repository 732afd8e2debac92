#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaplin {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose orders (or vector lengths) do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Structurally empty input (empty index subset, cycle on fewer than two
/// vertices, ...).
class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

/// Argument outside its documented domain (non-finite entry, k out of
/// range, not a bijection, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Residual matrix handed to the cut extraction step violates its
/// preconditions (negative entry, nonzero diagonal, complementarity).
class MalformedResidual : public Error {
 public:
  using Error::Error;
};

/// Instance too large for an exhaustive operation.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Malformed instance text. Carries the 1-based position of the offending
/// token (or of the first missing token).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t token_position)
      : Error(msg + " (token " + std::to_string(token_position) + ")"),
        token_position_(token_position) {}
  std::size_t token_position() const { return token_position_; }

 private:
  std::size_t token_position_;
};

/// Default comparison tolerance; every approximate comparison in the
/// library uses tol * scale with scale = max(1, largest absolute entry of
/// the operands).
inline constexpr double default_tolerance = 1e-9;

/// Dense n x n matrix of finite doubles, row-major. Value type: operations
/// on matrices never mutate their arguments.
class SquareMatrix {
 public:
  /// Zero matrix of the given order.
  explicit SquareMatrix(int n) : n_(check_order(n)), e_(static_cast<std::size_t>(n) * n, 0.0) {}

  /// From row-major entries; requires exactly n*n finite values.
  SquareMatrix(int n, std::vector<double> entries) : n_(check_order(n)), e_(std::move(entries)) {
    if (e_.size() != static_cast<std::size_t>(n_) * n_)
      throw DimensionError("SquareMatrix: expected " + std::to_string(n_ * n_) + " entries, got " +
                           std::to_string(e_.size()));
    for (double x : e_)
      if (!std::isfinite(x)) throw DomainError("SquareMatrix: entries must be finite");
  }

  /// Convenience for literals in tests and fixtures.
  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<double> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n)
        throw DimensionError("SquareMatrix::from_rows: ragged rows");
      e.insert(e.end(), row.begin(), row.end());
    }
    return SquareMatrix(n, std::move(e));
  }

  int order() const { return n_; }

  double operator()(int i, int j) const { return e_[index(i, j)]; }
  double& operator()(int i, int j) { return e_[index(i, j)]; }

  const std::vector<double>& entries() const { return e_; }

  double max_abs() const {
    double m = 0.0;
    for (double x : e_) m = std::max(m, std::abs(x));
    return m;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  static int check_order(int n) {
    if (n < 1) throw DomainError("SquareMatrix: order must be >= 1");
    return n;
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<double> e_;
};

inline SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) throw DimensionError("matrix sum: orders differ");
  SquareMatrix r = a;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) r(i, j) += b(i, j);
  return r;
}

inline SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) throw DimensionError("matrix difference: orders differ");
  SquareMatrix r = a;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) r(i, j) -= b(i, j);
  return r;
}

inline SquareMatrix operator*(double s, const SquareMatrix& a) {
  SquareMatrix r = a;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) r(i, j) *= s;
  return r;
}

/// max(1, largest absolute entry): the unit-free factor multiplying tol in
/// every approximate comparison.
inline double tolerance_scale(const SquareMatrix& a) { return std::max(1.0, a.max_abs()); }

inline double tolerance_scale(const SquareMatrix& a, const SquareMatrix& b) {
  return std::max(tolerance_scale(a), tolerance_scale(b));
}

/// Subset of {0, ..., n-1} kept sorted; external formats print it 1-based.
class IndexSubset {
 public:
  IndexSubset(int ambient, std::vector<int> members) : n_(ambient), members_(std::move(members)) {
    if (n_ < 1) throw DomainError("IndexSubset: ambient size must be >= 1");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw DomainError("IndexSubset: duplicate member");
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= n_))
      throw DomainError("IndexSubset: member out of range");
  }

  static IndexSubset from_one_based(int ambient, std::vector<int> members) {
    for (int& m : members) --m;
    return IndexSubset(ambient, std::move(members));
  }

  int ambient() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool full() const { return size() == n_; }
  bool proper_nonempty() const { return !empty() && !full(); }

  const std::vector<int>& members() const { return members_; }

  bool contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

  std::vector<int> complement() const {
    std::vector<int> c;
    c.reserve(n_ - size());
    for (int i = 0; i < n_; ++i)
      if (!contains(i)) c.push_back(i);
    return c;
  }

  std::vector<int> to_one_based() const {
    std::vector<int> m = members_;
    for (int& x : m) ++x;
    return m;
  }

  bool operator==(const IndexSubset&) const = default;

 private:
  int n_;
  std::vector<int> members_;
};

}  // namespace qaplin
