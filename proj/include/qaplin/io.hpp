#pragma once

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "qaplin/matrix.hpp"

namespace qaplin {

/// Parsed instance text: the order followed by one to three square
/// matrices (A; A and B; or A, B and C for verification).
struct InstanceFile {
  int n;
  std::vector<SquareMatrix> matrices;
};

namespace detail {

// Whitespace-separated tokens; '#' starts a comment running to end of line.
inline std::vector<std::string> tokenize_instance(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '\n') in_comment = false;
    if (in_comment) continue;
    if (ch == '#') {
      in_comment = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

inline double parse_real_token(const std::string& token, std::size_t position) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size())
    throw ParseError("not a number: '" + token + "'", position);
  return value;
}

}  // namespace detail

/// Text format: the first non-comment token is n, followed by n*n
/// whitespace-separated reals per matrix. Whitespace layout is free, so the
/// common QAP benchmark layout (n, blank line, A, blank line, B) parses
/// unchanged. Token positions in errors are 1-based.
inline InstanceFile parse_instance(std::string_view text, int min_matrices = 1,
                                   int max_matrices = 2) {
  const std::vector<std::string> tokens = detail::tokenize_instance(text);
  if (tokens.empty()) throw ParseError("empty instance", 1);

  int n = 0;
  {
    const std::string& t = tokens[0];
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
    if (ec != std::errc{} || ptr != t.data() + t.size() || n < 1)
      throw ParseError("order must be a positive integer, got '" + t + "'", 1);
  }

  const std::size_t per_matrix = static_cast<std::size_t>(n) * n;
  const std::size_t available = tokens.size() - 1;
  if (available < per_matrix * static_cast<std::size_t>(min_matrices))
    throw ParseError("instance of order " + std::to_string(n) + " needs " +
                         std::to_string(per_matrix * min_matrices) + " values, found " +
                         std::to_string(available),
                     tokens.size() + 1);
  if (available > per_matrix * static_cast<std::size_t>(max_matrices))
    throw ParseError("unexpected extra value",
                     1 + per_matrix * static_cast<std::size_t>(max_matrices) + 1);
  if (available % per_matrix != 0)
    throw ParseError("matrix truncated: " + std::to_string(available) + " values is not a multiple of " +
                         std::to_string(per_matrix),
                     tokens.size() + 1);

  InstanceFile file{n, {}};
  std::size_t pos = 1;
  for (std::size_t m = 0; m < available / per_matrix; ++m) {
    std::vector<double> entries;
    entries.reserve(per_matrix);
    for (std::size_t t = 0; t < per_matrix; ++t, ++pos)
      entries.push_back(detail::parse_real_token(tokens[pos], pos + 1));
    file.matrices.emplace_back(n, std::move(entries));
  }
  return file;
}

namespace detail {

// Shortest representation that parses back to the identical double.
inline std::string format_real(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

}  // namespace detail

/// Inverse of parse_instance; values round-trip bit-exactly.
inline std::string emit_instance(const InstanceFile& file) {
  std::string out = std::to_string(file.n);
  out += '\n';
  for (const SquareMatrix& m : file.matrices) {
    out += '\n';
    for (int i = 0; i < file.n; ++i) {
      for (int j = 0; j < file.n; ++j) {
        if (j > 0) out += ' ';
        out += detail::format_real(m(i, j));
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace qaplin
