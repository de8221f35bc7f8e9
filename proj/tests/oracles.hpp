#pragma once

// Reference computations that share no code with the library paths they check.

#include <map>
#include <vector>

#include "quivir/quiver.hpp"

namespace oracle {

using quivir::Int;
using quivir::Rational;

/// Integral of sigma_1^{k(n-k)} over Gr(k, n): Pieri, one box at a time.
inline Rational schubert_sigma1_top(Int k, Int n) {
  std::map<std::vector<Int>, Rational> layer{{std::vector<Int>(k, 0), 1}};
  for (Int step = 0; step < k * (n - k); ++step) {
    std::map<std::vector<Int>, Rational> next;
    for (const auto& [lambda, c] : layer)
      for (Int row = 0; row < k; ++row) {
        if (lambda[row] == n - k) continue;
        if (row > 0 && lambda[row - 1] == lambda[row]) continue;
        auto mu = lambda;
        ++mu[row];
        next[mu] += c;
      }
    layer = std::move(next);
  }
  Rational total = 0;
  for (const auto& [lambda, c] : layer) total += c;
  return total;
}

/// Standard Young tableaux of the k x m rectangle by the hook length formula.
inline Rational rectangle_tableaux(Int k, Int m) {
  Rational r = 1;
  for (Int i = 1; i <= k * m; ++i) r *= i;
  for (Int i = 0; i < k; ++i)
    for (Int j = 0; j < m; ++j) r /= (m - j) + (k - i) - 1;
  return r;
}

/// chi(c, d) summed arrow by arrow.
inline Int euler_form(const quivir::Quiver& q, const quivir::DimVector& c, const quivir::DimVector& d) {
  Int chi = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (!q.is_frozen(v)) chi += c[v] * d[v];
  for (const auto& e : q.edges()) chi -= c[e.tail] * d[e.head];
  for (const auto& r : q.relations()) chi += c[r.tail] * d[r.head];
  return chi;
}

/// i (i+1) ... (i+k), the R_k coefficient on tau_i.
inline Int rising(Int i, Int k) {
  Int r = 1;
  for (Int j = 0; j <= k; ++j) r *= i + j;
  return r;
}

/// Cofactor expansion; fine for the tiny matrices in tests.
inline Int determinant(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * determinant(minor);
  }
  return det;
}

}  // namespace oracle
