#pragma once

// The quotient V / T(V) with its bracket [a, b] = a_(0) b, and the physical-state
// predicates built on the conformal element.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "quivir/lattice_va.hpp"

namespace quivir {

/// Reduces states modulo the image of the translation operator.  Each
/// (sector, oscillator degree) block is row reduced once and cached.
class CosetReducer {
 public:
  explicit CosetReducer(const Lattice& L) : L_(L) {}

  /// Canonical representative of s + T(V).
  VAState normal_form(const VAState& s) const;
  bool equivalent(const VAState& a, const VAState& b) const { return normal_form(a - b).is_zero(); }

 private:
  struct Block {
    std::vector<Monomial> columns;               // all monomials of the degree, graded order
    std::map<Monomial, std::size_t> column_of;
    std::vector<std::vector<Rational>> rows;     // reduced rows of T-images
    std::vector<std::size_t> pivots;
  };
  const Block& block(const DimVector& alpha, Int degree) const;

  const Lattice& L_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<DimVector, Int>, Block> cache_;
};

/// Representative of [a, b] = a_(0) b, reduced to normal form.
VAState lie_bracket(const VAState& a, const VAState& b, const CosetReducer& reducer, const Lattice& L);

/// Sum_{j >= -1} (-1)^j/(j+1)! T^{j+1} L_j a; the sum stops at j = depth(a).
VAState k0_residual(const VAState& a, const Lattice& L);

/// L_0 s = weight s and L_k s = 0 for 1 <= k <= depth(s).
bool is_physical(const VAState& s, const Rational& weight, const Lattice& L);

/// Basis of {a in sector alpha, oscillator degree D : k0_residual(a) = 0}.
std::vector<VAState> residual_kernel(const DimVector& alpha, Int degree, const Lattice& L);

}  // namespace quivir
