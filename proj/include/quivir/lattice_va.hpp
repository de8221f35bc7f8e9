#pragma once

// Lattice vertex algebra C[Lambda] (x) Sym(b_{-k}) of an integral lattice with a
// possibly non-symmetric form q.  Q = q + q^T pairs the Heisenberg modes and
// (-1)^{q(alpha,beta)} is the cocycle.  All states are even.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quivir/descendent.hpp"
#include "quivir/linalg.hpp"
#include "quivir/polynomial.hpp"
#include "quivir/quiver.hpp"

namespace quivir {

struct FockTag {};

/// Polynomial in the oscillators b_{-k}; generator slot = basis index, level = k.
using FockPoly = Polynomial<FockTag>;

/// Rational coordinates over the lattice basis.
using LatticeVector = std::vector<Rational>;

class Lattice {
 public:
  Lattice(std::vector<std::string> basis, IntMatrix q);
  /// q = Euler form of the quiver.
  static Lattice from_quiver(const Quiver& quiver);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const IntMatrix& q() const { return q_; }
  const IntMatrix& Q() const { return Q_; }

  Int q_form(const DimVector& a, const DimVector& b) const;
  Int Q_form(const DimVector& a, const DimVector& b) const;
  /// Q(x, e_c) for every basis index c.
  LatticeVector Q_row(const LatticeVector& x) const;
  LatticeVector Q_row(const DimVector& x) const;

  bool is_nondegenerate() const { return Q_inverse_.has_value(); }
  /// Throws for a degenerate form.
  const RationalMatrix& Q_inverse() const;

  LatticeVector basis_vector(std::size_t c) const;

 private:
  std::vector<std::string> basis_;
  IntMatrix q_;
  IntMatrix Q_;
  std::optional<RationalMatrix> Q_inverse_;
};

/// Finite sum of e^alpha (x) P(b_{-k}).
class VAState {
 public:
  using SectorMap = std::map<DimVector, FockPoly>;

  VAState() = default;
  static VAState vacuum(std::size_t rank);
  static VAState exp(const DimVector& alpha, const FockPoly& p = FockPoly(1));

  const SectorMap& sectors() const { return sectors_; }
  FockPoly component(const DimVector& alpha) const;
  bool is_zero() const { return sectors_.empty(); }

  void add(const DimVector& alpha, const FockPoly& p);
  VAState& operator+=(const VAState& o);
  VAState& operator-=(const VAState& o);
  VAState& operator*=(const Rational& s);
  friend VAState operator+(VAState a, const VAState& b) { return a += b; }
  friend VAState operator-(VAState a, const VAState& b) { return a -= b; }
  friend VAState operator*(const Rational& s, VAState a) { return a *= s; }
  friend bool operator==(const VAState&, const VAState&) = default;

  /// Largest oscillator degree; -1 for the zero state.
  Int depth() const;

 private:
  SectorMap sectors_;
};

/// x_k = Sum_c x_c (e_c)_{-k} as a Fock polynomial.
FockPoly oscillator(const LatticeVector& x, std::uint32_t k);

/// Derivation T(b_k) = k b_{k+1}, T(e^alpha) = e^alpha alpha_1.
VAState translate(const VAState& s);

/// x_(n): multiplication by x_{-n} for n < 0, Q(x, beta) for n = 0,
/// n Sum_c Q(x,c) d/d(c_n) for n > 0.
VAState heisenberg_mode(const LatticeVector& x, Int n, const VAState& s, const Lattice& L);

VAState exp_field_mode(const DimVector& alpha, Int n, const VAState& s, const Lattice& L);

/// a_(n) b through the normal-ordered product formula for Y(a, z).
VAState vertex_mode(const VAState& a, Int n, const VAState& b, const Lattice& L);

/// Upper bound N with a_(n) b = 0 for all n > N; nullopt if a or b is zero.
std::optional<Int> max_nonzero_mode(const VAState& a, const VAState& b, const Lattice& L);

/// (1/2) Sum_{a,b} Q^{-1}_{ab} a_{-1} b_{-1} |0>.
VAState conformal_element(const Lattice& L);
/// Sum_v vhat_{-1} v_{-1} |0> with vhat dual to v under 2Q.
VAState conformal_element_dual_form(const Lattice& L);

/// L_k from the mode sums (1/2) Sum Q^{-1}_{ab} Sum_m :a_(m) b_(k-m):.
VAState virasoro_mode(Int k, const VAState& s, const Lattice& L);
/// L_k = omega_(k+1) via vertex_mode.
VAState virasoro_mode_generic(Int k, const VAState& s, const Lattice& L);

/// <tau, s> on the sector alpha of s, with <tau_k(v), v_{-k}> = 1/(k-1)! extended
/// by derivations.  Slots of tau refer to the lattice basis.
Rational pairing(const DescPoly& tau, const VAState& s, const DimVector& alpha);

struct DualCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// <L_k tau, s> against <tau, L_k s + delta_k s> on a lattice built from a
/// quiver with frozen vertices (Q^fr).
DualCheck dual_check(Int k, const DescPoly& tau, const VAState& s, const DimVector& alpha,
                     const Quiver& quiver, const Lattice& L);

/// The unframed quiver q sits inside framify(q) on sectors (0, alpha).  Here
/// <L_k tau, s> against <tau, L_k s> with L_k of q acting on tau.
DualCheck embedded_dual_check(Int k, const DescPoly& tau_over_q, const VAState& s, const DimVector& alpha,
                              const Quiver& q, const Lattice& framed_lattice);

std::string format_state(const VAState& s, const Lattice& L);

}  // namespace quivir
