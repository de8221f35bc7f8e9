#pragma once

// Partial flag varieties as moduli of framed A_{l-1} representations, and exact
// integration of descendent polynomials by torus localization.

#include <string>
#include <string_view>
#include <vector>

#include "quivir/descendent.hpp"

namespace quivir {

/// d_1 < ... < d_{l-1} < n.
class FlagShape {
 public:
  FlagShape(std::vector<Int> dims, Int ambient);
  /// "1,2:4" form.
  static FlagShape parse(std::string_view text);

  const std::vector<Int>& dims() const { return dims_; }
  Int ambient() const { return ambient_; }
  std::size_t steps() const { return dims_.size(); }
  std::string to_string() const;

 private:
  std::vector<Int> dims_;
  Int ambient_;
};

/// Sum_i d_i (d_{i+1} - d_i) with d_l = n.
Int dimension(const FlagShape& shape);

/// Vertices "1".."l-1" with edges (i+1) -> i.
Quiver flag_quiver(const FlagShape& shape);
/// Framing n at vertex l-1.
DimVector flag_framing(const FlagShape& shape);
DimVector flag_dims(const FlagShape& shape);
VirContext flag_context(const FlagShape& shape);

/// Chain S_1 of ... of S_{l-1}, each a sorted list of coordinates 0..n-1.
struct FixedPoint {
  std::vector<std::vector<std::size_t>> chain;
};

std::vector<FixedPoint> enumerate_fixed_points(const FlagShape& shape);

using WeightVector = std::vector<Int>;

/// {w_b - w_a : a in S_i, b in S_{i+1} \ S_i} with S_l = all coordinates.
std::vector<Int> tangent_weights(const FixedPoint& fp, const FlagShape& shape, const WeightVector& w);

/// (0, 1, ..., n-1) and a second, unrelated set of distinct weights.
WeightVector default_weights(Int n);
WeightVector alternate_weights(Int n);

/// Localization of the degree-dim part of p, with tau_k(i) restricted to the
/// fixed point as Sum_{s in S_i} (-w_s)^k / k!.
Rational realize_and_integrate(const DescPoly& p, const FlagShape& shape, const WeightVector& w);
Rational realize_and_integrate(const DescPoly& p, const FlagShape& shape);

/// tau_k -> H^k/k!, coefficient of H^{n-1}.
Rational projective_space_oracle(Int n, const DescPoly& p);

/// Integral of the framed L_k applied to tau.
Rational framed_virasoro_residual(const FlagShape& shape, Int k, const DescPoly& tau,
                                  FramedConvention c = FramedConvention::NoDelta);

/// Integral of zeta(L_wt0(tau)) computed on the quiver framed at ∞.
Rational weight_zero_residual(const FlagShape& shape, const DescPoly& tau);

}  // namespace quivir
