#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quivir/polynomial.hpp"
#include "quivir/quiver.hpp"

namespace quivir {

struct DescTag {};

/// Polynomial in the descendents tau_i(v); generator slot = vertex index, level = i.
using DescPoly = Polynomial<DescTag>;

inline DescPoly tau(std::size_t vertex, std::uint32_t index) {
  return DescPoly::generator(Generator{static_cast<std::uint32_t>(vertex), index});
}

/// Sign convention for the framed T-operator.
enum class FramedConvention {
  NoDelta,     ///< T_k - k! tau_k(n)
  WithDelta,  ///< T_k - k! tau_k(n) + delta_k
};

std::string_view to_string(FramedConvention c);
FramedConvention parse_convention(std::string_view text);

/// Quiver, dimension vector and optional framing.  tau_0(v) evaluates to dim[v].
class VirContext {
 public:
  VirContext(Quiver quiver, DimVector dim, std::optional<DimVector> framing = std::nullopt);

  /// Same, but dim may have negative entries (lattice sectors).
  static VirContext with_class(Quiver quiver, DimVector alpha);

  const Quiver& quiver() const { return quiver_; }
  const DimVector& dim() const { return dim_; }
  const std::optional<DimVector>& framing() const { return framing_; }
  const IntMatrix& td() const { return td_; }

 private:
  VirContext() = default;
  Quiver quiver_;
  DimVector dim_;
  std::optional<DimVector> framing_;
  IntMatrix td_;
};

/// Derivation with R_k tau_i(v) = i(i+1)...(i+k) tau_{i+k}(v); requires k >= -1.
DescPoly apply_R(Int k, const DescPoly& p, const VirContext& ctx);

/// Sum_{i+j=k} i! j! Sum_{v,w} td[w][v] tau_i(w) tau_j(v), plus delta_k if frozen vertices exist.
DescPoly T_class(Int k, const VirContext& ctx);

DescPoly apply_L(Int k, const DescPoly& p, const VirContext& ctx);

/// S_k^v = -((k+1)!/d_v) R_{-1}(tau_{k+1}(v) * -).
DescPoly apply_S(Int k, std::size_t v, const DescPoly& p, const VirContext& ctx);

/// Sum_{j >= -1} (-1)^j/(j+1)! L_j R_{-1}^{j+1}.
DescPoly apply_Lwt0(const DescPoly& p, const VirContext& ctx);

/// T_k - k! Sum_v n_v tau_k(v), with tau_0(n) = Sum n_v d_v.
DescPoly framed_T_class(Int k, const VirContext& ctx, FramedConvention c = FramedConvention::NoDelta);

DescPoly apply_framed_L(Int k, const DescPoly& p, const VirContext& ctx,
                        FramedConvention c = FramedConvention::NoDelta);

/// Kills tau_i(∞) and shifts the remaining slots down by one.  The quiver must
/// come from frame_at_infinity (∞ at index 0).
DescPoly zeta(const DescPoly& p, const Quiver& framed_at_infinity);

/// Renames generator slots: slot s becomes slot_map[s].
DescPoly reindex(const DescPoly& p, const std::vector<std::size_t>& slot_map);

/// Text form such as `3/2*t[2,v1]*t[1,v2] + t[1,v1]^2`; vertex names resolve through q.
DescPoly parse_desc_poly(std::string_view text, const Quiver& q);
std::string format_desc_poly(const DescPoly& p, const Quiver& q);

}  // namespace quivir
