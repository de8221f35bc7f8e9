#include "quivir/descendent.hpp"

namespace quivir {

std::string_view to_string(FramedConvention c) {
  return c == FramedConvention::NoDelta ? "no-delta" : "paper-delta";
}

FramedConvention parse_convention(std::string_view text) {
  if (text == "no-delta") return FramedConvention::NoDelta;
  if (text == "paper-delta") return FramedConvention::WithDelta;
  throw Error("unknown convention '" + std::string(text) + "'");
}

VirContext::VirContext(Quiver quiver, DimVector dim, std::optional<DimVector> framing)
    : quiver_(std::move(quiver)), dim_(std::move(dim)), framing_(std::move(framing)) {
  if (dim_.size() != quiver_.vertex_count()) throw Error("dimension vector does not match the quiver");
  if (!dim_.is_nonnegative()) throw Error("dimension vector must be nonnegative");
  if (framing_) {
    if (quiver_.has_frozen()) throw Error("a framing requires a quiver without frozen vertices");
    if (framing_->size() != quiver_.vertex_count()) throw Error("framing vector does not match the quiver");
    if (!framing_->is_nonnegative()) throw Error("framing vector must be nonnegative");
  }
  td_ = todd_matrix(quiver_);
}

VirContext VirContext::with_class(Quiver quiver, DimVector alpha) {
  if (alpha.size() != quiver.vertex_count()) throw Error("class does not match the quiver");
  VirContext ctx;
  ctx.quiver_ = std::move(quiver);
  ctx.dim_ = std::move(alpha);
  ctx.td_ = todd_matrix(ctx.quiver_);
  return ctx;
}

namespace {

// tau_i(v) with tau_0(v) = d_v.
DescPoly tau_or_dim(std::size_t v, Int i, const DimVector& dim) {
  if (i == 0) return DescPoly(Rational(dim[v]));
  return tau(v, static_cast<std::uint32_t>(i));
}

DescPoly tau_framing(Int i, const VirContext& ctx) {
  const DimVector& n = *ctx.framing();
  DescPoly r;
  for (std::size_t v = 0; v < n.size(); ++v)
    if (n[v] != 0) r += Rational(n[v]) * tau_or_dim(v, i, ctx.dim());
  return r;
}

}  // namespace

DescPoly apply_R(Int k, const DescPoly& p, const VirContext& ctx) {
  if (k < -1) throw Error("R_k requires k >= -1");
  return p.derivation([&](Generator g) {
    const Int i = g.level;
    Rational coef = 1;
    for (Int j = 0; j <= k; ++j) coef *= i + j;
    return coef * tau_or_dim(g.slot, i + k, ctx.dim());
  });
}

DescPoly T_class(Int k, const VirContext& ctx) {
  if (k < -1) throw Error("T_k requires k >= -1");
  const std::size_t n = ctx.quiver().vertex_count();
  DescPoly r;
  for (Int i = 0; i <= k; ++i) {
    const Int j = k - i;
    const Rational weight = factorial(i) * factorial(j);
    for (std::size_t w = 0; w < n; ++w) {
      DescPoly tw = tau_or_dim(w, i, ctx.dim());
      if (tw.is_zero()) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const Int t = ctx.td()(w, v);
        if (t != 0) r += (weight * t) * (tw * tau_or_dim(v, j, ctx.dim()));
      }
    }
  }
  if (k == 0 && ctx.quiver().has_frozen()) r += DescPoly(1);
  return r;
}

DescPoly apply_L(Int k, const DescPoly& p, const VirContext& ctx) {
  return apply_R(k, p, ctx) + p * T_class(k, ctx);
}

DescPoly apply_S(Int k, std::size_t v, const DescPoly& p, const VirContext& ctx) {
  if (k < -1) throw Error("S_k requires k >= -1");
  if (ctx.dim()[v] == 0) throw Error("S_k^v requires d_v != 0");
  const Rational scale = -factorial(k + 1) / Rational(ctx.dim()[v]);
  return scale * apply_R(-1, tau_or_dim(v, k + 1, ctx.dim()) * p, ctx);
}

DescPoly apply_Lwt0(const DescPoly& p, const VirContext& ctx) {
  DescPoly r;
  DescPoly lowered = p;  // R_{-1}^{j+1} p
  for (Int j = -1; !lowered.is_zero(); ++j) {
    const Rational scale = Rational(sign_power(j)) / factorial(j + 1);
    r += scale * apply_L(j, lowered, ctx);
    lowered = apply_R(-1, lowered, ctx);
  }
  return r;
}

DescPoly framed_T_class(Int k, const VirContext& ctx, FramedConvention c) {
  if (!ctx.framing()) throw Error("framed operators require a framing vector");
  DescPoly r = T_class(k, ctx);
  if (k >= 0) r -= factorial(k) * tau_framing(k, ctx);
  if (k == 0 && c == FramedConvention::WithDelta) r += DescPoly(1);
  return r;
}

DescPoly apply_framed_L(Int k, const DescPoly& p, const VirContext& ctx, FramedConvention c) {
  return apply_R(k, p, ctx) + p * framed_T_class(k, ctx, c);
}

DescPoly zeta(const DescPoly& p, const Quiver& framed) {
  if (framed.vertex_count() == 0 || framed.name(0) != kInfinityVertex || !framed.is_frozen(0))
    throw Error("zeta requires a quiver framed at ∞");
  return p.transform([](const Monomial& m) {
    std::vector<Monomial::Factor> f;
    for (const auto& [g, e] : m.factors()) {
      if (g.slot == 0) return DescPoly();
      f.emplace_back(Generator{g.slot - 1, g.level}, e);
    }
    return DescPoly(Monomial::from_factors(std::move(f)));
  });
}

DescPoly reindex(const DescPoly& p, const std::vector<std::size_t>& slot_map) {
  return p.transform([&](const Monomial& m) {
    std::vector<Monomial::Factor> f;
    for (const auto& [g, e] : m.factors()) {
      if (g.slot >= slot_map.size()) throw Error("reindex: slot out of range");
      f.emplace_back(Generator{static_cast<std::uint32_t>(slot_map[g.slot]), g.level}, e);
    }
    return DescPoly(Monomial::from_factors(std::move(f)));
  });
}

}  // namespace quivir
