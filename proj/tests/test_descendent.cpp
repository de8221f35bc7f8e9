#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quivir/descendent.hpp"

using namespace quivir;

namespace {

Quiver single_vertex() { return QuiverBuilder().vertex("v").build(); }

VirContext point_context(Int d) { return VirContext(single_vertex(), DimVector({d})); }

DescPoly random_poly(std::mt19937_64& rng, std::size_t slots, Int max_degree) {
  const auto monos = monomials_up_to_degree(static_cast<std::uint32_t>(slots), max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  DescPoly p;
  for (int i = 0; i < 3; ++i) p.add_term(monos[pick(rng)], coef(rng));
  return p;
}

DescPoly commutator_residual(Int n, Int m, const DescPoly& p, const VirContext& ctx) {
  DescPoly r = apply_L(n, apply_L(m, p, ctx), ctx) - apply_L(m, apply_L(n, p, ctx), ctx);
  if (n != m) r -= Rational(m - n) * apply_L(n + m, p, ctx);
  return r;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const DescPoly t1 = tau(0, 1), t2 = tau(0, 2);
  const DescPoly sq = t1 * t1;
  REQUIRE(sq.size() == 1);
  CHECK(sq.terms().begin()->first.exponent(Generator{0, 1}) == 2);
  CHECK(sq.terms().begin()->second == 1);
  CHECK(((t1 + t2) * DescPoly()).is_zero());
  CHECK((t1 - t1).is_zero());
  CHECK((t1 + t2) * (t1 - t2) == t1 * t1 - t2 * t2);
  CHECK((t1 * t2 * t2).terms().begin()->first.degree() == 5);
}

TEST_CASE("monomial enumeration") {
  // Partitions of 4 into parts with two colours.
  CHECK(monomials_of_degree(1, 4).size() == 5);
  CHECK(monomials_of_degree(2, 2).size() == 5);
  const auto upto = monomials_up_to_degree(2, 3);
  for (std::size_t i = 1; i < upto.size(); ++i) CHECK(upto[i - 1] < upto[i]);
  CHECK(upto.front().is_one());
}

TEST_CASE("R operators") {
  const VirContext ctx = point_context(3);
  CHECK(apply_R(1, tau(0, 2), ctx) == 6 * tau(0, 3));
  CHECK(apply_R(-1, tau(0, 1), ctx) == DescPoly(3));
  const Quiver q = preset("A2");
  const VirContext a2(q, DimVector({1, 1}));
  CHECK(apply_R(0, tau(0, 1) * tau(1, 2), a2) == 3 * tau(0, 1) * tau(1, 2));
  CHECK_THROWS_AS(apply_R(-2, tau(0, 1), ctx), Error);

  for (Int k = -1; k <= 4; ++k)
    for (std::uint32_t i = 1; i <= 4; ++i) {
      const Int level = static_cast<Int>(i) + k;
      const DescPoly expected = level == 0 ? DescPoly(3) : Rational(oracle::rising(i, k)) * tau(0, level);
      CHECK(apply_R(k, tau(0, i), ctx) == expected);
    }
}

TEST_CASE("T classes") {
  for (Int d : {1, 2, 5}) {
    const VirContext ctx = point_context(d);
    CHECK(T_class(1, ctx) == Rational(2 * d) * tau(0, 1));
    CHECK(T_class(0, ctx) == DescPoly(d * d));
    CHECK(T_class(-1, ctx).is_zero());
  }
  const Quiver inf = frame_at_infinity(single_vertex(), DimVector({2}));
  for (Int d : {1, 3}) {
    const VirContext ctx(inf, DimVector({1, d}));
    CHECK(T_class(0, ctx) == DescPoly(d * d - 2 * d + 1));
  }
}

TEST_CASE("L, S and the weight-zero operator") {
  CHECK(apply_L(0, tau(0, 1), point_context(1)) == 2 * tau(0, 1));

  const VirContext ctx = point_context(4);
  CHECK(apply_S(0, 0, DescPoly(1), ctx) == DescPoly(-1));
  CHECK(apply_S(1, 0, DescPoly(1), ctx) == ratio(-2, 4) * tau(0, 1));
  CHECK(apply_S(3, 0, DescPoly(), ctx).is_zero());
  CHECK_THROWS_AS(apply_S(0, 0, DescPoly(1), point_context(0)), Error);

  for (Int d : {1, 2, 3}) CHECK(apply_Lwt0(tau(0, 1), point_context(d)) == DescPoly(d * d * d - d));
  CHECK(apply_Lwt0(DescPoly(1), point_context(2)).is_zero());
}

TEST_CASE("framed T classes") {
  const Quiver q = single_vertex();
  CHECK(framed_T_class(0, VirContext(q, DimVector({1}), DimVector({2}))) == DescPoly(-1));
  const VirContext ctx(q, DimVector({1}), DimVector({3}));
  CHECK(framed_T_class(1, ctx) == -tau(0, 1));
  CHECK(apply_framed_L(1, tau(0, 1), ctx) == 2 * tau(0, 2) - tau(0, 1) * tau(0, 1));
  CHECK(framed_T_class(2, ctx) == tau(0, 1) * tau(0, 1) - 2 * tau(0, 2));
  CHECK(framed_T_class(0, ctx, FramedConvention::WithDelta) == framed_T_class(0, ctx) + DescPoly(1));
  CHECK(framed_T_class(2, ctx, FramedConvention::WithDelta) == framed_T_class(2, ctx));
  CHECK(parse_convention(to_string(FramedConvention::WithDelta)) == FramedConvention::WithDelta);
  CHECK_THROWS_AS(parse_convention("delta"), Error);
}

TEST_CASE("zeta") {
  const Quiver inf = frame_at_infinity(single_vertex(), DimVector({2}));
  CHECK(zeta(tau(0, 2) * tau(1, 1), inf).is_zero());
  CHECK(zeta(tau(1, 1), inf) == tau(0, 1));
  CHECK(zeta(DescPoly(3) + tau(0, 1) * tau(0, 1), inf) == DescPoly(3));
  CHECK_THROWS_AS(zeta(tau(0, 1), preset("A2")), Error);
}

TEST_CASE("commutators hold on random polynomials") {
  std::mt19937_64 rng(7);
  for (const auto& [name, d] : std::vector<std::pair<std::string, std::vector<Int>>>{
           {"A1", {2}}, {"A2", {2, 1}}, {"Kronecker-2", {1, 1}}, {"P2", {1, 1, 1}}}) {
    const Quiver q = preset(name);
    const VirContext ctx(q, DimVector(d));
    for (int trial = 0; trial < 4; ++trial) {
      const DescPoly p = random_poly(rng, q.vertex_count(), 4);
      for (Int n = -1; n <= 2; ++n)
        for (Int m = -1; m <= 2; ++m) {
          CAPTURE(name);
          CAPTURE(n);
          CAPTURE(m);
          CHECK(commutator_residual(n, m, p, ctx).is_zero());
        }
    }
  }
}

TEST_CASE("framed commutators hold for nonnegative indices") {
  std::mt19937_64 rng(11);
  const VirContext ctx(preset("A2"), DimVector({1, 2}), DimVector({0, 3}));
  for (int trial = 0; trial < 4; ++trial) {
    const DescPoly p = random_poly(rng, 2, 4);
    for (Int n = 0; n <= 2; ++n)
      for (Int m = 0; m <= 2; ++m) {
        DescPoly r = apply_framed_L(n, apply_framed_L(m, p, ctx), ctx) -
                     apply_framed_L(m, apply_framed_L(n, p, ctx), ctx);
        if (n != m) r -= Rational(m - n) * apply_framed_L(n + m, p, ctx);
        CHECK(r.is_zero());
      }
  }
}

TEST_CASE("R and L are linear") {
  std::mt19937_64 rng(3);
  const VirContext ctx(preset("A2"), DimVector({1, 1}));
  for (int trial = 0; trial < 10; ++trial) {
    const DescPoly a = random_poly(rng, 2, 4), b = random_poly(rng, 2, 4);
    for (Int k = -1; k <= 3; ++k) {
      CHECK(apply_L(k, a + b, ctx) == apply_L(k, a, ctx) + apply_L(k, b, ctx));
      CHECK(apply_R(k, a * b, ctx) == apply_R(k, a, ctx) * b + a * apply_R(k, b, ctx));
    }
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(VirContext(preset("A2"), DimVector({1})), Error);
  CHECK_THROWS_AS(VirContext(preset("A2"), DimVector({1, -1})), Error);
  CHECK_NOTHROW(VirContext::with_class(preset("A2"), DimVector({1, -1})));
  CHECK_THROWS_AS(VirContext(preset("A2"), DimVector({1, 1}), DimVector({1})), Error);
}

TEST_CASE("descendent text format") {
  const Quiver q = QuiverBuilder().vertex("v1").vertex("v2").build();
  const DescPoly p = parse_desc_poly("3/2*t[2,v1]*t[1,v2] + t[1,v1]^2", q);
  CHECK(p == ratio(3, 2) * tau(0, 2) * tau(1, 1) + tau(0, 1) * tau(0, 1));
  CHECK(parse_desc_poly(format_desc_poly(p, q), q) == p);
  CHECK(format_desc_poly(DescPoly(), q) == "0");
  CHECK(format_desc_poly(DescPoly(1), q) == "1");
  CHECK(format_desc_poly(-tau(1, 3), q) == "-t[3,v2]");
  CHECK(parse_desc_poly("-2", q) == DescPoly(-2));
  CHECK_THROWS_AS(parse_desc_poly("t[1,v3]", q), Error);
  CHECK_THROWS_AS(parse_desc_poly("t[0,v1]", q), Error);
  CHECK_THROWS_AS(parse_desc_poly("t[1,v1", q), Error);
  CHECK_THROWS_AS(parse_desc_poly("2*", q), Error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    DescPoly r = random_poly(rng, 2, 5);
    r *= ratio(trial + 1, 7);
    CHECK(parse_desc_poly(format_desc_poly(r, q), q) == r);
  }
}

TEST_CASE("reindex") {
  const DescPoly p = tau(0, 1) * tau(1, 2);
  CHECK(reindex(p, {2, 0}) == tau(2, 1) * tau(0, 2));
}

TEST_CASE("weight-zero image is killed by R_-1") {
  std::mt19937_64 rng(13);
  for (const auto& [name, d] : std::vector<std::pair<std::string, std::vector<Int>>>{{"A1", {2}}, {"A2", {1, 2}}}) {
    const VirContext ctx(preset(name), DimVector(d));
    for (int trial = 0; trial < 10; ++trial) {
      const DescPoly p = random_poly(rng, ctx.quiver().vertex_count(), 4);
      CHECK(apply_R(-1, apply_Lwt0(p, ctx), ctx).is_zero());
    }
  }
}

TEST_CASE("framed T classes come from the quiver framed at infinity") {
  for (const auto& [d, n] : std::vector<std::pair<std::vector<Int>, std::vector<Int>>>{
           {{1, 2}, {0, 3}}, {{2, 1}, {1, 2}}}) {
    const Quiver q = preset("A2");
    const VirContext framed(q, DimVector(d), DimVector(n));
    const Quiver inf = frame_at_infinity(q, DimVector(n));
    const VirContext at_inf(inf, DimVector({1, d[0], d[1]}));
    for (Int k = 0; k <= 4; ++k) {
      const DescPoly delta = k == 0 ? DescPoly(1) : DescPoly();
      CHECK(framed_T_class(k, framed) == zeta(T_class(k, at_inf), inf) - delta);
    }
  }
}

TEST_CASE("L_k has degree k and L_wt0 degree -1") {
  const VirContext ctx(preset("A2"), DimVector({1, 1}));
  for (const auto& m : monomials_up_to_degree(2, 4))
    for (Int k = -1; k <= 3; ++k) {
      const DescPoly image = apply_L(k, DescPoly(m), ctx);
      for (const auto& [mono, c] : image.terms()) CHECK(mono.degree() == m.degree() + k);
      const DescPoly wt0 = apply_Lwt0(DescPoly(m), ctx);
      for (const auto& [mono, c] : wt0.terms()) CHECK(mono.degree() == m.degree() - 1);
    }
}
