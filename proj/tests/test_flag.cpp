#include <doctest.h>

#include "oracles.hpp"
#include "quivir/flag.hpp"

using namespace quivir;

namespace {

DescPoly power(const DescPoly& p, Int e) {
  DescPoly r(1);
  for (Int i = 0; i < e; ++i) r = r * p;
  return r;
}

const std::vector<FlagShape>& shapes() {
  static const std::vector<FlagShape> s = {
      FlagShape({1}, 2), FlagShape({1}, 3),    FlagShape({1}, 4),       FlagShape({2}, 4),
      FlagShape({2}, 5), FlagShape({1, 2}, 3), FlagShape({1, 2, 3}, 4),
  };
  return s;
}

}  // namespace

TEST_CASE("shape parsing") {
  const FlagShape s = FlagShape::parse("1,2:4");
  CHECK(s.dims() == std::vector<Int>{1, 2});
  CHECK(s.ambient() == 4);
  CHECK(s.to_string() == "1,2:4");
  CHECK_THROWS_AS(FlagShape::parse("2,1:4"), Error);
  CHECK_THROWS_AS(FlagShape::parse("4:4"), Error);
  CHECK_THROWS_AS(FlagShape::parse("1:x"), Error);
  CHECK_THROWS_AS(FlagShape::parse("1,2"), Error);
  CHECK_THROWS_AS(FlagShape::parse("0:3"), Error);
}

TEST_CASE("dimensions and fixed points") {
  CHECK(dimension(FlagShape({1}, 5)) == 4);
  CHECK(dimension(FlagShape({2}, 4)) == 4);
  CHECK(dimension(FlagShape({1, 2}, 3)) == 3);
  CHECK(enumerate_fixed_points(FlagShape({1}, 2)).size() == 2);
  CHECK(enumerate_fixed_points(FlagShape({2}, 4)).size() == 6);
  CHECK(enumerate_fixed_points(FlagShape({1, 2}, 3)).size() == 6);
  CHECK(enumerate_fixed_points(FlagShape({1, 2, 3}, 4)).size() == 24);
  for (const auto& shape : shapes())
    for (const auto& fp : enumerate_fixed_points(shape))
      CHECK(static_cast<Int>(tangent_weights(fp, shape, default_weights(shape.ambient())).size()) == dimension(shape));
}

TEST_CASE("tangent weights") {
  const FlagShape p1({1}, 2);
  CHECK(tangent_weights(FixedPoint{{{1}}}, p1, {0, 1}) == std::vector<Int>{-1});
  CHECK(tangent_weights(FixedPoint{{{0}}}, p1, {0, 1}) == std::vector<Int>{1});
  std::vector<Int> w = tangent_weights(FixedPoint{{{1}}}, FlagShape({1}, 3), {0, 1, 2});
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<Int>{-1, 1});
  CHECK_THROWS_AS(tangent_weights(FixedPoint{{{1}}}, p1, {0, 1, 2}), Error);
}

TEST_CASE("small integrals") {
  const DescPoly t1 = tau(0, 1), t2 = tau(0, 2);
  CHECK(realize_and_integrate(t1, FlagShape({1}, 2)) == 1);
  CHECK(realize_and_integrate(t1 * t1, FlagShape({1}, 3)) == 1);
  CHECK(realize_and_integrate(t2, FlagShape({1}, 3)) == ratio(1, 2));
  CHECK(realize_and_integrate(power(t1, 4), FlagShape({2}, 4)) == 2);
  CHECK(realize_and_integrate(DescPoly(1), FlagShape({1}, 2)) == 0);
  CHECK(realize_and_integrate(t1 * t2, FlagShape({1}, 3)) == 0);
  CHECK_THROWS_AS(realize_and_integrate(t1, FlagShape({1}, 2), {1, 1}), Error);
  CHECK_THROWS_AS(realize_and_integrate(tau(1, 1), FlagShape({1}, 2)), Error);
}

TEST_CASE("projective space oracle") {
  CHECK(projective_space_oracle(2, tau(0, 1)) == 1);
  CHECK(projective_space_oracle(3, tau(0, 1) * tau(0, 2)) == 0);
  CHECK(projective_space_oracle(3, tau(0, 2)) == ratio(1, 2));
  for (Int n = 2; n <= 6; ++n)
    for (const auto& m : monomials_up_to_degree(1, n + 2)) {
      CAPTURE(n);
      CHECK(realize_and_integrate(DescPoly(m), FlagShape({1}, n)) == projective_space_oracle(n, DescPoly(m)));
    }
}

TEST_CASE("grassmannian top powers match Schubert calculus") {
  CHECK(oracle::schubert_sigma1_top(2, 4) == 2);
  for (Int n = 3; n <= 6; ++n)
    for (Int k = 1; k < n && k <= 3; ++k) {
      CAPTURE(k);
      CAPTURE(n);
      const Rational pieri = oracle::schubert_sigma1_top(k, n);
      CHECK(pieri == oracle::rectangle_tableaux(k, n - k));
      CHECK(realize_and_integrate(power(tau(0, 1), k * (n - k)), FlagShape({k}, n)) == pieri);
    }
}

TEST_CASE("integrals do not depend on the weights") {
  for (const auto& shape : shapes()) {
    const WeightVector shifted = [&] {
      WeightVector w = default_weights(shape.ambient());
      for (auto& x : w) x = 3 * x + 5;
      return w;
    }();
    for (const auto& m : monomials_of_degree(static_cast<std::uint32_t>(shape.steps()), dimension(shape))) {
      const Rational a = realize_and_integrate(DescPoly(m), shape, default_weights(shape.ambient()));
      CHECK(a == realize_and_integrate(DescPoly(m), shape, alternate_weights(shape.ambient())));
      CHECK(a == realize_and_integrate(DescPoly(m), shape, shifted));
    }
  }
}

TEST_CASE("framed constraints") {
  CHECK(framed_virasoro_residual(FlagShape({1}, 2), 1, tau(0, 1)) == 0);
  CHECK(framed_virasoro_residual(FlagShape({1}, 3), 1, tau(0, 1)) == 0);
  CHECK(framed_virasoro_residual(FlagShape({1}, 3), 2, DescPoly(1)) == 0);
  CHECK(framed_virasoro_residual(FlagShape({1}, 2), 0, tau(0, 1), FramedConvention::WithDelta) == 1);
  for (const auto& shape : {FlagShape({1}, 3), FlagShape({1, 2}, 3)})
    for (Int k = 0; k <= 3; ++k)
      for (const auto& m : monomials_up_to_degree(static_cast<std::uint32_t>(shape.steps()), dimension(shape))) {
        CHECK(framed_virasoro_residual(shape, k, DescPoly(m)) == 0);
        CHECK(weight_zero_residual(shape, DescPoly(m)) == 0);
      }
}

TEST_CASE("dimension equals minus chi on the quiver framed at infinity") {
  for (const auto& shape : shapes()) {
    const Quiver inf = frame_at_infinity(flag_quiver(shape), flag_framing(shape));
    std::vector<Int> d{1};
    for (Int x : shape.dims()) d.push_back(x);
    CHECK(dimension(shape) == -oracle::euler_form(inf, DimVector(d), DimVector(d)));
  }
}
