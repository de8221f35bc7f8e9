#include <doctest.h>

#include "oracles.hpp"
#include "quivir/quiver.hpp"

using namespace quivir;

namespace {

Quiver single_vertex() { return QuiverBuilder().vertex("1").build(); }

std::vector<DimVector> small_vectors(std::size_t n, Int lo, Int hi) {
  std::vector<DimVector> out{DimVector::zeros(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<DimVector> next;
    for (const auto& v : out)
      for (Int x = lo; x <= hi; ++x) {
        DimVector w = v;
        w[i] = x;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("arrow matrices") {
  SUBCASE("A2") {
    auto m = adjacency_and_relation_matrices(preset("A2"));
    CHECK(m.adjacency == IntMatrix{{0, 1}, {0, 0}});
    CHECK(m.relation == IntMatrix{{0, 0}, {0, 0}});
  }
  SUBCASE("P2 with relations") {
    auto m = adjacency_and_relation_matrices(preset("P2"));
    CHECK(m.adjacency(0, 1) == 3);
    CHECK(m.adjacency(1, 2) == 3);
    CHECK(m.relation(0, 2) == 3);
    CHECK(m.adjacency(0, 2) == 0);
  }
  SUBCASE("single vertex") {
    auto m = adjacency_and_relation_matrices(single_vertex());
    CHECK(m.adjacency == IntMatrix{{0}});
    CHECK(m.relation == IntMatrix{{0}});
  }
}

TEST_CASE("todd matrix") {
  CHECK(todd_matrix(preset("A2")) == IntMatrix{{1, -1}, {0, 1}});

  const Quiver inf = frame_at_infinity(single_vertex(), DimVector({2}));
  const IntMatrix td = todd_matrix(inf);
  CHECK(td(0, 0) == 0);
  CHECK(td(0, 1) == -2);
  CHECK(td(1, 1) == 1);

  const Quiver fr = framify(single_vertex());
  CHECK(fr.name(0) == "(1)");
  CHECK(symmetrized_todd(fr) == IntMatrix{{0, -1}, {-1, 2}});
  CHECK(determinant(symmetrized_todd(fr)) == -1);
}

TEST_CASE("euler form") {
  const Quiver a2 = preset("A2");
  CHECK(euler_form(a2, DimVector({1, 0}), DimVector({0, 1})) == -1);
  CHECK(euler_form(preset("P2"), DimVector({1, 0, 0}), DimVector({0, 0, 1})) == 3);
  CHECK(chi_sym(a2, DimVector({1, 0}), DimVector({0, 1})) == -1);
}

TEST_CASE("euler form agrees with arrow counting") {
  for (const auto& name : preset_names()) {
    const Quiver q = preset(name);
    for (const Quiver& x : {q, framify(q)}) {
      const auto vectors = small_vectors(x.vertex_count(), -1, 1);
      for (std::size_t i = 0; i < vectors.size(); i += 3)
        for (std::size_t j = 0; j < vectors.size(); j += 5) {
          CAPTURE(name);
          CHECK(euler_form(x, vectors[i], vectors[j]) == oracle::euler_form(x, vectors[i], vectors[j]));
          CHECK(chi_sym(x, vectors[i], vectors[j]) ==
                euler_form(x, vectors[i], vectors[j]) + euler_form(x, vectors[j], vectors[i]));
        }
    }
  }
}

TEST_CASE("nondegeneracy") {
  CHECK_FALSE(is_nondegenerate(preset("Kronecker-2")));
  CHECK(is_nondegenerate(preset("A2")));
  CHECK(determinant(symmetrized_todd(preset("A2"))) == 3);
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    CHECK(is_nondegenerate(framify(preset(name))));
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  for (const auto& name : preset_names()) {
    const IntMatrix m = symmetrized_todd(framify(preset(name)));
    std::vector<std::vector<Int>> rows(m.size(), std::vector<Int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
    CHECK(determinant(m) == oracle::determinant(rows));
  }
}

TEST_CASE("frame at infinity") {
  const Quiver inf = frame_at_infinity(single_vertex(), DimVector({2}));
  REQUIRE(inf.vertex_count() == 2);
  CHECK(inf.name(0) == kInfinityVertex);
  CHECK(inf.is_frozen(0));
  CHECK_FALSE(inf.is_frozen(1));
  CHECK(inf.edges().size() == 2);

  const Quiver a2 = frame_at_infinity(preset("A2"), DimVector({0, 3}));
  const auto m = adjacency_and_relation_matrices(a2);
  CHECK(m.adjacency(0, 2) == 3);
  CHECK(m.adjacency(0, 1) == 0);

  CHECK_THROWS_AS(frame_at_infinity(single_vertex(), DimVector({0})), Error);
  CHECK_THROWS_AS(frame_at_infinity(single_vertex(), DimVector({-1})), Error);
  CHECK_THROWS_AS(frame_at_infinity(inf, DimVector({1, 1})), Error);
}

TEST_CASE("freeze collapse") {
  // A3 framed at both ends of a two-source configuration.
  Quiver q = QuiverBuilder()
                 .vertex("a", true)
                 .vertex("b", true)
                 .vertex("1")
                 .vertex("2")
                 .edge("a", "2")
                 .edge("b", "2", 2)
                 .edge("2", "1")
                 .build();
  const CollapsedQuiver c = freeze_collapse(q, DimVector({2, 3}));
  REQUIRE(c.quiver.vertex_count() == 3);
  CHECK(c.quiver.name(0) == kInfinityVertex);
  CHECK(c.infinity_dim == 5);
  const auto m = adjacency_and_relation_matrices(c.quiver);
  CHECK(m.adjacency(0, 2) == 2 + 3 * 2);
  CHECK(m.adjacency(2, 1) == 1);
  CHECK(c.translate(DimVector({2, 3, 1, 1})) == DimVector({5, 1, 1}));
  CHECK(c.moduli_class(DimVector({2, 3, 4, 5})) == DimVector({1, 4, 5}));

  SUBCASE("single frozen source keeps its shape") {
    Quiver s = QuiverBuilder().vertex("f", true).vertex("1").edge("f", "1").build();
    const CollapsedQuiver cs = freeze_collapse(s, DimVector({1}));
    CHECK(adjacency_and_relation_matrices(cs.quiver).adjacency == IntMatrix{{0, 1}, {0, 0}});
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(freeze_collapse(q, DimVector({0, 0})), Error);
    CHECK_THROWS_AS(freeze_collapse(preset("A2"), DimVector(std::vector<Int>{})), Error);
  }
}

TEST_CASE("framify") {
  const Quiver k = framify(preset("Kronecker-2"));
  REQUIRE(k.vertex_count() == 4);
  CHECK(k.names() == std::vector<std::string>{"(1)", "(2)", "1", "2"});
  CHECK(k.is_frozen(0));
  CHECK(k.is_frozen(1));
  const auto m = adjacency_and_relation_matrices(k);
  CHECK(m.adjacency(0, 2) == 1);
  CHECK(m.adjacency(1, 3) == 1);
  CHECK(m.adjacency(2, 3) == 2);

  const Quiver a1 = framify(preset("A1"));
  CHECK(a1.vertex_count() == 2);
  CHECK(a1.edges().size() == 1);
  CHECK(determinant(symmetrized_todd(a1)) == -1);
}

TEST_CASE("builder validation") {
  CHECK_THROWS_AS(QuiverBuilder().vertex("a").vertex("a").build(), Error);
  CHECK_THROWS_AS(QuiverBuilder().vertex("a b").build(), Error);
  CHECK_THROWS_AS(QuiverBuilder().vertex("a").edge("a", "z").build(), Error);
  CHECK_THROWS_AS(QuiverBuilder().vertex("a").edge("a", "a", 0).build(), Error);
  CHECK_THROWS_AS(QuiverBuilder().vertex("f", true).vertex("a").relation("f", "a").build(), Error);
  CHECK_NOTHROW(QuiverBuilder().vertex("f", true).vertex("a").relation("a", "f").build());
  CHECK(QuiverBuilder().vertex("a").vertex("b").edge("a", "b").build().is_acyclic());
  CHECK_FALSE(QuiverBuilder().vertex("a").vertex("b").edge("a", "b").edge("b", "a").build().is_acyclic());
}

TEST_CASE("presets") {
  for (const auto& name : preset_names()) CHECK_NOTHROW(preset(name));
  CHECK(preset("a_2") == preset("A2"));
  CHECK(preset("kronecker") == preset("Kronecker-2"));
  CHECK_THROWS_AS(preset("E8"), Error);
  CHECK(preset("P1xP1").relations().size() == 4);
}

TEST_CASE("quiver file round trip") {
  const std::string text =
      "# a framed A2\n"
      "vertex f frozen\n"
      "vertex 1\n"
      "vertex 2\n"
      "edge f 1 x2\n"
      "edge 1 2\n"
      "dim f 1\n"
      "dim 1 2\n"
      "frame 2 3\n";
  const QuiverFile file = parse_quiver_file(text);
  CHECK(file.quiver.vertex_count() == 3);
  CHECK(file.quiver.is_frozen(0));
  CHECK(file.dim == DimVector({1, 2, 0}));
  CHECK(file.frame == DimVector({0, 0, 3}));

  const QuiverFile again = parse_quiver_file(serialize_quiver_file(file));
  CHECK(again.quiver == file.quiver);
  CHECK(again.dim == file.dim);
  CHECK(again.frame == file.frame);

  for (const auto& name : preset_names()) {
    QuiverFile f{preset(name), std::nullopt, std::nullopt};
    CHECK(parse_quiver_file(serialize_quiver_file(f)).quiver == f.quiver);
  }
}

TEST_CASE("quiver file errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_quiver_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("vertex a\nbogus a\n") == 2);
  CHECK(line_of("vertex a\n\nedge a b\n") == 3);
  CHECK(line_of("vertex a\nedge a a x0\n") == 2);
  CHECK(line_of("vertex a\ndim a -1\n") == 2);
  CHECK(line_of("vertex a\ndim a 1\ndim a 2\n") == 3);
  CHECK(line_of("vertex a\nvertex a\n") == 2);
  CHECK(line_of("vertex a\ndim b 1\n") == 2);
}
