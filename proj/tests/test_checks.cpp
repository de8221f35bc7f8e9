#include <doctest.h>

#include <json.hpp>

#include "quivir/checks.hpp"

using namespace quivir;

namespace {

std::vector<std::string> lines(const std::vector<CheckReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(to_json_line(r));
  return out;
}

CheckSpec small(const std::string& suite) {
  CheckSpec spec;
  spec.suite = suite;
  spec.timing = false;
  if (suite == "framed" || suite == "wt0") {
    spec.flags = {FlagShape({1}, 3)};
  } else {
    spec.quiver = preset("A1");
    spec.dim = DimVector({1});
  }
  spec.kmax = 2;
  spec.samples = 10;
  return spec;
}

}  // namespace

TEST_CASE("every suite passes on a small configuration") {
  for (const auto& suite : suite_names()) {
    CAPTURE(suite);
    const auto reports = run(small(suite));
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) {
      CAPTURE(r.case_id);
      CHECK(r.pass);
      CHECK(r.residual == "0");
      CHECK(r.suite == suite);
    }
  }
}

TEST_CASE("reports are independent of the worker count") {
  for (const std::string suite : {"commutators", "va-axioms", "framed"}) {
    CheckSpec one = small(suite), three = small(suite);
    three.jobs = 3;
    CHECK(lines(run(one)) == lines(run(three)));
  }
}

TEST_CASE("delta convention audit fails with residual 1") {
  CheckSpec spec = small("framed");
  spec.flags = {FlagShape({1}, 2)};
  spec.kmax = 0;
  spec.convention = FramedConvention::WithDelta;
  std::size_t failures = 0;
  for (const auto& r : run(spec))
    if (!r.pass) {
      ++failures;
      CHECK(r.residual == "1");
    }
  CHECK(failures == 1);
}

TEST_CASE("json lines") {
  CheckReport r{"framed", "1:3 k=1 t[1,1]", false, "-1/2", 3.5};
  const auto j = nlohmann::json::parse(to_json_line(r));
  CHECK(j["suite"] == "framed");
  CHECK(j["case"] == "1:3 k=1 t[1,1]");
  CHECK(j["status"] == "fail");
  CHECK(j["residual"] == "-1/2");
  CHECK(j["ms"].get<double>() == doctest::Approx(3.5));
  CHECK(to_json_line(r).find('\n') == std::string::npos);
}

TEST_CASE("incomplete configurations are rejected") {
  CheckSpec spec;
  spec.suite = "commutators";
  CHECK_THROWS_AS(build_cases(spec), Error);
  spec.suite = "framed";
  CHECK_THROWS_AS(build_cases(spec), Error);
  spec.suite = "nonsense";
  CHECK_THROWS_AS(build_cases(spec), Error);
  CheckSpec deg = small("va-axioms");
  deg.quiver = preset("Kronecker-2");
  deg.dim = DimVector({1, 1});
  CHECK_NOTHROW(build_cases(deg));
}
