// quivir: batch verifier for quiver Virasoro identities.
//
//   quivir check commutators --preset A2 --dim 1,1 --kmax 3 --degmax 6
//   quivir check framed --flag 1:3 --kmax 3
//   quivir integrate "t[1,1]^4" --flag 2:4

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "quivir/checks.hpp"
#include "quivir/flag.hpp"

using namespace quivir;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

DimVector parse_csv(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(std::string("bad entry '") + item + "' in " + what);
    }
  }
  if (expected && v.size() != expected)
    throw Error(std::string(what) + " needs " + std::to_string(expected) + " entries, got " + std::to_string(v.size()));
  return DimVector(v);
}

void print_summary(const std::vector<CheckReport>& reports) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_suite;
  for (const auto& r : reports) {
    auto& [pass, fail] = by_suite[r.suite];
    (r.pass ? pass : fail)++;
  }
  std::cerr << std::left << std::setw(14) << "suite" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
            << '\n';
  for (const auto& [suite, counts] : by_suite)
    std::cerr << std::left << std::setw(14) << suite << std::right << std::setw(8) << counts.first << std::setw(8)
              << counts.second << '\n';
  for (const auto& r : reports)
    if (!r.pass) std::cerr << "FAIL " << r.suite << " [" << r.case_id << "] residual " << r.residual << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for quiver Virasoro constraints and lattice vertex algebras"};
  app.require_subcommand(1);

  std::string quiver_file, preset_name, dim_csv, frame_csv, convention = "no-delta", report_path;
  std::vector<std::string> flag_texts;
  Int kmax = 3;
  Int degmax = -1;
  unsigned jobs = 1;
  std::size_t samples = 200;
  std::uint64_t seed = CheckSpec{}.seed;
  bool no_timing = false;

  auto* check = app.add_subcommand("check", "run a verification suite");
  std::string suite;
  check->add_option("suite", suite, "commutators | framed | duality | va-axioms | bracket | wt0")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  auto* qopt = check->add_option("--quiver", quiver_file, "quiver text file")->check(CLI::ExistingFile);
  check->add_option("--preset", preset_name, "built-in quiver")->excludes(qopt);
  check->add_option("--dim", dim_csv, "dimension vector, comma separated");
  check->add_option("--frame", frame_csv, "framing vector, comma separated");
  check->add_option("--flag", flag_texts, "flag shape DIMS:N, repeatable");
  check->add_option("--kmax", kmax, "largest Virasoro index")->check(CLI::NonNegativeNumber);
  check->add_option("--degmax", degmax, "largest monomial degree");
  check->add_option("--convention", convention, "framed T-operator convention")
      ->check(CLI::IsMember({"no-delta", "paper-delta"}));
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  check->add_option("--samples", samples, "sampled cases for the lattice suites");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--report", report_path, "write the JSON lines here instead of stdout");
  check->add_flag("--no-timing", no_timing, "report ms as 0 for byte-stable output");

  auto* integrate = app.add_subcommand("integrate", "integrate a descendent polynomial over a flag variety");
  std::string expr, flag_text;
  integrate->add_option("expr", expr, "polynomial, e.g. 3/2*t[2,1]*t[1,2] + t[1,1]^2")->required();
  integrate->add_option("--flag", flag_text, "flag shape DIMS:N")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (integrate->parsed()) {
      FlagShape shape = FlagShape::parse(flag_text);
      DescPoly p = parse_desc_poly(expr, flag_quiver(shape));
      std::cout << to_string(realize_and_integrate(p, shape)) << '\n';
      return 0;
    }

    CheckSpec spec;
    spec.suite = suite;
    if (!quiver_file.empty()) {
      QuiverFile file = parse_quiver_file(read_file(quiver_file));
      spec.quiver = file.quiver;
      spec.dim = file.dim;
      spec.framing = file.frame;
    } else if (!preset_name.empty()) {
      spec.quiver = preset(preset_name);
    }
    const std::size_t n = spec.quiver ? spec.quiver->vertex_count() : 0;
    if (!dim_csv.empty()) spec.dim = parse_csv(dim_csv, n, "--dim");
    if (!frame_csv.empty()) spec.framing = parse_csv(frame_csv, n, "--frame");
    for (const auto& f : flag_texts) spec.flags.push_back(FlagShape::parse(f));
    spec.kmax = kmax;
    if (degmax >= 0) spec.degmax = degmax;
    spec.convention = parse_convention(convention);
    spec.jobs = jobs;
    spec.samples = samples;
    spec.seed = seed;
    spec.timing = !no_timing;

    auto reports = run(spec);
    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!report_path.empty()) {
      file_out.open(report_path);
      if (!file_out) throw Error("cannot write '" + report_path + "'");
      out = &file_out;
    }
    bool ok = true;
    for (const auto& r : reports) {
      *out << to_json_line(r) << '\n';
      ok = ok && r.pass;
    }
    print_summary(reports);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
