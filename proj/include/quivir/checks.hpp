#pragma once

// Verification suites shared by the command line driver and the acceptance
// binary.  Every suite expands into independent cases that run on a worker pool;
// reports come back in case order regardless of the number of workers.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quivir/descendent.hpp"
#include "quivir/flag.hpp"
#include "quivir/quiver.hpp"

namespace quivir {

struct CheckSpec {
  std::string suite;
  std::optional<Quiver> quiver;
  std::optional<DimVector> dim;
  std::optional<DimVector> framing;
  std::vector<FlagShape> flags;
  Int kmax = 3;
  /// commutators and duality: absolute degree bound.  framed and wt0: when
  /// set, absolute bound; otherwise dim + 3.
  std::optional<Int> degmax;
  FramedConvention convention = FramedConvention::NoDelta;
  unsigned jobs = 1;
  std::size_t samples = 200;
  std::uint64_t seed = 20240611;
  bool timing = true;
};

struct CheckReport {
  std::string suite;
  std::string case_id;
  bool pass = false;
  std::string residual;  ///< "0" on success for equality checks
  double ms = 0;
};

struct CheckCase {
  std::string id;
  /// Returns the residual; a case passes iff the residual is "0".
  std::function<std::string()> run;
};

std::vector<std::string> suite_names();

/// Expands a spec into its cases; throws Error for incomplete specs.
std::vector<CheckCase> build_cases(const CheckSpec& spec);

/// Runs cases on `jobs` workers; the result is in case order.
std::vector<CheckReport> run_cases(const std::string& suite, const std::vector<CheckCase>& cases, unsigned jobs,
                                   bool timing = true);

std::vector<CheckReport> run(const CheckSpec& spec);

/// {"suite":..,"case":..,"status":"pass"|"fail","residual":..,"ms":..}
std::string to_json_line(const CheckReport& r);

}  // namespace quivir
