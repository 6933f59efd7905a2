#pragma once

// Identity suites behind `hgm verify`. Each suite walks a deterministic grid
// and records the worst residual; a suite passes when no instance exceeds
// its tolerance.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hgm::tools {

struct SuiteResult {
  std::string name;
  std::string statement;  // the identity checked, in one line
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  double worst_residual = 0;
  double tolerance = 0;
  // Worst residual of the identity as originally worded, where that wording
  // differs from the checked one; stated_failures counts instances where
  // it does not hold.
  std::optional<double> stated_residual;
  std::uint64_t stated_failures = 0;
  std::string note;

  bool passed() const noexcept { return failures == 0 && instances > 0; }
};

struct Grid {
  std::vector<std::uint32_t> fields;  // field sizes q
  std::uint64_t seed = 20240601;
};

// Prime powers in [lo, hi].
std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi);

Grid default_grid(std::uint32_t q_max);

struct SuiteInfo {
  std::string name;
  std::function<SuiteResult(const Grid&)> run;
};

const std::vector<SuiteInfo>& all_suites();

}  // namespace hgm::tools
