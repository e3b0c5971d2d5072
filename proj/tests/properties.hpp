#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool ok() const { return cases > 0 && failures == 0; }
};

using SuiteFn = Outcome (*)(std::size_t cases, std::uint64_t seed);

struct Suite {
  const char* name;
  SuiteFn run;
  /// One of the six suites that acceptance criterion 8 names.
  bool required;
};

const std::vector<Suite>& suites();

/// Runs one suite by name with timing; throws std::out_of_range for unknown names.
Outcome run(const std::string& name, std::size_t cases = 200, std::uint64_t seed = 0x5eed);

}  // namespace props
