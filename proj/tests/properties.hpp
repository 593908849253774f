#pragma once

// Randomized property suites shared by the unit tests and the acceptance run.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

PropertyResult deglex_order(std::uint64_t seed, std::size_t cases);
PropertyResult subword_closure(std::uint64_t seed, std::size_t cases);
PropertyResult confluence(std::uint64_t seed, std::size_t cases);
PropertyResult reflection_closure(std::uint64_t seed, std::size_t cases);
PropertyResult parse_print_round_trip(std::uint64_t seed, std::size_t cases);
PropertyResult gv_round_trip(std::uint64_t seed, std::size_t cases);

std::vector<PropertyResult> all_properties(std::uint64_t seed, std::size_t cases);

}  // namespace testing
