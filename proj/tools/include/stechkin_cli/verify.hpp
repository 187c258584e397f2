#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stechkin::cli {

enum class Suite { strong, weak, continuous, sparse, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Reproduction line for the first failure.
  std::string first_failure;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  // Test-only: reverses one inequality on the first trial.
  bool inject_failure = false;
};

// Runs the property checks of one suite (or all of them). Trial i of a
// property draws from an RNG seeded with (seed, property, i), so any single
// failure can be reproduced from the printed line.
std::vector<PropertyResult> run_verify(Suite s, const VerifyOptions& opts);

}  // namespace stechkin::cli
