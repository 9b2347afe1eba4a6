#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tecno {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Randomized and exhaustive property suites behind the `verify` verb:
/// sign property, entropy-conservation identity, cube inequality,
/// semi-discrete entropy-rate identity. Deterministic for a given seed.
std::vector<PropertyResult> run_property_suites(std::uint64_t seed);

}  // namespace tecno
