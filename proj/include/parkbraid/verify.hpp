#pragma once

// Exhaustive checks of every identity the library relies on, at a given n,
// grouped into suites.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "parkbraid/json_io.hpp"

namespace parkbraid {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  Json counterexample;  // null when passed
};

struct VerifyReport {
  int n = 0;
  std::string suite;
  bool fault_injected = false;
  std::vector<CheckResult> checks;

  bool passed() const;
  Json to_json() const;
};

/// Suites: all, bijection, braid, quiver, noncrossing. Some checks only run
/// below a size cap and are skipped (not listed) above it. Throws
/// Error("unknown_suite").
VerifyReport run_verify(int n, std::string_view suite);

/// Seifert form expanded bilinearly from its values on simple roots.
int seifert_bilinear(const Root& a, const Root& b);

}  // namespace parkbraid
