#pragma once

// Exhaustive scans and enumerations with an OpenMP version and a serial
// reference. Both versions return identical results; the parallel ones
// split the work into fixed chunks and merge them in chunk order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parkbraid/braid.hpp"
#include "parkbraid/quiver.hpp"

namespace parkbraid {

/// Returns a description of the failure, or nullopt if `f` passes.
using ParkingCheck = std::function<std::optional<std::string>(const ParkingFunction&)>;

struct ScanReport {
  std::uint64_t visited = 0;
  std::uint64_t failures = 0;
  /// Lexicographically first failing input and its description.
  std::optional<std::vector<int>> first_failure;
  std::string detail;

  bool operator==(const ScanReport&) const = default;
};

/// Runs `check` on every parking function of size n. Exceptions thrown by
/// `check` count as failures.
ScanReport scan_parking_serial(int n, const ParkingCheck& check);
ScanReport scan_parking_parallel(int n, const ParkingCheck& check);

std::vector<DistinguishedBasis> enumerate_recursive_parallel(int n);

OrbitGraph orbit_graph_parallel(int n);

struct OracleReport {
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;

  bool operator==(const OracleReport&) const = default;
};

/// hom_dim against hom_dim_oracle on all ordered pairs of positive roots.
OracleReport hom_oracle_serial(int n);
OracleReport hom_oracle_parallel(int n);

int max_threads();

}  // namespace parkbraid
