#include "parkbraid/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace parkbraid {

namespace {

// Prefix length giving a few chunks per thread without making them tiny.
int chunk_prefix_length(int n) { return std::min(n, n >= 6 ? 2 : 1); }

void scan_block(int n, const std::vector<int>& prefix, const ParkingCheck& check, ScanReport& out) {
  ParkingEnumerator e(n, prefix);
  while (auto f = e.next()) {
    ++out.visited;
    std::optional<std::string> why;
    try {
      why = check(*f);
    } catch (const std::exception& ex) {
      why = std::string("exception: ") + ex.what();
    }
    if (why) {
      if (out.failures++ == 0) {
        out.first_failure.emplace(f->values().begin(), f->values().end());
        out.detail = std::move(*why);
      }
    }
  }
}

void merge_into(ScanReport& total, ScanReport& part) {
  total.visited += part.visited;
  if (part.failures > 0 && total.failures == 0) {
    total.first_failure = std::move(part.first_failure);
    total.detail = std::move(part.detail);
  }
  total.failures += part.failures;
}

std::string oracle_pair(const Root& a, const Root& b, std::uint64_t& mismatches) {
  const IntervalModule v(a), w(b);
  const int closed = hom_dim(v, w);
  const int solved = hom_dim_oracle(v, w);
  if (closed == solved) return {};
  ++mismatches;
  return "Hom(" + a.to_string() + ", " + b.to_string() + "): closed form " + std::to_string(closed) +
         ", oracle " + std::to_string(solved);
}

// Exceptions may not leave an OpenMP region; the one from the lowest index is
// rethrown after the loop.
template <class Body>
void parallel_for(long count, int chunk, Body body) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, chunk)
  for (long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

ScanReport scan_parking_serial(int n, const ParkingCheck& check) {
  ScanReport report;
  scan_block(n, {}, check, report);
  return report;
}

ScanReport scan_parking_parallel(int n, const ParkingCheck& check) {
  const auto prefixes = parking_prefixes(n, chunk_prefix_length(n));
  std::vector<ScanReport> parts(prefixes.size());
  const long chunks = static_cast<long>(prefixes.size());
  parallel_for(chunks, 1, [&](long c) { scan_block(n, prefixes[c], check, parts[c]); });
  ScanReport total;
  for (auto& p : parts) merge_into(total, p);
  return total;
}

std::vector<DistinguishedBasis> enumerate_recursive_parallel(int n) {
  if (n <= 1) return enumerate_recursive(n);
  const auto firsts = positive_roots(n);
  std::vector<std::vector<DistinguishedBasis>> parts(firsts.size());
  const long count = static_cast<long>(firsts.size());
  parallel_for(count, 1, [&](long i) { parts[i] = enumerate_with_first(firsts[i]); });
  std::vector<DistinguishedBasis> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

OrbitGraph orbit_graph_parallel(int n) {
  if (n < 2) throw Error("invalid_size", "orbit graphs need n >= 2");
  OrbitGraph g;
  g.n = n;
  g.nodes = enumerate_parking(n);
  const long count = static_cast<long>(g.nodes.size());
  std::vector<std::vector<OrbitEdge>> parts(g.nodes.size());
  parallel_for(count, 16, [&](long u) {
    const DistinguishedBasis a = reconstruct(g.nodes[u]);
    for (int k = 1; k < n; ++k) {
      for (Direction dir : {Direction::left, Direction::right}) {
        const ParkingFunction target = in_vector(mutate(a, k, dir));
        const auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), target);
        if (it == g.nodes.end() || *it != target) throw InternalError("orbit left PF_n at " + target.to_string());
        parts[u].push_back(OrbitEdge{static_cast<int>(u), static_cast<int>(it - g.nodes.begin()), k, dir});
      }
    }
  });
  for (auto& p : parts) g.edges.insert(g.edges.end(), p.begin(), p.end());
  return g;
}

OracleReport hom_oracle_serial(int n) {
  const auto roots = positive_roots(n);
  OracleReport report;
  for (const Root& a : roots) {
    for (const Root& b : roots) {
      ++report.pairs;
      auto msg = oracle_pair(a, b, report.mismatches);
      if (!msg.empty() && report.first_mismatch.empty()) report.first_mismatch = std::move(msg);
    }
  }
  return report;
}

OracleReport hom_oracle_parallel(int n) {
  const auto roots = positive_roots(n);
  const long count = static_cast<long>(roots.size());
  std::vector<OracleReport> parts(roots.size());
  parallel_for(count, 1, [&](long i) {
    for (const Root& b : roots) {
      ++parts[i].pairs;
      auto msg = oracle_pair(roots[i], b, parts[i].mismatches);
      if (!msg.empty() && parts[i].first_mismatch.empty()) parts[i].first_mismatch = std::move(msg);
    }
  });
  OracleReport total;
  for (auto& p : parts) {
    total.pairs += p.pairs;
    total.mismatches += p.mismatches;
    if (total.first_mismatch.empty()) total.first_mismatch = std::move(p.first_mismatch);
  }
  return total;
}

}  // namespace parkbraid
