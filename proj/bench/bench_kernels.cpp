// Serial vs OpenMP timings of the exhaustive kernels.
//   bench_kernels [n]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <string>

#include "parkbraid/bijection.hpp"
#include "parkbraid/kernels.hpp"

using namespace parkbraid;

namespace {

double seconds(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool all_same = true;

void row(const char* name, double serial, double parallel, bool same) {
  all_same = all_same && same;
  std::printf("%-22s %10.3f %10.3f %7.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 7;
  if (n < 1 || n > 9) {
    std::fprintf(stderr, "usage: bench_kernels [n], 1 <= n <= 9\n");
    return 2;
  }
  std::printf("n = %d, threads = %d\n", n, max_threads());
  std::printf("%-22s %10s %10s %8s\n", "kernel", "serial s", "openmp s", "speedup");

  const ParkingCheck roundtrip = [](const ParkingFunction& f) -> std::optional<std::string> {
    if (in_vector(reconstruct(f)) != f) return "round trip";
    return std::nullopt;
  };
  ScanReport rs, rp;
  const double s1 = seconds([&] { rs = scan_parking_serial(n, roundtrip); });
  const double p1 = seconds([&] { rp = scan_parking_parallel(n, roundtrip); });
  row("scan roundtrip", s1, p1, rs == rp);

  OracleReport os, op;
  const int m = n + 2;
  const double s2 = seconds([&] { os = hom_oracle_serial(m); });
  const double p2 = seconds([&] { op = hom_oracle_parallel(m); });
  row(("hom oracle n=" + std::to_string(m)).c_str(), s2, p2, os == op);

  const int r = std::min(n, 6);
  std::vector<DistinguishedBasis> es, ep;
  const double s3 = seconds([&] { es = enumerate_recursive(r); });
  const double p3 = seconds([&] { ep = enumerate_recursive_parallel(r); });
  std::sort(es.begin(), es.end());
  std::sort(ep.begin(), ep.end());
  row(("recursive n=" + std::to_string(r)).c_str(), s3, p3, es == ep);
  return all_same ? 0 : 1;
}
