#include "parkbraid/bijection.hpp"

#include <algorithm>
#include <numeric>

namespace parkbraid {

ParkingFunction in_vector(const DistinguishedBasis& a) {
  std::vector<int> values;
  values.reserve(a.roots().size());
  for (const Root& r : a.roots()) values.push_back(r.lo());
  return ParkingFunction(std::move(values));
}

DistinguishedBasis reconstruct(const ParkingFunction& f) {
  const int n = f.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int k, int l) {
    return f(k) != f(l) ? f(k) > f(l) : k > l;
  });

  std::vector<int> hi(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> later(static_cast<std::size_t>(n) + 2);
  std::vector<char> earlier(static_cast<std::size_t>(n) + 2);
  for (int k : order) {
    std::fill(later.begin(), later.end(), 0);
    std::fill(earlier.begin(), earlier.end(), 0);
    for (int i = 1; i <= n; ++i) {
      if (hi[i] == 0 || i == k) continue;
      auto& cover = i > k ? later : earlier;
      for (int s = f(i); s <= hi[i]; ++s) cover[s] = 1;
    }
    int c = f(k) - 1;
    while (c + 1 <= n && later[c + 1]) ++c;
    int b = c + 1;
    while (b + 1 <= n && earlier[b + 1]) ++b;
    if (b > n) throw InternalError("reconstruct ran past the axis for " + f.to_string());
    hi[k] = b;
  }

  std::vector<Root> roots;
  for (int k = 1; k <= n; ++k) roots.emplace_back(f(k), hi[k], n);
  return DistinguishedBasis::trusted(std::move(roots), n);
}

DistinguishedBasis reconstruct_geometric(const ParkingFunction& f) {
  const int n = f.size();
  const ParkingDiagram d = to_diagram(f);
  std::vector<Root> roots;
  for (int k = 1; k <= n; ++k) {
    const RayHit hit = walk_north_east(d, d.corner(k), [k](int l) { return l > k; });
    roots.emplace_back(f(k), hit.point.x, n);
  }
  return DistinguishedBasis::trusted(std::move(roots), n);
}

DistinguishedBasis reconstruct_permutation(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 2, 0);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v]) throw Error("not_permutation", "input is not a permutation of 1..n");
    seen[v] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<Root> roots;
  for (int k = 1; k <= n; ++k) {
    const int s = sigma[static_cast<std::size_t>(k - 1)];
    seen[s] = 1;
    int t = s;
    while (t + 1 <= n && seen[t + 1]) ++t;
    roots.emplace_back(s, t, n);
  }
  return DistinguishedBasis::trusted(std::move(roots), n);
}

}  // namespace parkbraid
