#include "parkbraid/dbasis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace parkbraid {

namespace {

std::string pos(int i) { return "a_" + std::to_string(i); }

// Fraction-free Gaussian elimination on the 0/1 interval matrix.
bool independent(std::span<const Root> roots, int n) {
  std::vector<std::vector<long long>> m(roots.size(), std::vector<long long>(n, 0));
  for (std::size_t r = 0; r < roots.size(); ++r) {
    for (int i = roots[r].lo(); i <= roots[r].hi(); ++i) m[r][static_cast<std::size_t>(i - 1)] = 1;
  }
  const int rows = static_cast<int>(m.size());
  long long prev = 1;
  int rank = 0;
  for (int c = 0; c < n && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < n; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank == rows;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

BasisDefect defect(DefectKind kind, int first, int second, std::string message) {
  return BasisDefect{kind, first, second, std::move(message)};
}

}  // namespace

const char* to_string(DefectKind kind) {
  switch (kind) {
    case DefectKind::wrong_length: return "wrong_length";
    case DefectKind::rank_mismatch: return "rank_mismatch";
    case DefectKind::dependent: return "dependent";
    case DefectKind::seifert: return "seifert";
    case DefectKind::crossing: return "crossing";
    case DefectKind::arc_left_nesting: return "arc_left_nesting";
    case DefectKind::arc_right_nesting: return "arc_right_nesting";
    case DefectKind::arc_touching: return "arc_touching";
    case DefectKind::arc_cycle: return "arc_cycle";
  }
  return "?";
}

bool check_arc_conditions(const ArcDiagram& d, BasisDefect* out, ArcCheckOptions options) {
  auto fail = [&](DefectKind kind, int i, int j, const std::string& what) {
    if (out) *out = defect(kind, i, j, "arcs " + std::to_string(i) + " and " + std::to_string(j) + ": " + what);
    return false;
  };
  const int count = static_cast<int>(d.arcs.size());
  for (const Arc& a : d.arcs) {
    if (!(0 <= a.left && a.left < a.right && a.right <= d.n)) {
      if (out) *out = defect(DefectKind::wrong_length, 0, 0, "arc endpoints outside the axis");
      return false;
    }
  }
  for (int i = 1; i <= count; ++i) {
    const Arc& p = d.arcs[static_cast<std::size_t>(i - 1)];
    for (int j = i + 1; j <= count; ++j) {
      const Arc& q = d.arcs[static_cast<std::size_t>(j - 1)];
      if ((p.left < q.left && q.left < p.right && p.right < q.right) ||
          (q.left < p.left && p.left < q.right && q.right < p.right)) {
        return fail(DefectKind::crossing, i, j, "arcs intersect");
      }
      if (options.nesting && p.left == q.left && !(q.right < p.right)) {
        return fail(DefectKind::arc_left_nesting, i, j, "same left end, inner arc has the smaller label");
      }
      if (options.nesting && p.right == q.right && !(p.left > q.left)) {
        return fail(DefectKind::arc_right_nesting, i, j, "same right end, inner arc has the bigger label");
      }
      if (options.touching && q.right == p.left) {
        return fail(DefectKind::arc_touching, j, i, "right end of the later arc is the left end of the earlier one");
      }
    }
  }
  if (options.acyclic) {
    DisjointSets sets(d.n + 1);
    for (int i = 1; i <= count; ++i) {
      const Arc& a = d.arcs[static_cast<std::size_t>(i - 1)];
      if (!sets.unite(a.left, a.right)) {
        if (out) *out = defect(DefectKind::arc_cycle, i, 0, "arc " + std::to_string(i) + " closes a cycle");
        return false;
      }
    }
  }
  return true;
}

std::variant<DistinguishedBasis, BasisDefect> validate(std::span<const Root> roots, int rank) {
  const int n = static_cast<int>(roots.size());
  if (n != rank) {
    return defect(DefectKind::wrong_length, 0, 0,
                  "expected " + std::to_string(rank) + " roots, got " + std::to_string(n));
  }
  for (int i = 1; i <= n; ++i) {
    if (roots[static_cast<std::size_t>(i - 1)].rank() != rank) {
      return defect(DefectKind::rank_mismatch, i, 0, pos(i) + " is not a root of A_" + std::to_string(rank));
    }
  }
  if (!independent(roots, rank)) {
    return defect(DefectKind::dependent, 0, 0, "roots are linearly dependent");
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int s = seifert(roots[static_cast<std::size_t>(j - 1)], roots[static_cast<std::size_t>(i - 1)]);
      if (s != 0) {
        return defect(DefectKind::seifert, j, i,
                      "seifert(" + pos(j) + ", " + pos(i) + ") = " + std::to_string(s));
      }
    }
  }
  ArcDiagram d{rank, {}};
  for (const Root& r : roots) d.arcs.push_back(Arc{r.lo() - 1, r.hi()});
  BasisDefect arc_defect;
  if (!check_arc_conditions(d, &arc_defect)) return arc_defect;
  return DistinguishedBasis(std::vector<Root>(roots.begin(), roots.end()), rank);
}

DistinguishedBasis DistinguishedBasis::from_roots(std::vector<Root> roots, int rank) {
  auto result = validate(roots, rank);
  if (auto* d = std::get_if<BasisDefect>(&result)) throw Error("invalid_basis", d->message);
  return std::get<DistinguishedBasis>(std::move(result));
}

DistinguishedBasis DistinguishedBasis::trusted(std::vector<Root> roots, int rank) {
  auto result = validate(roots, rank);
  if (auto* d = std::get_if<BasisDefect>(&result)) {
    std::string text;
    for (const Root& r : roots) text += r.to_string() + " ";
    throw InternalError("constructed roots " + text + "are not a distinguished basis: " + d->message);
  }
  return std::get<DistinguishedBasis>(std::move(result));
}

std::string DistinguishedBasis::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < roots_.size(); ++i) os << (i ? ", " : "") << roots_[i].to_string();
  os << ")";
  return os.str();
}

ArcDiagram to_arcs(const DistinguishedBasis& a) {
  ArcDiagram d{a.rank(), {}};
  for (const Root& r : a.roots()) d.arcs.push_back(Arc{r.lo() - 1, r.hi()});
  return d;
}

DistinguishedBasis from_arcs(const ArcDiagram& d) {
  if (static_cast<int>(d.arcs.size()) != d.n) {
    throw Error("invalid_arcs", "expected " + std::to_string(d.n) + " arcs");
  }
  BasisDefect why;
  if (!check_arc_conditions(d, &why)) throw Error("invalid_arcs", why.message);
  std::vector<Root> roots;
  for (const Arc& a : d.arcs) roots.emplace_back(a.left + 1, a.right, d.n);
  return DistinguishedBasis::trusted(std::move(roots), d.n);
}

std::vector<int> span(const DistinguishedBasis& a, int i) {
  const Root& ai = a.at(i);
  std::set<int> out;
  for (const Root& r : a.roots()) {
    if (r != ai && ai.lo() <= r.lo() && r.hi() <= ai.hi()) {
      for (int s = r.lo(); s <= r.hi(); ++s) out.insert(s);
    }
  }
  return {out.begin(), out.end()};
}

int gap(const DistinguishedBasis& a, int i) {
  const Root& ai = a.at(i);
  const auto covered = span(a, i);
  std::vector<int> rest;
  for (int s = ai.lo(); s <= ai.hi(); ++s) {
    if (!std::binary_search(covered.begin(), covered.end(), s)) rest.push_back(s);
  }
  if (rest.size() != 1) {
    throw InternalError("gap of " + pos(i) + " in " + a.to_string() + " has " +
                        std::to_string(rest.size()) + " elements");
  }
  return rest.front();
}

OrthogonalSplit right_orthogonal_basis(const Root& r) {
  const int n = r.rank(), k = r.lo(), m = r.hi();
  OrthogonalSplit out;
  for (int i = 1; i < k; ++i) out.first.push_back(Root::simple(i, n));
  if (m < n) out.first.emplace_back(k, m + 1, n);
  for (int i = m + 2; i <= n; ++i) out.first.push_back(Root::simple(i, n));
  for (int i = k + 1; i <= m; ++i) out.second.push_back(Root::simple(i, n));
  return out;
}

OrthogonalSplit left_orthogonal_basis(const Root& r) {
  const int n = r.rank(), k = r.lo(), m = r.hi();
  OrthogonalSplit out;
  for (int i = 1; i + 1 < k; ++i) out.first.push_back(Root::simple(i, n));
  if (k >= 2) out.first.emplace_back(k - 1, m, n);
  for (int i = m + 1; i <= n; ++i) out.first.push_back(Root::simple(i, n));
  for (int i = k; i < m; ++i) out.second.push_back(Root::simple(i, n));
  return out;
}

namespace {

using RootList = std::vector<std::pair<int, int>>;
// table[s] lists the bases of A_s as (lo, hi) pairs; table[0] holds the empty
// basis.
using Table = std::vector<std::vector<RootList>>;

std::vector<RootList> bases_with_first(const Table& table, int n, int k, int m) {
  const auto split = left_orthogonal_basis(Root(k, m, n));
  const auto lift = [](const std::vector<Root>& gens, const RootList& sub) {
    RootList out;
    for (auto [lo, hi] : sub) {
      out.emplace_back(gens[static_cast<std::size_t>(lo - 1)].lo(),
                       gens[static_cast<std::size_t>(hi - 1)].hi());
    }
    return out;
  };
  const int l = static_cast<int>(split.second.size());
  std::vector<RootList> out;
  for (const auto& b1 : table[split.first.size()]) {
    const auto m1 = lift(split.first, b1);
    for (const auto& b2 : table[static_cast<std::size_t>(l)]) {
      const auto m2 = lift(split.second, b2);
      // Shuffles: choose which of the n-1 later positions hold the second part.
      std::vector<char> mask(static_cast<std::size_t>(n - 1), 0);
      std::fill(mask.begin(), mask.begin() + l, 1);
      do {
        RootList seq{{k, m}};
        std::size_t i1 = 0, i2 = 0;
        for (char c : mask) seq.push_back(c ? m2[i2++] : m1[i1++]);
        out.push_back(std::move(seq));
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
  }
  return out;
}

Table table_below(int n) {
  Table table{{RootList{}}};
  for (int s = 1; s < n; ++s) {
    std::vector<RootList> all;
    for (int k = 1; k <= s; ++k) {
      for (int m = k; m <= s; ++m) {
        auto part = bases_with_first(table, s, k, m);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      }
    }
    table.push_back(std::move(all));
  }
  return table;
}

std::vector<DistinguishedBasis> materialize(int n, std::vector<RootList> lists) {
  std::vector<DistinguishedBasis> out;
  out.reserve(lists.size());
  std::set<RootList> seen;
  for (auto& list : lists) {
    if (!seen.insert(list).second) throw InternalError("recursive enumeration produced a duplicate");
    std::vector<Root> roots;
    for (auto [lo, hi] : list) roots.emplace_back(lo, hi, n);
    out.push_back(DistinguishedBasis::trusted(std::move(roots), n));
  }
  return out;
}

}  // namespace

std::vector<DistinguishedBasis> enumerate_with_first(const Root& first) {
  const int n = first.rank();
  return materialize(n, bases_with_first(table_below(n), n, first.lo(), first.hi()));
}

std::vector<DistinguishedBasis> enumerate_recursive(int n) {
  if (n < 0) throw Error("invalid_size", "rank must be nonnegative");
  if (n == 0) return {DistinguishedBasis::trusted({}, 0)};
  const Table table = table_below(n);
  std::vector<RootList> all;
  for (int k = 1; k <= n; ++k) {
    for (int m = k; m <= n; ++m) {
      auto part = bases_with_first(table, n, k, m);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return materialize(n, std::move(all));
}

}  // namespace parkbraid
