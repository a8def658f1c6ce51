#include "parkbraid/quiver.hpp"

#include <boost/rational.hpp>

namespace parkbraid {

namespace {

using Q = boost::rational<long long>;

int matrix_rank(std::vector<std::vector<Q>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].numerator() == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].numerator() == 0) continue;
      const Q t = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= t * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

std::vector<int> IntervalModule::dimension_vector() const {
  std::vector<int> d(static_cast<std::size_t>(rank()), 0);
  for (int i = interval_.lo(); i <= interval_.hi(); ++i) d[i - 1] = 1;
  return d;
}

std::vector<IntervalModule> modules_of(const DistinguishedBasis& a) { return modules_of(a.roots()); }

std::vector<IntervalModule> modules_of(std::span<const Root> roots) {
  std::vector<IntervalModule> out;
  for (const Root& r : roots) out.emplace_back(r);
  return out;
}

Representation materialize(const IntervalModule& v) {
  Representation rep;
  rep.dims = v.dimension_vector();
  const int n = v.rank();
  for (int i = 1; i < n; ++i) {
    const int rows = rep.dims[i];
    const int cols = rep.dims[i - 1];
    std::vector<std::vector<int>> map(static_cast<std::size_t>(rows), std::vector<int>(cols, 0));
    if (rows == 1 && cols == 1) map[0][0] = 1;
    rep.arrows.push_back(std::move(map));
  }
  return rep;
}

int euler(const IntervalModule& v, const IntervalModule& w) { return seifert(v.root(), w.root()); }

int hom_dim(const IntervalModule& v, const IntervalModule& w) {
  const Root& a = v.root();
  const Root& b = w.root();
  if (a.rank() != b.rank()) throw Error("rank_mismatch", "modules over different quivers");
  return b.lo() <= a.lo() && a.lo() <= b.hi() && b.hi() <= a.hi() ? 1 : 0;
}

int ext_dim(const IntervalModule& v, const IntervalModule& w) {
  const int e = hom_dim(v, w) - euler(v, w);
  if (e < 0) {
    throw InternalError("negative Ext^1 between " + v.root().to_string() + " and " + w.root().to_string());
  }
  return e;
}

int hom_dim_oracle(const Representation& v, const Representation& w) {
  const std::size_t n = v.dims.size();
  if (w.dims.size() != n) throw Error("rank_mismatch", "representations over different quivers");
  // Unknown phi_i is a w.dims[i] x v.dims[i] block, numbered row-major.
  std::vector<int> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + w.dims[i] * v.dims[i];
  const int unknowns = offset[n];
  auto var = [&](std::size_t i, int r, int c) { return offset[i] + r * v.dims[i] + c; };

  std::vector<std::vector<Q>> eqs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& va = v.arrows[i];
    const auto& wa = w.arrows[i];
    // (W_a phi_i - phi_{i+1} V_a)[r][c] = 0
    for (int r = 0; r < w.dims[i + 1]; ++r) {
      for (int c = 0; c < v.dims[i]; ++c) {
        std::vector<Q> row(static_cast<std::size_t>(unknowns), Q(0));
        for (int s = 0; s < w.dims[i]; ++s) row[var(i, s, c)] += wa[r][s];
        for (int t = 0; t < v.dims[i + 1]; ++t) row[var(i + 1, r, t)] -= va[t][c];
        eqs.push_back(std::move(row));
      }
    }
  }
  return unknowns - matrix_rank(std::move(eqs));
}

int hom_dim_oracle(const IntervalModule& v, const IntervalModule& w) {
  return hom_dim_oracle(materialize(v), materialize(w));
}

bool is_submodule(const IntervalModule& v, const IntervalModule& w) {
  return hom_dim(v, w) == 1 && v.root().hi() == w.root().hi();
}

bool is_quotient(const IntervalModule& v, const IntervalModule& w) {
  return hom_dim(v, w) == 1 && v.root().lo() == w.root().lo();
}

bool is_exceptional_sequence(std::span<const IntervalModule> e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (hom_dim(e[i], e[i]) != 1 || ext_dim(e[i], e[i]) != 0) return false;
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (hom_dim(e[j], e[i]) != 0 || ext_dim(e[j], e[i]) != 0) return false;
    }
  }
  return true;
}

HomExtTable hom_ext_table(std::span<const IntervalModule> e) {
  HomExtTable t;
  for (const auto& v : e) {
    std::vector<int> hom_row, ext_row;
    for (const auto& w : e) {
      hom_row.push_back(hom_dim(v, w));
      ext_row.push_back(ext_dim(v, w));
    }
    t.hom.push_back(std::move(hom_row));
    t.ext.push_back(std::move(ext_row));
  }
  return t;
}

std::vector<DiagramRuleFailure> check_diagram_rules(std::span<const IntervalModule> e) {
  std::vector<Root> roots;
  for (const auto& m : e) roots.push_back(m.root());
  const int n = static_cast<int>(roots.size());
  const DistinguishedBasis basis = DistinguishedBasis::from_roots(roots, n);
  const ParkingDiagram d = to_diagram(in_vector(basis));

  std::vector<DiagramPoint> p(static_cast<std::size_t>(n) + 1);
  std::vector<RayHit> ray(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    p[k] = d.corner(k);
    ray[k] = walk_north_east(d, p[k], [k](int l) { return l > k; });
  }
  const auto north_east = [&](int from, int to) {
    return p[to].x > p[from].x && p[to].x - p[from].x == p[to].y - p[from].y;
  };

  std::vector<DiagramRuleFailure> failures;
  for (int i = 1; i <= n; ++i) {
    const IntervalModule& ei = e[i - 1];
    for (int j = i + 1; j <= n; ++j) {
      const IntervalModule& ej = e[j - 1];
      const bool same_column = p[i].x == p[j].x;
      const bool rays_meet = north_east(j, i) && ray[i].point == ray[j].point;
      if (is_quotient(ei, ej) != same_column) failures.push_back({1, i, j});
      if (is_submodule(ei, ej) != rays_meet) failures.push_back({2, i, j});

      // The first corner with label > i met from P_i is the only candidate P_k.
      const bool ext_predicted = ray[i].kind == RayStop::corner && p[ray[i].label].x == p[j].x;
      if ((ext_dim(ei, ej) == 1) != ext_predicted) failures.push_back({3, i, j});
      if ((hom_dim(ei, ej) == 1) != (same_column || rays_meet)) failures.push_back({4, i, j});
    }
  }
  return failures;
}

int filtration_level(const IntervalModule& v) { return v.root().lo(); }

bool is_nondecreasing_collection(std::span<const IntervalModule> e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i != j && is_submodule(e[i], e[j])) return false;
    }
  }
  return true;
}

}  // namespace parkbraid
