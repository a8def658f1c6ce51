#include "parkbraid/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace parkbraid {

namespace {

void require_k(int k, int n) {
  if (k < 1 || k > n - 1) {
    throw Error("k_out_of_range", "generator index " + std::to_string(k) + " outside [1," +
                                      std::to_string(n - 1) + "]");
  }
}

}  // namespace

BraidWord BraidWord::parse(std::string_view text, int rank) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value == 0) {
      throw Error("bad_letter", "'" + token + "' is not a nonzero integer");
    }
    const int k = std::abs(value);
    if (k >= rank) {
      throw Error("bad_letter", "letter " + token + " needs |k| < " + std::to_string(rank));
    }
    letters.push_back(Letter{k, value > 0 ? Direction::left : Direction::right});
  }
  return BraidWord(std::move(letters));
}

std::string BraidWord::to_string() const {
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l.dir == Direction::left ? l.k : -l.k);
  }
  return s;
}

DistinguishedBasis mutate(const DistinguishedBasis& a, int k, Direction dir) {
  const int n = a.rank();
  require_k(k, n);
  std::vector<Root> roots(a.roots().begin(), a.roots().end());
  const Root ak = roots[k - 1];
  const Root ak1 = roots[k];
  const int s = seifert(ak, ak1);
  if (dir == Direction::left) {
    roots[k - 1] = ak1;
    roots[k] = combine(ak, s, ak1).root;
  } else {
    roots[k - 1] = combine(ak1, s, ak).root;
    roots[k] = ak;
  }
  return DistinguishedBasis::trusted(std::move(roots), n);
}

DistinguishedBasis alpha_inverse(const DistinguishedBasis& a, int k) {
  DistinguishedBasis prev = a;
  DistinguishedBasis cur = mutate(a, k, Direction::left);
  for (int steps = 0; cur != a; ++steps) {
    if (steps > 3) throw InternalError("alpha_k orbit longer than 3 at " + a.to_string());
    prev = cur;
    cur = mutate(cur, k, Direction::left);
  }
  return prev;
}

DistinguishedBasis apply(const DistinguishedBasis& a, const BraidWord& word) {
  DistinguishedBasis cur = a;
  for (const Letter& l : word.letters()) cur = mutate(cur, l.k, l.dir);
  return cur;
}

ParkingFunction mutate_pf(const ParkingFunction& f, int k, Direction dir) {
  return in_vector(mutate(reconstruct(f), k, dir));
}

ParkingFunction apply(const ParkingFunction& f, const BraidWord& word) {
  return in_vector(apply(reconstruct(f), word));
}

namespace {

struct Row {
  int length;
  int label;
};

std::vector<Row> rows_of(const ParkingDiagram& d) {
  std::vector<Row> rows;
  for (int b = 1; b <= d.size(); ++b) rows.push_back(Row{d.length_at(b), d.label_at(b)});
  return rows;
}

ParkingDiagram diagram_of(const std::vector<Row>& rows) {
  std::vector<int> labels, lengths;
  for (const Row& r : rows) {
    labels.push_back(r.label);
    lengths.push_back(r.length);
  }
  try {
    return ParkingDiagram(std::move(labels), std::move(lengths));
  } catch (const Error& e) {
    throw InternalError(std::string("diagram mutation left the staircase: ") + e.what());
  }
}

std::size_t index_of(const std::vector<Row>& rows, int label) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].label == label) return i;
  }
  throw InternalError("label " + std::to_string(label) + " missing from diagram");
}

// Takes the row labeled `label` out and puts it back with `length` at
// bottom-up position `at` of the remaining rows, as computed by `where`.
template <class Where>
ParkingDiagram reinsert(const ParkingDiagram& d, int label, int length, Where&& where) {
  auto rows = rows_of(d);
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(index_of(rows, label)));
  const std::size_t at = where(rows);
  rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), Row{length, label});
  return diagram_of(rows);
}

ParkingDiagram swap_labels(const ParkingDiagram& d, int k) {
  auto f = from_diagram(d);
  std::vector<int> v(f.values().begin(), f.values().end());
  std::swap(v[k - 1], v[k]);
  return to_diagram(ParkingFunction(std::move(v)));
}

// P_to lies strictly north-east of P_from on one diagonal and the walk
// between them meets the diagram only in corners with labels <= bound.
bool clear_diagonal(const ParkingDiagram& d, int from, int to, int bound) {
  const DiagramPoint p = d.corner(from);
  const DiagramPoint q = d.corner(to);
  if (q.x <= p.x || q.x - p.x != q.y - p.y) return false;
  const RayHit hit = walk_north_east(d, p, [&](int l) { return l > bound || l == to; });
  return hit.kind == RayStop::corner && hit.label == to;
}

}  // namespace

DiagramMutation mutate_diagram(const ParkingDiagram& d, int k, Direction dir) {
  const int n = d.size();
  require_k(k, n);
  const DiagramPoint pk = d.corner(k);
  const DiagramPoint pk1 = d.corner(k + 1);

  if (clear_diagonal(d, k + 1, k, k + 1)) {
    if (dir == Direction::right) return {swap_labels(d, k), 1};
    return {reinsert(d, k, pk1.x, [&](const std::vector<Row>& rows) { return index_of(rows, k + 1); }), 1};
  }
  if (clear_diagonal(d, k, k + 1, k + 1)) {
    if (dir == Direction::left) return {swap_labels(d, k), 2};
    return {reinsert(d, k + 1, pk.x, [&](const std::vector<Row>& rows) { return index_of(rows, k) + 1; }), 2};
  }
  if (pk.x == pk1.x) {
    const RayHit q = walk_north_east(d, pk1, [k](int l) { return l > k; });
    int ref = 0;  // label of the row containing Q; 0 means the x-axis
    if (q.kind == RayStop::corner) {
      ref = q.label;
    } else if (q.kind == RayStop::dyck_path) {
      ref = d.label_at(d.row_above(q.point.y));
    }
    const int moving = dir == Direction::left ? k + 1 : k;
    return {reinsert(d, moving, q.point.x,
                     [&](const std::vector<Row>& rows) { return ref == 0 ? rows.size() : index_of(rows, ref); }),
            3};
  }
  return {swap_labels(d, k), 4};
}

const char* to_string(ArcPicture p) {
  switch (p) {
    case ArcPicture::orthogonal: return "orthogonal";
    case ArcPicture::same_left: return "same_left";
    case ArcPicture::same_right: return "same_right";
    case ArcPicture::touching: return "touching";
  }
  return "?";
}

ArcPicture arc_picture(const Root& a, const Root& b) {
  if (seifert(b, a) != 0) {
    throw Error("precondition", "seifert(" + b.to_string() + ", " + a.to_string() + ") is not zero");
  }
  const int s = seifert(a, b);
  if (s == 0) return ArcPicture::orthogonal;
  if (s == 1 && a.lo() == b.lo() && b.hi() < a.hi()) return ArcPicture::same_left;
  if (s == 1 && a.hi() == b.hi() && b.lo() < a.lo()) return ArcPicture::same_right;
  if (s == -1 && a.hi() + 1 == b.lo()) return ArcPicture::touching;
  throw InternalError("unclassified arc pair " + a.to_string() + ", " + b.to_string());
}

Root arc_mutation_target(const Root& a, const Root& b) {
  arc_picture(a, b);
  return combine(a, seifert(a, b), b).root;
}

int generator_order(const DistinguishedBasis& a, int k) {
  require_k(k, a.rank());
  const Root& x = a.at(k);
  const Root& y = a.at(k + 1);
  return seifert(x, y) == 0 && seifert(y, x) == 0 ? 2 : 3;
}

OrbitGraph orbit_graph(int n) {
  if (n < 2) throw Error("invalid_size", "orbit graphs need n >= 2");
  OrbitGraph g;
  g.n = n;
  g.nodes = enumerate_parking(n);
  for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u) {
    const DistinguishedBasis a = reconstruct(g.nodes[u]);
    for (int k = 1; k < n; ++k) {
      for (Direction dir : {Direction::left, Direction::right}) {
        const ParkingFunction target = in_vector(mutate(a, k, dir));
        const auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), target);
        g.edges.push_back(OrbitEdge{u, static_cast<int>(it - g.nodes.begin()), k, dir});
      }
    }
  }
  return g;
}

bool is_connected(const OrbitGraph& g) {
  if (g.nodes.empty()) return true;
  std::vector<std::vector<int>> adj(g.nodes.size());
  for (const OrbitEdge& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.nodes.size();
}

YoungDiagram young_of(const ParkingFunction& f) {
  YoungDiagram y(f.values().begin(), f.values().end());
  for (int& v : y) --v;
  std::sort(y.begin(), y.end(), std::greater<>());
  return y;
}

bool in_staircase(const YoungDiagram& y) {
  const int n = static_cast<int>(y.size());
  for (int k = 1; k <= n; ++k) {
    const int len = y[k - 1];
    if (len < 0 || len > n - k) return false;
    if (k > 1 && y[k - 2] < len) return false;
  }
  return true;
}

YoungDiagram flip_row(const YoungDiagram& y, int k) {
  const int n = static_cast<int>(y.size());
  if (!in_staircase(y)) throw Error("invalid_diagram", "row lengths do not fit the staircase");
  require_k(k, n);
  const auto mu = [&](int j) { return 1 <= j && j <= n ? y[j - 1] : 0; };
  int x = mu(k);
  int yy = -k;
  if (mu(k) > mu(k + 1)) {
    for (;;) {
      --x;
      --yy;
      if (x <= 0) {
        x = 0;
        break;
      }
      if (x <= mu(-yy)) break;
    }
  } else {
    for (;;) {
      ++x;
      ++yy;
      if (yy == 0 || x <= mu(-yy)) break;
    }
  }
  YoungDiagram out = y;
  out.erase(out.begin() + (k - 1));
  out.push_back(x);
  std::sort(out.begin(), out.end(), std::greater<>());
  if (!in_staircase(out)) throw InternalError("flip left the staircase");
  return out;
}

}  // namespace parkbraid
