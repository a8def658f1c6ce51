#include "parkbraid/root.hpp"

#include <atomic>
#include <sstream>

namespace parkbraid {

namespace {

std::atomic<bool> g_seifert_flip{false};

void require_same_rank(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) {
    throw Error("rank_mismatch", "roots " + a.to_string() + " and " + b.to_string() +
                                     " live in different ranks");
  }
}

}  // namespace

Root::Root(int lo, int hi, int rank) : lo_(lo), hi_(hi), rank_(rank) {
  if (!(1 <= lo && lo <= hi && hi <= rank)) {
    std::ostringstream os;
    os << "[" << lo << "," << hi << "] is not a positive root of A_" << rank;
    throw Error("invalid_root", os.str());
  }
}

std::string Root::to_string() const {
  std::ostringstream os;
  if (is_simple()) {
    os << "e_" << lo_;
  } else {
    os << "e_{" << lo_ << "," << hi_ << "}";
  }
  return os.str();
}

SignedRoot combine(const Root& a, int coeff, const Root& b) {
  require_same_rank(a, b);
  const int n = a.rank();
  std::vector<int> v(static_cast<std::size_t>(n) + 2, 0);
  for (int i = a.lo(); i <= a.hi(); ++i) v[i] += 1;
  for (int i = b.lo(); i <= b.hi(); ++i) v[i] -= coeff;

  int lo = 0;
  int hi = -1;
  int sign = 0;
  for (int i = 1; i <= n; ++i) {
    if (v[i] == 0) continue;
    if (sign == 0) {
      sign = v[i];
      lo = i;
    }
    if (v[i] != sign || (sign != 1 && sign != -1) || (hi != -1 && hi != i - 1)) {
      throw InternalError(a.to_string() + " - " + std::to_string(coeff) + "*" + b.to_string() +
                          " is not a root");
    }
    hi = i;
  }
  if (sign == 0) throw InternalError("mutation produced the zero vector");
  return SignedRoot{Root(lo, hi, n), sign};
}

int seifert(const Root& a, const Root& b) {
  require_same_rank(a, b);
  const int i = a.lo(), j = a.hi(), k = b.lo(), l = b.hi();
  int value = 0;
  if (k <= i && i <= l && l <= j) {
    value = 1;
  } else if (i <= k - 1 && k - 1 <= j && j < l) {
    value = -1;
  }
  if (value != 0 && g_seifert_flip.load(std::memory_order_relaxed) && i == 1 && j == 1 && k == 2 &&
      l == 2) {
    value = -value;
  }
  return value;
}

int cartan(const Root& a, const Root& b) { return seifert(a, b) + seifert(b, a); }

SupportRelation support_relation(const Root& a, const Root& b) {
  require_same_rank(a, b);
  if (a == b) return SupportRelation::equal;
  if (a.hi() < b.lo() || b.hi() < a.lo()) return SupportRelation::disjoint;
  if (a.lo() <= b.lo() && b.hi() <= a.hi()) return SupportRelation::a_contains_b;
  if (b.lo() <= a.lo() && a.hi() <= b.hi()) return SupportRelation::b_contains_a;
  return SupportRelation::crossing;
}

const char* to_string(SupportRelation r) {
  switch (r) {
    case SupportRelation::disjoint: return "disjoint";
    case SupportRelation::a_contains_b: return "a_contains_b";
    case SupportRelation::b_contains_a: return "b_contains_a";
    case SupportRelation::equal: return "equal";
    case SupportRelation::crossing: return "crossing";
  }
  return "?";
}

std::vector<Root> positive_roots(int rank) {
  std::vector<Root> out;
  for (int lo = 1; lo <= rank; ++lo) {
    for (int hi = lo; hi <= rank; ++hi) out.emplace_back(lo, hi, rank);
  }
  return out;
}

namespace fault {
void set_seifert_sign_flip(bool enabled) { g_seifert_flip.store(enabled); }
bool seifert_sign_flip() { return g_seifert_flip.load(); }
}  // namespace fault

}  // namespace parkbraid
