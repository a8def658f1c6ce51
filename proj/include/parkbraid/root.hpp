#pragma once

// Positive roots of A_n as closed integer intervals, the Seifert form and the
// Cartan pairing.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "parkbraid/error.hpp"

namespace parkbraid {

/// The positive root e_lo + e_{lo+1} + ... + e_hi of A_rank.
class Root {
 public:
  /// Throws Error("invalid_root") unless 1 <= lo <= hi <= rank.
  Root(int lo, int hi, int rank);

  static Root simple(int i, int rank) { return Root(i, i, rank); }

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  int rank() const noexcept { return rank_; }
  int length() const noexcept { return hi_ - lo_ + 1; }
  bool is_simple() const noexcept { return lo_ == hi_; }
  bool contains(int i) const noexcept { return lo_ <= i && i <= hi_; }

  friend auto operator<=>(const Root&, const Root&) = default;

  std::string to_string() const;

 private:
  int lo_;
  int hi_;
  int rank_;
};

/// Transient +-root produced by a mutation before sign normalization.
struct SignedRoot {
  Root root;
  int sign;  // +1 or -1

  bool operator==(const SignedRoot&) const = default;
};

/// a - coeff * b as an element of the root lattice; throws InternalError if
/// the result is not a (signed) root.
SignedRoot combine(const Root& a, int coeff, const Root& b);

/// Seifert form <a, b>. Throws Error("rank_mismatch").
int seifert(const Root& a, const Root& b);

/// Symmetrized form <a,b> + <b,a>.
int cartan(const Root& a, const Root& b);

enum class SupportRelation { disjoint, a_contains_b, b_contains_a, equal, crossing };

SupportRelation support_relation(const Root& a, const Root& b);

const char* to_string(SupportRelation r);

/// All n(n+1)/2 positive roots of A_n in lexicographic (lo, hi) order.
std::vector<Root> positive_roots(int rank);

namespace fault {
/// Harness self-test switch: while enabled, seifert() returns the wrong sign
/// for the pair (e_1, e_2).
void set_seifert_sign_flip(bool enabled);
bool seifert_sign_flip();
}  // namespace fault

}  // namespace parkbraid

template <>
struct std::hash<parkbraid::Root> {
  std::size_t operator()(const parkbraid::Root& r) const noexcept {
    return static_cast<std::size_t>(r.lo()) * 1000003u + static_cast<std::size_t>(r.hi()) * 1009u +
           static_cast<std::size_t>(r.rank());
  }
};
