#pragma once

// Distinguished bases of A_n, their arc diagrams, Span/Gap, orthogonal
// complements and the recursive enumeration.

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "parkbraid/root.hpp"

namespace parkbraid {

class DistinguishedBasis;

enum class DefectKind {
  wrong_length,
  rank_mismatch,
  dependent,
  seifert,
  crossing,
  arc_left_nesting,
  arc_right_nesting,
  arc_touching,
  arc_cycle,
};

const char* to_string(DefectKind kind);

/// The first failed condition. Positions are 1-based; for `seifert`,
/// seifert(a_first, a_second) != 0 with first > second.
struct BasisDefect {
  DefectKind kind;
  int first = 0;
  int second = 0;
  std::string message;
};

/// Checks, in order: length, ranks, linear independence, the Seifert
/// triangle, then the arc conditions.
std::variant<DistinguishedBasis, BasisDefect> validate(std::span<const Root> roots, int rank);

class DistinguishedBasis {
 public:
  /// Throws Error("invalid_basis") carrying the defect message.
  static DistinguishedBasis from_roots(std::vector<Root> roots, int rank);
  /// For roots produced by a construction that is supposed to be correct;
  /// throws InternalError if validation fails.
  static DistinguishedBasis trusted(std::vector<Root> roots, int rank);

  int rank() const noexcept { return rank_; }
  std::span<const Root> roots() const noexcept { return roots_; }
  /// a_i, 1-based.
  const Root& at(int i) const { return roots_.at(static_cast<std::size_t>(i - 1)); }

  friend auto operator<=>(const DistinguishedBasis&, const DistinguishedBasis&) = default;

  std::string to_string() const;

 private:
  friend std::variant<DistinguishedBasis, BasisDefect> validate(std::span<const Root>, int);
  DistinguishedBasis(std::vector<Root> roots, int rank) : roots_(std::move(roots)), rank_(rank) {}

  std::vector<Root> roots_;
  int rank_;
};

struct Arc {
  int left;
  int right;
  auto operator<=>(const Arc&) const = default;
};

/// Arcs on the axis {0, ..., n}, in basis order.
struct ArcDiagram {
  int n = 0;
  std::vector<Arc> arcs;
  bool operator==(const ArcDiagram&) const = default;
};

ArcDiagram to_arcs(const DistinguishedBasis& a);
/// Throws Error("invalid_arcs") naming the violated condition.
DistinguishedBasis from_arcs(const ArcDiagram& d);

struct ArcCheckOptions {
  bool nesting = true;    // conditions on shared left / right ends
  bool touching = true;   // right end of i equals left end of j => i < j
  bool acyclic = true;    // the arcs form a forest
};

/// Non-intersection plus the enabled conditions. On failure returns false and
/// fills `defect` if given.
bool check_arc_conditions(const ArcDiagram& d, BasisDefect* defect = nullptr,
                          ArcCheckOptions options = {});

/// Union of supports of the basis roots whose support is strictly inside a_i.
std::vector<int> span(const DistinguishedBasis& a, int i);
/// The single element of supp(a_i) \ span. Throws InternalError if it is not
/// a single element.
int gap(const DistinguishedBasis& a, int i);

struct OrthogonalSplit {
  std::vector<Root> first;
  std::vector<Root> second;
};

/// Generators of {v : <r, v> = 0} as two mutually orthogonal A-type chains.
OrthogonalSplit right_orthogonal_basis(const Root& r);
/// Generators of {v : <v, r> = 0}; this is the space the later vectors of a
/// basis starting with r live in.
OrthogonalSplit left_orthogonal_basis(const Root& r);

/// Every distinguished basis of A_n exactly once. Throws InternalError on a
/// duplicate.
std::vector<DistinguishedBasis> enumerate_recursive(int n);

/// The bases whose first root is `first`; these classes partition the
/// output of enumerate_recursive.
std::vector<DistinguishedBasis> enumerate_with_first(const Root& first);

}  // namespace parkbraid
