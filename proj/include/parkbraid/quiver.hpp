#pragma once

// Representations of the equioriented quiver 1 -> 2 -> ... -> n. Interval
// modules correspond to positive roots; Hom and Ext are given in closed form
// and checked against a linear-algebra solve.

#include <span>
#include <string>
#include <vector>

#include "parkbraid/bijection.hpp"

namespace parkbraid {

class IntervalModule {
 public:
  explicit IntervalModule(Root interval) : interval_(interval) {}

  const Root& root() const noexcept { return interval_; }
  int rank() const noexcept { return interval_.rank(); }
  std::vector<int> dimension_vector() const;

  bool operator==(const IntervalModule&) const = default;

 private:
  Root interval_;
};

std::vector<IntervalModule> modules_of(const DistinguishedBasis& a);
std::vector<IntervalModule> modules_of(std::span<const Root> roots);

/// Vector spaces k^{dims[i]} at each vertex and, for each arrow i -> i+1, a
/// dims[i+1] x dims[i] integer matrix (row-major).
struct Representation {
  std::vector<int> dims;
  std::vector<std::vector<std::vector<int>>> arrows;
};

/// Identity maps inside the interval, zero elsewhere.
Representation materialize(const IntervalModule& v);

/// dim Hom - dim Ext^1, which is the Seifert form on the roots.
int euler(const IntervalModule& v, const IntervalModule& w);

/// 1 iff W.lo <= V.lo <= W.hi <= V.hi.
int hom_dim(const IntervalModule& v, const IntervalModule& w);

/// hom_dim - euler. Throws InternalError if that is negative.
int ext_dim(const IntervalModule& v, const IntervalModule& w);

/// Dimension of the space of intertwiners V -> W, solved exactly over Q.
int hom_dim_oracle(const Representation& v, const Representation& w);
int hom_dim_oracle(const IntervalModule& v, const IntervalModule& w);

/// A nonzero morphism V -> W exists and is injective (resp. surjective).
bool is_submodule(const IntervalModule& v, const IntervalModule& w);
bool is_quotient(const IntervalModule& v, const IntervalModule& w);

/// Hom(E_j, E_i) = 0 = Ext^1(E_j, E_i) for all j > i.
bool is_exceptional_sequence(std::span<const IntervalModule> e);

struct HomExtTable {
  std::vector<std::vector<int>> hom;  // hom[i][j] = dim Hom(E_{i+1}, E_{j+1})
  std::vector<std::vector<int>> ext;
};

HomExtTable hom_ext_table(std::span<const IntervalModule> e);

struct DiagramRuleFailure {
  int rule;  // 1..4
  int i;
  int j;
};

/// Compares, for every i < j, the quotient / submodule / Ext^1 / Hom entries
/// of a complete exceptional sequence with what the parking diagram of its
/// levels predicts:
///   1. E_j is a quotient of E_i iff P_i and P_j share their x-coordinate;
///   2. E_i embeds in E_j iff P_i is north-east of P_j on one diagonal and the
///      rays from P_i and P_j end at the same point;
///   3. Ext^1(E_i, E_j) = 1 iff some P_k, k > i, is north-east of P_i on one
///      diagonal, reached without meeting the diagram except at corners
///      P_l with l <= i, and shares its x-coordinate with P_j;
///   4. Hom(E_i, E_j) = 0 outside cases 1 and 2.
/// Returns the failures, empty when all rules hold. Throws
/// Error("invalid_basis") if `e` is not a complete exceptional sequence.
std::vector<DiagramRuleFailure> check_diagram_rules(std::span<const IntervalModule> e);

/// Largest k with [V] in the span of S_k, ..., S_n; this is V.lo.
int filtration_level(const IntervalModule& v);

/// No monomorphism between two distinct members.
bool is_nondecreasing_collection(std::span<const IntervalModule> e);

}  // namespace parkbraid
