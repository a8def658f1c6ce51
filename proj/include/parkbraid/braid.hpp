#pragma once

// Braid group action: mutations on bases, the induced action on parking
// functions and diagrams, orbit graphs, and flips of staircase Young
// diagrams.

#include <string>
#include <string_view>
#include <vector>

#include "parkbraid/bijection.hpp"

namespace parkbraid {

/// left = alpha_k, right = beta_k.
enum class Direction { left, right };

struct Letter {
  int k;
  Direction dir;
  bool operator==(const Letter&) const = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Whitespace-separated nonzero integers, "+k" for alpha_k and "-k" for
  /// beta_k. Throws Error("bad_letter") unless 1 <= |k| < rank.
  static BraidWord parse(std::string_view text, int rank);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// alpha_k: (a_k, a_{k+1}) -> (a_{k+1}, a_k - <a_k,a_{k+1}> a_{k+1});
/// beta_k: (a_k, a_{k+1}) -> (a_{k+1} - <a_k,a_{k+1}> a_k, a_k).
/// Negative results are replaced by their positive roots. Throws
/// Error("k_out_of_range").
DistinguishedBasis mutate(const DistinguishedBasis& a, int k, Direction dir);

/// alpha_k^{-1} computed by iterating alpha_k around its cycle; a second
/// route to beta_k.
DistinguishedBasis alpha_inverse(const DistinguishedBasis& a, int k);

/// Letters applied left to right.
DistinguishedBasis apply(const DistinguishedBasis& a, const BraidWord& word);

/// In o mutate o reconstruct.
ParkingFunction mutate_pf(const ParkingFunction& f, int k, Direction dir);
ParkingFunction apply(const ParkingFunction& f, const BraidWord& word);

struct DiagramMutation {
  ParkingDiagram diagram;
  /// Which rule fired: 1 and 2 for corners on a common clear diagonal
  /// (P_{k+1} south-west of P_k, resp. the reverse), 3 for a common column,
  /// 4 for a plain label swap.
  int rule;
};

/// The action read directly off the diagram, without passing through bases.
DiagramMutation mutate_diagram(const ParkingDiagram& d, int k, Direction dir);

enum class ArcPicture { orthogonal, same_left, same_right, touching };

const char* to_string(ArcPicture p);

/// Which configuration the pair (a, b) is in; requires seifert(b, a) == 0
/// and throws Error("precondition") otherwise.
ArcPicture arc_picture(const Root& a, const Root& b);

/// c = a - <a,b> b, made positive. Requires seifert(b, a) == 0.
Root arc_mutation_target(const Root& a, const Root& b);

/// 2 if a_k and a_{k+1} are Seifert-orthogonal both ways, else 3.
int generator_order(const DistinguishedBasis& a, int k);

struct OrbitEdge {
  int from;  // node indices
  int to;
  int k;
  Direction dir;
  bool operator==(const OrbitEdge&) const = default;
};

struct OrbitGraph {
  int n = 0;
  std::vector<ParkingFunction> nodes;  // lexicographic
  std::vector<OrbitEdge> edges;        // by source, then k, alpha before beta
};

/// All generators alpha_k, beta_k acting on PF_n.
OrbitGraph orbit_graph(int n);
bool is_connected(const OrbitGraph& g);

/// Row lengths listed top row first, weakly decreasing; row k (1-based) has
/// length at most n - k.
using YoungDiagram = std::vector<int>;

/// Sorted values of f minus one, in decreasing order.
YoungDiagram young_of(const ParkingFunction& f);
bool in_staircase(const YoungDiagram& y);

/// Flip in row k, 1 <= k <= n-1. Throws Error("k_out_of_range") or
/// Error("invalid_diagram").
YoungDiagram flip_row(const YoungDiagram& y, int k);

}  // namespace parkbraid
