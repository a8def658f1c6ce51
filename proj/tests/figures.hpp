#pragma once

// Reference data: the alpha_1 / alpha_2 action
// graph on PF_3, the A_3 lists and the alpha_6 diagram example.

#include <utility>
#include <vector>

namespace figures {

using Word = std::vector<int>;
using Edges = std::vector<std::pair<Word, Word>>;

// Solid arrows. Double-headed arrows appear as two edges.
inline Edges pf3_alpha1() {
  return {{{3, 1, 1}, {1, 1, 1}}, {{1, 2, 3}, {2, 1, 3}}, {{1, 1, 2}, {1, 2, 2}}, {{2, 3, 1}, {3, 2, 1}},
          {{1, 2, 1}, {2, 1, 1}}, {{2, 1, 1}, {1, 2, 1}}, {{1, 3, 2}, {3, 1, 2}}, {{3, 1, 2}, {1, 3, 2}},
          {{1, 1, 1}, {1, 3, 1}}, {{1, 3, 1}, {3, 1, 1}}, {{1, 1, 3}, {1, 2, 3}}, {{2, 1, 3}, {1, 1, 3}},
          {{2, 1, 2}, {1, 1, 2}}, {{1, 2, 2}, {2, 1, 2}}, {{3, 2, 1}, {2, 2, 1}}, {{2, 2, 1}, {2, 3, 1}}};
}

// Dashed arrows.
inline Edges pf3_alpha2() {
  return {{{1, 2, 1}, {1, 1, 1}}, {{3, 1, 1}, {3, 1, 2}}, {{1, 2, 3}, {1, 3, 2}}, {{2, 1, 1}, {2, 1, 3}},
          {{1, 1, 2}, {1, 2, 1}}, {{1, 3, 2}, {1, 2, 2}}, {{3, 1, 2}, {3, 2, 1}}, {{2, 3, 1}, {2, 1, 1}},
          {{1, 1, 1}, {1, 1, 2}}, {{1, 2, 2}, {1, 2, 3}}, {{3, 2, 1}, {3, 1, 1}}, {{2, 1, 3}, {2, 3, 1}},
          {{1, 3, 1}, {1, 1, 3}}, {{1, 1, 3}, {1, 3, 1}}, {{2, 1, 2}, {2, 2, 1}}, {{2, 2, 1}, {2, 1, 2}}};
}

using Basis = std::vector<std::pair<int, int>>;

// Also the order of the A_2 figure: alpha_1 takes each to the next, cyclically.
inline std::vector<Basis> a2_bases() { return {{{1, 1}, {2, 2}}, {{2, 2}, {1, 2}}, {{1, 2}, {1, 1}}}; }

inline std::vector<Basis> a3_bases() {
  return {{{1, 1}, {2, 2}, {3, 3}}, {{1, 1}, {3, 3}, {2, 3}}, {{1, 1}, {2, 3}, {2, 2}},
          {{2, 2}, {1, 2}, {3, 3}}, {{2, 2}, {3, 3}, {1, 3}}, {{2, 2}, {1, 3}, {1, 2}},
          {{3, 3}, {1, 1}, {2, 3}}, {{3, 3}, {2, 3}, {1, 3}}, {{3, 3}, {1, 3}, {1, 1}},
          {{1, 2}, {1, 1}, {3, 3}}, {{1, 2}, {3, 3}, {1, 1}}, {{2, 3}, {1, 3}, {2, 2}},
          {{2, 3}, {2, 2}, {1, 3}}, {{1, 3}, {1, 1}, {2, 2}}, {{1, 3}, {2, 2}, {1, 2}},
          {{1, 3}, {1, 2}, {1, 1}}};
}

inline std::vector<int> alpha6_source() { return {2, 8, 6, 4, 5, 1, 7, 1}; }
// The figure draws these two results with the alpha and beta labels
// exchanged; these are the images under the definitions.
inline std::vector<int> alpha6_alpha_image() { return {2, 8, 6, 4, 5, 7, 1, 1}; }
inline std::vector<int> alpha6_beta_image() { return {2, 8, 6, 4, 5, 1, 1, 1}; }

}  // namespace figures
