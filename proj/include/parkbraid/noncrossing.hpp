#pragma once

// Non-crossing partitions of {0, ..., n}, maximal chains of them, and the
// maps between chains, bases and parking functions.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "parkbraid/dbasis.hpp"

namespace parkbraid {

using Block = std::vector<int>;

/// Any set partition of {0, ..., n}, stored canonically: each block sorted,
/// blocks ordered by their minimum. Non-crossing is a separate predicate.
class NCPartition {
 public:
  /// Throws Error("invalid_partition") unless the blocks cover 0..n once.
  NCPartition(int n, std::vector<Block> blocks);

  static NCPartition singletons(int n);

  int n() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  /// Index into blocks() of the block holding x.
  int block_of(int x) const { return owner_.at(static_cast<std::size_t>(x)); }

  NCPartition merged(int block_a, int block_b) const;

  friend bool operator==(const NCPartition& a, const NCPartition& b) { return a.blocks_ == b.blocks_; }
  friend auto operator<=>(const NCPartition& a, const NCPartition& b) { return a.blocks_ <=> b.blocks_; }

  std::string to_string() const;

 private:
  int n_;
  std::vector<Block> blocks_;
  std::vector<int> owner_;
};

bool is_noncrossing(const NCPartition& p);

/// The two blocks of `from` merged into `to`, the one with the smaller
/// minimum first. Throws Error("invalid_chain") if `to` is not obtained from
/// `from` by merging exactly two blocks.
std::pair<Block, Block> merge_step(const NCPartition& from, const NCPartition& to);

class NCChain {
 public:
  /// Throws Error("invalid_chain") unless this is a maximal chain of
  /// non-crossing partitions from the singletons to the full set.
  explicit NCChain(std::vector<NCPartition> partitions);

  int n() const noexcept { return static_cast<int>(partitions_.size()) - 1; }
  const std::vector<NCPartition>& partitions() const noexcept { return partitions_; }

  friend bool operator==(const NCChain&, const NCChain&) = default;
  friend auto operator<=>(const NCChain& a, const NCChain& b) { return a.partitions_ <=> b.partitions_; }

 private:
  std::vector<NCPartition> partitions_;
};

/// pi_k = connected components of the first k arcs.
NCChain pi_chain(const DistinguishedBasis& a);

/// max{i in B : i < min B'} for the merge (B, B'). Throws InternalError if
/// the reading "i below every element of B'" disagrees.
int lambda(const NCPartition& from, const NCPartition& to);
std::vector<int> lambda_chain(const NCChain& c);

/// a_{k+1} = e_{Lambda+1} + ... + e_{max B'}.
DistinguishedBasis chain_to_basis(const NCChain& c);

/// All maximal chains, by merging two blocks at a time and keeping the
/// non-crossing results. Sorted.
std::vector<NCChain> enumerate_chains(int n);

}  // namespace parkbraid
