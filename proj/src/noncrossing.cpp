#include "parkbraid/noncrossing.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace parkbraid {

NCPartition::NCPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw Error("invalid_partition", "negative ground set");
  for (auto& b : blocks_) {
    if (b.empty()) throw Error("invalid_partition", "empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  owner_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int x : blocks_[i]) {
      if (x < 0 || x > n || owner_[x] != -1) {
        throw Error("invalid_partition", "blocks do not partition {0,...," + std::to_string(n) + "}");
      }
      owner_[x] = static_cast<int>(i);
    }
  }
  if (std::find(owner_.begin(), owner_.end(), -1) != owner_.end()) {
    throw Error("invalid_partition", "blocks do not cover {0,...," + std::to_string(n) + "}");
  }
}

NCPartition NCPartition::singletons(int n) {
  std::vector<Block> blocks;
  for (int x = 0; x <= n; ++x) blocks.push_back({x});
  return NCPartition(n, std::move(blocks));
}

NCPartition NCPartition::merged(int block_a, int block_b) const {
  std::vector<Block> blocks;
  Block joined;
  for (int i = 0; i < static_cast<int>(blocks_.size()); ++i) {
    if (i == block_a || i == block_b) {
      joined.insert(joined.end(), blocks_[i].begin(), blocks_[i].end());
    } else {
      blocks.push_back(blocks_[i]);
    }
  }
  blocks.push_back(std::move(joined));
  return NCPartition(n_, std::move(blocks));
}

std::string NCPartition::to_string() const {
  std::ostringstream os;
  for (const auto& b : blocks_) {
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "}";
  }
  return os.str();
}

bool is_noncrossing(const NCPartition& p) {
  const int n = p.n();
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        if (p.block_of(a) != p.block_of(c)) continue;
        for (int d = c + 1; d <= n; ++d) {
          if (p.block_of(b) == p.block_of(d) && p.block_of(a) != p.block_of(b)) return false;
        }
      }
    }
  }
  return true;
}

std::pair<Block, Block> merge_step(const NCPartition& from, const NCPartition& to) {
  if (from.n() != to.n() || to.blocks().size() + 1 != from.blocks().size()) {
    throw Error("invalid_chain", from.to_string() + " -> " + to.to_string() + " is not a single merge");
  }
  std::vector<const Block*> gone;
  for (const Block& b : from.blocks()) {
    if (!std::binary_search(to.blocks().begin(), to.blocks().end(), b)) gone.push_back(&b);
  }
  if (gone.size() != 2) {
    throw Error("invalid_chain", from.to_string() + " -> " + to.to_string() + " is not a single merge");
  }
  Block joined = *gone[0];
  joined.insert(joined.end(), gone[1]->begin(), gone[1]->end());
  std::sort(joined.begin(), joined.end());
  if (!std::binary_search(to.blocks().begin(), to.blocks().end(), joined)) {
    throw Error("invalid_chain", from.to_string() + " -> " + to.to_string() + " is not a single merge");
  }
  // Blocks are sorted by minimum, so gone[0] has the smaller one.
  return {*gone[0], *gone[1]};
}

NCChain::NCChain(std::vector<NCPartition> partitions) : partitions_(std::move(partitions)) {
  if (partitions_.empty()) throw Error("invalid_chain", "empty chain");
  const int n = partitions_.front().n();
  if (partitions_.size() != static_cast<std::size_t>(n) + 1) {
    throw Error("invalid_chain", "a maximal chain on {0,...,n} has n+1 partitions");
  }
  if (partitions_.front() != NCPartition::singletons(n)) {
    throw Error("invalid_chain", "chain does not start at the singletons");
  }
  for (std::size_t k = 0; k < partitions_.size(); ++k) {
    if (!is_noncrossing(partitions_[k])) {
      throw Error("invalid_chain", partitions_[k].to_string() + " is crossing");
    }
    if (k > 0) merge_step(partitions_[k - 1], partitions_[k]);
  }
}

NCChain pi_chain(const DistinguishedBasis& a) {
  const int n = a.rank();
  std::vector<NCPartition> chain{NCPartition::singletons(n)};
  for (const Arc& arc : to_arcs(a).arcs) {
    const NCPartition& last = chain.back();
    const int u = last.block_of(arc.left);
    const int v = last.block_of(arc.right);
    if (u == v) throw InternalError("arc closes a cycle in " + a.to_string());
    chain.push_back(last.merged(u, v));
  }
  return NCChain(std::move(chain));
}

int lambda(const NCPartition& from, const NCPartition& to) {
  const auto [b, b2] = merge_step(from, to);
  int by_min = -1;
  int by_all = -1;
  for (int i : b) {
    if (i < b2.front()) by_min = std::max(by_min, i);
    if (std::all_of(b2.begin(), b2.end(), [i](int x) { return i < x; })) by_all = std::max(by_all, i);
  }
  if (by_min != by_all || by_min < 0) {
    throw InternalError("readings of Lambda disagree on " + from.to_string() + " -> " + to.to_string());
  }
  return by_min;
}

std::vector<int> lambda_chain(const NCChain& c) {
  std::vector<int> out;
  const auto& p = c.partitions();
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(lambda(p[k - 1], p[k]));
  return out;
}

DistinguishedBasis chain_to_basis(const NCChain& c) {
  const int n = c.n();
  std::vector<Root> roots;
  const auto& p = c.partitions();
  for (std::size_t k = 1; k < p.size(); ++k) {
    const int right = merge_step(p[k - 1], p[k]).second.back();
    roots.emplace_back(lambda(p[k - 1], p[k]) + 1, right, n);
  }
  return DistinguishedBasis::trusted(std::move(roots), n);
}

std::vector<NCChain> enumerate_chains(int n) {
  if (n < 1) throw Error("invalid_size", "n must be at least 1");
  std::set<std::vector<NCPartition>> seen;
  std::vector<NCPartition> chain{NCPartition::singletons(n)};
  auto extend = [&](auto&& self) -> void {
    const NCPartition last = chain.back();
    const int blocks = static_cast<int>(last.blocks().size());
    if (blocks == 1) {
      if (!seen.insert(chain).second) throw InternalError("chain enumerated twice");
      return;
    }
    for (int u = 0; u < blocks; ++u) {
      for (int v = u + 1; v < blocks; ++v) {
        NCPartition next = last.merged(u, v);
        if (!is_noncrossing(next)) continue;
        chain.push_back(std::move(next));
        self(self);
        chain.pop_back();
      }
    }
  };
  extend(extend);
  std::vector<NCChain> out;
  for (const auto& c : seen) out.emplace_back(c);
  return out;
}

}  // namespace parkbraid
