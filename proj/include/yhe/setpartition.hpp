#pragma once

// Set partitions of {1..n}: canonical form, refinement, join, the right
// S_n-action and the Moebius function of the refinement lattice.

#include <yhe/partitions.hpp>

#include <map>

namespace yhe {

class SetPartition {
 public:
  SetPartition() = default;

  // All singletons.
  explicit SetPartition(int n) {
    for (int i = 1; i <= n; i++) blocks_.push_back({i});
    n_ = n;
  }

  SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    canonicalize();
  }

  // Consecutive blocks of the given sizes; zero sizes are skipped.
  static SetPartition consecutive(int n, const Composition& sizes) {
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int s : sizes) {
      if (s == 0) continue;
      std::vector<int> b(s);
      std::iota(b.begin(), b.end(), next);
      next += s;
      blocks.push_back(b);
    }
    assert(next == n + 1);
    return SetPartition(n, std::move(blocks));
  }

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int num_blocks() const { return (int)blocks_.size(); }

  // Block sizes as a partition (decreasing).
  Partition type() const {
    Partition p;
    for (const auto& b : blocks_) p.push_back((int)b.size());
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
  }

  int block_of(int j) const {
    for (size_t i = 0; i < blocks_.size(); i++)
      for (int x : blocks_[i])
        if (x == j) return (int)i;
    assert(false);
    return -1;
  }

  bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

  // Refinement: every block of *this is contained in a block of coarser.
  bool refines(const SetPartition& coarser) const {
    assert(n_ == coarser.n_);
    for (const auto& b : blocks_) {
      int target = coarser.block_of(b[0]);
      for (int x : b)
        if (coarser.block_of(x) != target) return false;
    }
    return true;
  }

  // Right action: A.w has blocks {(a)w : a in block}.
  SetPartition act(const Perm& w) const {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : blocks_) {
      std::vector<int> nb;
      for (int x : b) nb.push_back(w.of(x));
      blocks.push_back(nb);
    }
    return SetPartition(n_, std::move(blocks));
  }

  // Smallest common coarsening.
  friend SetPartition join(const SetPartition& a, const SetPartition& b) {
    assert(a.n_ == b.n_);
    std::vector<int> parent(a.n_ + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (const auto& blk : a.blocks_)
      for (size_t i = 1; i < blk.size(); i++) unite(blk[0], blk[i]);
    for (const auto& blk : b.blocks_)
      for (size_t i = 1; i < blk.size(); i++) unite(blk[0], blk[i]);
    std::map<int, std::vector<int>> groups;
    for (int x = 1; x <= a.n_; x++) groups[find(x)].push_back(x);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, blk] : groups) blocks.push_back(blk);
    return SetPartition(a.n_, std::move(blocks));
  }

  SetPartition join_pair(int x, int y) const {
    return join(*this, SetPartition(n_, {{x, y}}));
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.blocks_ <=> b.blocks_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < blocks_.size(); i++) {
      if (i) os << "|";
      for (size_t j = 0; j < blocks_[i].size(); j++) os << (j ? "," : "") << blocks_[i][j];
    }
    os << "}";
    return os.str();
  }

 private:
  void canonicalize() {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
    // missing elements become singletons
    std::vector<bool> seen(n_ + 1, false);
    for (const auto& b : blocks_)
      for (int x : b) {
        assert(!seen[x]);
        seen[x] = true;
      }
    for (int x = 1; x <= n_; x++)
      if (!seen[x]) blocks_.push_back({x});
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
  }

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Enumeration via restricted growth strings; deterministic order.
inline std::vector<SetPartition> all_setpartitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> label(n);
  auto rec = [&](auto&& self, int i, int maxlab) -> void {
    if (i == n) {
      std::map<int, std::vector<int>> groups;
      for (int j = 0; j < n; j++) groups[label[j]].push_back(j + 1);
      std::vector<std::vector<int>> blocks;
      for (auto& [l, b] : groups) blocks.push_back(b);
      out.emplace_back(n, std::move(blocks));
      return;
    }
    for (int l = 0; l <= maxlab + 1; l++) {
      label[i] = l;
      self(self, i + 1, std::max(maxlab, l));
    }
  };
  if (n == 0) return out;
  rec(rec, 0, -1);
  return out;
}

// Moebius function of the refinement lattice: zero unless A refines B; on
// an interval it is the signed product of factorials counting how the
// blocks of A merge into each block of B.
inline long long mobius(const SetPartition& A, const SetPartition& B) {
  if (!A.refines(B)) return 0;
  long long m = 1;
  int ra = A.num_blocks(), rb = B.num_blocks();
  for (const auto& blk : B.blocks()) {
    std::vector<bool> counted(A.num_blocks(), false);
    int inner = 0;
    for (int x : blk) {
      int ba = A.block_of(x);
      if (!counted[ba]) {
        counted[ba] = true;
        inner++;
      }
    }
    m *= factorial(inner - 1);
  }
  return ((ra - rb) % 2 == 0) ? m : -m;
}

}  // namespace yhe
