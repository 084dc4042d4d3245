#pragma once

// Partitions, compositions, multipartitions, dominance orders and the
// counting formulas used throughout.

#include <yhe/perm.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace yhe {

using Partition = std::vector<int>;    // weakly decreasing positive parts
using Composition = std::vector<int>;  // nonnegative parts, zeros allowed

enum class Cmp { less, greater, equal, incomparable };

inline Cmp cmp_flip(Cmp c) {
  if (c == Cmp::less) return Cmp::greater;
  if (c == Cmp::greater) return Cmp::less;
  return c;
}

inline long long comp_sum(const Composition& a) {
  long long s = 0;
  for (int x : a) s += x;
  return s;
}

// Dominance on compositions: prefix sums compare at every index, zero parts
// appended as needed.  (Totals need not agree; the multicomposition order
// below compares components of different sizes.)
inline Cmp dominance(const Composition& a, const Composition& b) {
  size_t m = std::max(a.size(), b.size());
  bool ge = true, le = true;
  long long sa = 0, sb = 0;
  for (size_t i = 0; i < m; i++) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return Cmp::equal;
  if (ge) return Cmp::greater;
  if (le) return Cmp::less;
  return Cmp::incomparable;
}

struct MultiPartition {
  std::vector<Partition> comp;  // empty components allowed

  int r() const { return (int)comp.size(); }
  int size() const {
    int s = 0;
    for (const auto& p : comp)
      for (int x : p) s += x;
    return s;
  }
  // The composition of component sizes |lambda^(1)|, ..., |lambda^(r)|.
  Composition norm() const {
    Composition c;
    for (const auto& p : comp) {
      int s = 0;
      for (int x : p) s += x;
      c.push_back(s);
    }
    return c;
  }
  // All rows, concatenated in component order (used for Young subgroups).
  Composition rows() const {
    Composition c;
    for (const auto& p : comp)
      for (int x : p) c.push_back(x);
    return c;
  }
  friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
    return a.comp == b.comp;
  }
  friend auto operator<=>(const MultiPartition& a, const MultiPartition& b) {
    return a.comp <=> b.comp;
  }
  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < r(); i++) {
      if (i) os << "|";
      for (size_t j = 0; j < comp[i].size(); j++) os << (j ? "," : "") << comp[i][j];
    }
    os << ")";
    return os.str();
  }
};

// Dominance on multicompositions with the same number of components:
// componentwise comparison.
inline Cmp dominance(const std::vector<Composition>& a, const std::vector<Composition>& b) {
  if (a.size() != b.size()) return Cmp::incomparable;
  bool ge = true, le = true;
  for (size_t i = 0; i < a.size(); i++) {
    Cmp c = dominance(a[i], b[i]);
    if (c == Cmp::incomparable) return Cmp::incomparable;
    if (c == Cmp::less) ge = false;
    if (c == Cmp::greater) le = false;
  }
  if (ge && le) return Cmp::equal;
  if (ge) return Cmp::greater;
  if (le) return Cmp::less;
  return Cmp::incomparable;
}

inline Cmp dominance(const MultiPartition& a, const MultiPartition& b) {
  std::vector<Composition> ca(a.comp.begin(), a.comp.end());
  std::vector<Composition> cb(b.comp.begin(), b.comp.end());
  return dominance(ca, cb);
}

// The fixed total order on partitions extending dominance: compare by size
// first, then lexicographically on parts (larger first part wins).
inline bool part_less(const Partition& a, const Partition& b) {
  long long sa = comp_sum(a), sb = comp_sum(b);
  if (sa != sb) return sa < sb;
  return a < b;  // lexicographic; dominance a > b implies a > b lexicographically
}

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; p--) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Compositions of n into exactly r nonnegative parts.
inline std::vector<Composition> compositions_into(int n, int r) {
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto&& self, int rest, int slots) -> void {
    if (slots == 1) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int p = 0; p <= rest; p++) {
      cur.push_back(p);
      self(self, rest - p, slots - 1);
      cur.pop_back();
    }
  };
  if (r >= 1) rec(rec, n, r);
  return out;
}

inline std::vector<MultiPartition> enumerate_multipartitions(int r, int n) {
  std::vector<MultiPartition> out;
  MultiPartition cur;
  auto rec = [&](auto&& self, int slot, int rest) -> void {
    if (slot == r) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int s = 0; s <= rest; s++) {
      for (const auto& p : all_partitions(s)) {
        cur.comp.push_back(p);
        self(self, slot + 1, rest - s);
        cur.comp.pop_back();
      }
    }
  };
  rec(rec, 0, n);
  return out;
}

// "red": delete all zero parts / empty components, keeping the order.
inline Composition red(const Composition& c) {
  Composition out;
  for (int x : c)
    if (x > 0) out.push_back(x);
  return out;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; i++) f *= i;
  return f;
}

inline long long multinomial(int n, const Composition& parts) {
  long long f = factorial(n);
  for (int p : parts) f /= factorial(p);
  return f;
}

// Number of standard tableaux of a partition shape, by the hook length formula.
inline long long std_count(const Partition& p) {
  int n = 0;
  for (int x : p) n += x;
  long long denom = 1;
  for (size_t i = 0; i < p.size(); i++) {
    for (int j = 0; j < p[i]; j++) {
      int arm = p[i] - j - 1;
      int leg = 0;
      for (size_t k = i + 1; k < p.size(); k++)
        if (p[k] > j) leg++;
      denom *= arm + leg + 1;
    }
  }
  return factorial(n) / denom;
}

inline long long std_count(const MultiPartition& mp) {
  long long c = multinomial(mp.size(), mp.norm());
  for (const auto& p : mp.comp) c *= std_count(p);
  return c;
}

// Faa di Bruno coefficient: the number of set partitions of {1..n} whose
// block sizes form the partition alpha.
inline long long faa_di_bruno(const Partition& alpha) {
  int n = 0;
  for (int x : alpha) n += x;
  long long denom = 1;
  size_t i = 0;
  while (i < alpha.size()) {
    size_t j = i;
    while (j < alpha.size() && alpha[j] == alpha[i]) j++;
    int mult = (int)(j - i);
    for (int t = 0; t < mult; t++) denom *= factorial(alpha[i]);
    denom *= factorial(mult);
    i = j;
  }
  return factorial(n) / denom;
}

inline std::string partition_str(const Partition& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); i++) os << (i ? "," : "") << p[i];
  return os.str();
}

}  // namespace yhe
