#pragma once

// Tableaux and multitableaux: fillings, standardness, the map d(t) to the
// symmetric group, restriction shapes and the dominance order.

#include <yhe/partitions.hpp>

#include <optional>

namespace yhe {

using Tableau = std::vector<std::vector<int>>;  // rows of entries

inline Partition tableau_shape(const Tableau& t) {
  Partition p;
  for (const auto& row : t) p.push_back((int)row.size());
  return p;
}

inline bool tableau_row_standard(const Tableau& t) {
  for (const auto& row : t)
    for (size_t j = 1; j < row.size(); j++)
      if (row[j - 1] >= row[j]) return false;
  return true;
}

inline bool tableau_standard(const Tableau& t) {
  if (!tableau_row_standard(t)) return false;
  for (size_t i = 1; i < t.size(); i++)
    for (size_t j = 0; j < t[i].size(); j++)
      if (j >= t[i - 1].size() || t[i - 1][j] >= t[i][j]) return false;
  return true;
}

struct MultiTableau {
  std::vector<Tableau> comp;

  int r() const { return (int)comp.size(); }
  MultiPartition shape() const {
    MultiPartition mp;
    for (const auto& t : comp) mp.comp.push_back(tableau_shape(t));
    return mp;
  }
  int size() const {
    int s = 0;
    for (const auto& t : comp)
      for (const auto& row : t) s += (int)row.size();
    return s;
  }
  bool row_standard() const {
    for (const auto& t : comp)
      if (!tableau_row_standard(t)) return false;
    return true;
  }
  bool standard() const {
    for (const auto& t : comp)
      if (!tableau_standard(t)) return false;
    return true;
  }

  // Component index (1-based) holding the entry j.
  int p(int j) const {
    for (int i = 0; i < r(); i++)
      for (const auto& row : comp[i])
        for (int x : row)
          if (x == j) return i + 1;
    assert(false);
    return -1;
  }

  // Column minus row (0-based) of the node holding j.
  int res(int j) const {
    for (const auto& t : comp)
      for (size_t x = 0; x < t.size(); x++)
        for (size_t y = 0; y < t[x].size(); y++)
          if (t[x][y] == j) return (int)y - (int)x;
    assert(false);
    return 0;
  }

  int min_entry(int component) const {
    int m = INT32_MAX;
    for (const auto& row : comp[component])
      for (int x : row) m = std::min(m, x);
    return m;
  }

  // Apply a permutation to the entries (the right action t -> t.w).
  MultiTableau act(const Perm& w) const {
    MultiTableau out = *this;
    for (auto& t : out.comp)
      for (auto& row : t)
        for (int& x : row) x = w.of(x);
    return out;
  }

  // Shape of the restriction to entries <= m (a prefix of each row when the
  // tableau is row standard).
  std::vector<Composition> restricted_shape(int m) const {
    std::vector<Composition> out;
    for (const auto& t : comp) {
      Composition c;
      for (const auto& row : t) {
        int k = 0;
        for (int x : row)
          if (x <= m) k++;
        c.push_back(k);
      }
      out.push_back(c);
    }
    return out;
  }

  friend bool operator==(const MultiTableau& a, const MultiTableau& b) {
    return a.comp == b.comp;
  }
  friend auto operator<=>(const MultiTableau& a, const MultiTableau& b) {
    return a.comp <=> b.comp;
  }
  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < r(); i++) {
      if (i) os << "|";
      for (size_t x = 0; x < comp[i].size(); x++) {
        if (x) os << ";";
        for (size_t y = 0; y < comp[i][x].size(); y++)
          os << (y ? "," : "") << comp[i][x][y];
      }
    }
    os << ")";
    return os.str();
  }
};

// The canonical filling 1, 2, ... along the rows, component by component.
inline MultiTableau t_canonical(const MultiPartition& shape) {
  MultiTableau t;
  int next = 1;
  for (const auto& p : shape.comp) {
    Tableau tab;
    for (int len : p) {
      std::vector<int> row(len);
      std::iota(row.begin(), row.end(), next);
      next += len;
      tab.push_back(row);
    }
    t.comp.push_back(tab);
  }
  return t;
}

inline Tableau t_canonical(const Partition& shape) {
  return t_canonical(MultiPartition{{shape}}).comp[0];
}

// The permutation d with t = t_canonical(shape).d: reads off the entries of
// t in the canonical reading order.
inline Perm tableau_d(const MultiTableau& t) {
  std::vector<int> img;
  for (const auto& tab : t.comp)
    for (const auto& row : tab)
      for (int x : row) img.push_back(x);
  return Perm(img);
}

inline Perm tableau_d(const Tableau& t) { return tableau_d(MultiTableau{{t}}); }

// Dominance on row-standard multitableaux of the same size and number of
// components: compare restriction shapes at every level.
inline Cmp dominance(const MultiTableau& a, const MultiTableau& b) {
  if (a.size() != b.size() || a.r() != b.r()) return Cmp::incomparable;
  int n = a.size();
  bool ge = true, le = true;
  for (int m = 1; m <= n; m++) {
    Cmp c = dominance(a.restricted_shape(m), b.restricted_shape(m));
    if (c == Cmp::incomparable) return Cmp::incomparable;
    if (c == Cmp::less) ge = false;
    if (c == Cmp::greater) le = false;
  }
  if (ge && le) return Cmp::equal;
  if (ge) return Cmp::greater;
  if (le) return Cmp::less;
  return Cmp::incomparable;
}

// Named separately: Tableau and std::vector<Composition> are the same type,
// so an overload would collide with the multicomposition order above.
inline Cmp tableau_dominance(const Tableau& a, const Tableau& b) {
  return dominance(MultiTableau{{a}}, MultiTableau{{b}});
}

// All standard multitableaux of the given shape, by placing n, n-1, ... at
// removable nodes.  Deterministic order.
inline std::vector<MultiTableau> enumerate_std(const MultiPartition& shape) {
  int n = shape.size();
  std::vector<MultiTableau> out;
  MultiTableau cur;
  for (const auto& p : shape.comp) {
    Tableau tab;
    for (int len : p) tab.push_back(std::vector<int>(len, 0));
    cur.comp.push_back(tab);
  }
  // fill[c][row] = number of already placed entries in that row
  std::vector<std::vector<int>> fill;
  for (const auto& p : shape.comp) fill.push_back(std::vector<int>(p.size(), 0));
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c < shape.r(); c++) {
      for (size_t row = 0; row < shape.comp[c].size(); row++) {
        int col = fill[c][row];
        if (col >= shape.comp[c][row]) continue;            // row full
        if (row > 0 && fill[c][row - 1] <= col) continue;   // column condition
        cur.comp[c][row][col] = next;
        fill[c][row]++;
        self(self, next + 1);
        fill[c][row]--;
        cur.comp[c][row][col] = 0;
      }
    }
  };
  rec(rec, 1);
  return out;
}

inline std::vector<Tableau> enumerate_std(const Partition& shape) {
  std::vector<Tableau> out;
  for (auto& mt : enumerate_std(MultiPartition{{shape}})) out.push_back(mt.comp[0]);
  return out;
}

// All row-standard multitableaux: distribute {1..n} over the rows and sort
// each row increasingly.
inline std::vector<MultiTableau> enumerate_row_standard(const MultiPartition& shape) {
  int n = shape.size();
  std::vector<int> rows = shape.rows();
  std::vector<MultiTableau> out;
  std::vector<std::vector<int>> chosen(rows.size());
  std::vector<bool> used(n + 1, false);
  auto assemble = [&]() {
    MultiTableau t;
    size_t k = 0;
    for (const auto& p : shape.comp) {
      Tableau tab;
      for (size_t i = 0; i < p.size(); i++) tab.push_back(chosen[k++]);
      t.comp.push_back(tab);
    }
    out.push_back(t);
  };
  auto rec = [&](auto&& self, size_t rowidx) -> void {
    if (rowidx == rows.size()) {
      assemble();
      return;
    }
    // choose an increasing sequence of unused numbers for this row
    std::vector<int> row;
    auto pick = [&](auto&& self2, int minv, int need) -> void {
      if (need == 0) {
        chosen[rowidx] = row;
        self(self, rowidx + 1);
        return;
      }
      for (int v = minv; v <= n; v++) {
        if (used[v]) continue;
        used[v] = true;
        row.push_back(v);
        self2(self2, v + 1, need - 1);
        row.pop_back();
        used[v] = false;
      }
    };
    pick(pick, 1, rows[rowidx]);
  };
  rec(rec, 0);
  return out;
}

}  // namespace yhe
