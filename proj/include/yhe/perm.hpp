#pragma once

// The symmetric group S_n acting on {1..n} on the right.  Composition is
// left-to-right: (u*v)(j) = v(u(j)), so that j.(u*v) = (j.u).v.

#include <algorithm>
#include <cassert>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace yhe {

class Perm {
 public:
  Perm() = default;
  explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {}

  static Perm identity(int n) { return Perm(n); }

  // Adjacent transposition s_i = (i, i+1), 1 <= i < n.
  static Perm s(int n, int i) {
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  // Transposition (a, b).
  static Perm transposition(int n, int a, int b) {
    Perm p(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  int n() const { return (int)img_.size(); }
  const std::vector<int>& images() const { return img_; }

  int of(int j) const { return img_[j - 1]; }

  bool is_identity() const {
    for (int j = 1; j <= n(); j++)
      if (of(j) != j) return false;
    return true;
  }

  Perm inverse() const {
    Perm p(*this);
    for (int j = 1; j <= n(); j++) p.img_[of(j) - 1] = j;
    return p;
  }

  friend Perm operator*(const Perm& u, const Perm& v) {
    assert(u.n() == v.n());
    Perm p(u);
    for (int j = 1; j <= u.n(); j++) p.img_[j - 1] = v.of(u.of(j));
    return p;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

  int length() const {
    int inv = 0;
    for (int i = 0; i < n(); i++)
      for (int j = i + 1; j < n(); j++)
        if (img_[i] > img_[j]) inv++;
    return inv;
  }

  // True iff l(w * s_i) = l(w) + 1, i.e. the value i occurs before i+1.
  bool right_ascent(int i) const {
    return inverse_position(i) < inverse_position(i + 1);
  }

  // Deterministic reduced word: repeatedly remove the smallest descent at
  // the left (insertion-sort order).  Applying s at the returned indices in
  // list order, starting from the identity, reproduces w.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    std::vector<int> a = img_;
    while (true) {
      int i = -1;
      for (int k = 0; k + 1 < (int)a.size(); k++)
        if (a[k] > a[k + 1]) { i = k; break; }
      if (i < 0) break;
      word.push_back(i + 1);
      std::swap(a[i], a[i + 1]);
    }
    return word;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n(); i++) os << (i ? "," : "") << img_[i];
    os << "]";
    return os.str();
  }

  // Cycle notation, fixed points omitted; "()" for the identity.
  std::string cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(n(), false);
    bool any = false;
    for (int j = 1; j <= n(); j++) {
      if (seen[j - 1] || of(j) == j) continue;
      os << "(" << j;
      seen[j - 1] = true;
      for (int k = of(j); k != j; k = of(k)) {
        os << " " << k;
        seen[k - 1] = true;
      }
      os << ")";
      any = true;
    }
    if (!any) os << "()";
    return os.str();
  }

 private:
  int inverse_position(int value) const {
    for (int j = 0; j < n(); j++)
      if (img_[j] == value) return j;
    assert(false);
    return -1;
  }

  std::vector<int> img_;
};

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

// Young subgroup and distinguished coset representatives.  The subgroup is
// given by a composition: consecutive intervals I_1 = {1..c_1}, I_2 = ... of
// {1..n} (zero parts allowed, they contribute empty intervals).
struct CosetDecomposition {
  Perm y;  // in the Young subgroup
  Perm d;  // distinguished (minimal length) right coset representative
};

// Splits w = y*d with y preserving each interval and d increasing on each
// interval; lengths add.
inline CosetDecomposition coset_decompose(const Perm& w, const std::vector<int>& comp) {
  int n = w.n();
  // Interval I_j maps increasingly onto sorted w(I_j).
  std::vector<int> img(n);
  int start = 1;
  for (int part : comp) {
    std::vector<int> targets;
    for (int a = start; a < start + part; a++) targets.push_back(w.of(a));
    std::sort(targets.begin(), targets.end());
    for (int k = 0; k < part; k++) img[start - 1 + k] = targets[k];
    start += part;
  }
  assert(start == n + 1);
  Perm d(img);
  Perm y = w * d.inverse();
  assert((y * d) == w);
  assert(y.length() + d.length() == w.length());
  return {y, d};
}

}  // namespace yhe
