#pragma once

// The Yokonuma-Hecke algebra Y_{r,n}(q) in its normal form basis
// { t_1^{k_1} ... t_n^{k_n} g_w }: elements, generator arithmetic, the
// idempotents e_{ij} and E_A, the cell elements m_{st} and Jucys-Murphy
// elements.

#include <yhe/lambda.hpp>
#include <yhe/linalg.hpp>

namespace yhe {

class YElement {
 public:
  // (t-exponent vector mod r, permutation) -> coefficient
  using Key = std::pair<std::vector<int>, Perm>;

  YElement(int r, int n) : r_(r), n_(n) {}

  static YElement zero(int r, int n) { return YElement(r, n); }
  static YElement one(int r, int n) {
    YElement a(r, n);
    a.add_term(std::vector<int>(n, 0), Perm::identity(n), Scalar::one(r));
    return a;
  }
  // t_j^k
  static YElement t_pow(int r, int n, int j, long k) {
    YElement a(r, n);
    std::vector<int> tv(n, 0);
    tv[j - 1] = (int)(((k % r) + r) % r);
    a.add_term(tv, Perm::identity(n), Scalar::one(r));
    return a;
  }
  static YElement t_gen(int r, int n, int j) { return t_pow(r, n, j, 1); }
  static YElement g_of(int r, int n, const Perm& w) {
    YElement a(r, n);
    a.add_term(std::vector<int>(n, 0), w, Scalar::one(r));
    return a;
  }
  static YElement g_gen(int r, int n, int i) { return g_of(r, n, Perm::s(n, i)); }
  // g_i^{-1} = g_i + (q^{-1} - q) e_i
  static YElement g_inv(int r, int n, int i) {
    return g_gen(r, n, i) + e_gen(r, n, i).scaled(-Scalar::q_minus_qinv(r));
  }
  // e_{ij} = (1/r) sum_s t_i^s t_j^{-s}
  static YElement e_pair(int r, int n, int i, int j) {
    YElement a(r, n);
    Scalar inv_r(r, Rat(1, r));
    for (int s = 0; s < r; s++) {
      std::vector<int> tv(n, 0);
      tv[i - 1] = (tv[i - 1] + s) % r;
      tv[j - 1] = (tv[j - 1] + (r - s)) % r;
      if (i == j) tv[i - 1] = 0;
      a.add_term(tv, Perm::identity(n), inv_r);
    }
    return a;
  }
  static YElement e_gen(int r, int n, int i) { return e_pair(r, n, i, i + 1); }
  // E_A = product of e_{ij} over pairs inside the blocks of A
  static YElement E_of(int r, const SetPartition& A) {
    int n = A.n();
    YElement a = one(r, n);
    for (const auto& blk : A.blocks())
      for (size_t x = 0; x < blk.size(); x++)
        for (size_t y = x + 1; y < blk.size(); y++)
          a *= e_pair(r, n, blk[x], blk[y]);
    return a;
  }
  // eigenspace projector u_{ik} = (1/r) sum_j xi^{-jk} t_i^j
  static YElement u_proj(int r, int n, int i, long k) {
    YElement a(r, n);
    for (int j = 0; j < r; j++) {
      std::vector<int> tv(n, 0);
      tv[i - 1] = j;
      a.add_term(tv, Perm::identity(n), Scalar(r, Rat(1, r)) * Scalar::zeta_pow(r, -(long)j * k));
    }
    return a;
  }
  // the twisted generator g_i + (q-1) e_i g_i
  static YElement g_twisted(int r, int n, int i) {
    YElement correction = e_gen(r, n, i) * g_gen(r, n, i);
    return g_gen(r, n, i) + correction.scaled(Scalar::q(r) - Scalar::one(r));
  }

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& tv, const Perm& w, const Scalar& c) {
    if (c.is_zero()) return;
    Key key{tv, w};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const YElement& a, const YElement& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const YElement& a, const YElement& b) { return !(a == b); }

  YElement operator-() const { return scaled(-Scalar::one(r_)); }
  YElement scaled(const Scalar& c) const {
    YElement a(r_, n_);
    for (const auto& [key, x] : terms_) a.add_term(key.first, key.second, x * c);
    return a;
  }
  friend YElement operator+(const YElement& a, const YElement& b) {
    assert(a.r_ == b.r_ && a.n_ == b.n_);
    YElement s = a;
    for (const auto& [key, c] : b.terms_) s.add_term(key.first, key.second, c);
    return s;
  }
  friend YElement operator-(const YElement& a, const YElement& b) { return a + (-b); }
  YElement& operator+=(const YElement& b) { return *this = *this + b; }
  YElement& operator-=(const YElement& b) { return *this = *this - b; }

  // Right multiplication by t_j^p in normal form:
  // (t^k g_w) t_j = t^{k'} g_w with the extra power attached at j w^{-1}.
  YElement rmul_t_pow(int j, int p) const {
    p = ((p % r_) + r_) % r_;
    YElement out(r_, n_);
    for (const auto& [key, c] : terms_) {
      std::vector<int> tv = key.first;
      int a = key.second.inverse().of(j);
      tv[a - 1] = (tv[a - 1] + p) % r_;
      out.add_term(tv, key.second, c);
    }
    return out;
  }

  // Right multiplication by g_i:
  // (t^k g_w) g_i = t^k g_{w s_i}                       when l(w s_i) > l(w)
  //              = t^k g_{w s_i} + (q-q^-1) t^k e_{ab} g_w  otherwise,
  // with {a,b} = {i w^{-1}, (i+1) w^{-1}}.
  YElement rmul_g(int i) const {
    YElement out(r_, n_);
    Scalar dq = Scalar::q_minus_qinv(r_);
    Scalar inv_r(r_, Rat(1, r_));
    for (const auto& [key, c] : terms_) {
      const Perm& w = key.second;
      Perm wsi = w * Perm::s(n_, i);
      out.add_term(key.first, wsi, c);
      if (!w.right_ascent(i)) {
        Perm winv = w.inverse();
        int a = winv.of(i), b = winv.of(i + 1);
        Scalar coeff = c * dq * inv_r;
        for (int s = 0; s < r_; s++) {
          std::vector<int> tv = key.first;
          tv[a - 1] = (tv[a - 1] + s) % r_;
          tv[b - 1] = (tv[b - 1] + (r_ - s)) % r_;
          out.add_term(tv, w, coeff);
        }
      }
    }
    return out;
  }

  friend YElement operator*(const YElement& a, const YElement& b) {
    assert(a.r_ == b.r_ && a.n_ == b.n_);
    YElement out(a.r_, a.n_);
    for (const auto& [key, c] : b.terms_) {
      YElement part = a.scaled(c);
      for (int j = 1; j <= a.n_; j++)
        if (key.first[j - 1]) part = part.rmul_t_pow(j, key.first[j - 1]);
      for (int i : key.second.reduced_word()) part = part.rmul_g(i);
      out += part;
    }
    return out;
  }
  YElement& operator*=(const YElement& b) { return *this = *this * b; }

  // The antiautomorphism fixing the generators: t^k g_w -> t^{k'} g_{w^{-1}}
  // with k'_i = k_{i w^{-1}}.
  YElement star() const {
    YElement out(r_, n_);
    for (const auto& [key, c] : terms_) {
      const Perm& w = key.second;
      std::vector<int> tv(n_);
      for (int i = 1; i <= n_; i++) tv[i - 1] = key.first[w.inverse().of(i) - 1];
      out.add_term(tv, w.inverse(), c);
    }
    return out;
  }

  std::string str() const;  // defined in parse.hpp alongside the grammar

 private:
  int r_, n_;
  std::map<Key, Scalar> terms_;
};

// ---- cell module ingredients --------------------------------------------

// x_lambda = sum over the row stabilizer of q^{l(w)} g_w.
inline YElement x_of(int r, const MultiPartition& shape) {
  int n = shape.size();
  YElement x(r, n);
  for (const Perm& w : run_preserving_perms(n, red(shape.rows())))
    x.add_term(std::vector<int>(n, 0), w, Scalar::q_pow(r, w.length()));
  return x;
}

inline SetPartition A_of(const MultiPartition& shape) {
  return SetPartition::consecutive(shape.size(), red(shape.norm()));
}

// U_lambda: one eigenspace projector per nonempty component, taken at the
// first entry of the component in the canonical tableau.
inline YElement U_of(int r, const MultiPartition& shape) {
  int n = shape.size();
  YElement u = YElement::one(r, n);
  int offset = 0;
  for (int j = 1; j <= shape.r(); j++) {
    int size = 0;
    for (int x : shape.comp[j - 1]) size += x;
    if (size > 0) u *= YElement::u_proj(r, n, offset + 1, j);
    offset += size;
  }
  return u;
}

inline YElement m_of(int r, const MultiPartition& shape) {
  return U_of(r, shape) * YElement::E_of(r, A_of(shape)) * x_of(r, shape);
}

// m_{st} = g_{d(s)}^* m_lambda g_{d(t)} for row standard multitableaux.
inline YElement m_cell(int r, const MultiPartition& shape, const MultiTableau& s,
                       const MultiTableau& t) {
  int n = shape.size();
  return YElement::g_of(r, n, tableau_d(s).inverse()) * m_of(r, shape) *
         YElement::g_of(r, n, tableau_d(t));
}

// ---- Jucys-Murphy elements ----------------------------------------------

// J'_1 = 0 and J'_{k+1} = q^{-1} sum_{i<=k} e_{i,k+1} g_{(i,k+1)}.
inline YElement jm_prime(int r, int n, int k) {
  YElement out(r, n);
  if (k == 1) return out;
  for (int i = 1; i < k; i++)
    out += YElement::e_pair(r, n, i, k) * YElement::g_of(r, n, Perm::transposition(n, i, k));
  return out.scaled(Scalar::q_pow(r, -1));
}

// J_1 = 1 and J_{i+1} = g_i J_i g_i.
inline YElement jm(int r, int n, int i) {
  YElement out = YElement::one(r, n);
  for (int k = 1; k < i; k++)
    out = YElement::g_gen(r, n, k) * out * YElement::g_gen(r, n, k);
  return out;
}

// ---- coordinates in the normal form basis -------------------------------

// Deterministic indexing of the r^n n! basis elements t^k g_w.
class YCoords {
 public:
  YCoords(int r, int n) : r_(r), n_(n), perms_(all_perms(n)) {
    for (size_t i = 0; i < perms_.size(); i++) perm_index_[perms_[i]] = (int)i;
  }

  int dim() const {
    int d = (int)perms_.size();
    for (int i = 0; i < n_; i++) d *= r_;
    return d;
  }

  int index(const std::vector<int>& tv, const Perm& w) const {
    int t = 0;
    for (int i = n_ - 1; i >= 0; i--) t = t * r_ + tv[i];
    return t * (int)perms_.size() + perm_index_.at(w);
  }

  SVec vec(const YElement& a) const {
    SVec v;
    for (const auto& [key, c] : a.terms()) v.emplace(index(key.first, key.second), Frac(c));
    return v;
  }

 private:
  int r_, n_;
  std::vector<Perm> perms_;
  std::map<Perm, int> perm_index_;
};

// The full cellular basis, in a deterministic order, with its labels.
struct YCellLabel {
  MultiPartition shape;
  MultiTableau s, t;
};

inline std::vector<YCellLabel> y_cell_labels(int r, int n) {
  std::vector<YCellLabel> out;
  for (const auto& shape : enumerate_multipartitions(r, n)) {
    auto tabs = enumerate_std(shape);
    for (const auto& s : tabs)
      for (const auto& t : tabs) out.push_back({shape, s, t});
  }
  return out;
}

}  // namespace yhe
