#pragma once

// The algebra of braids and ties E_n(q) in its normal form basis
// { E_A g_w }: elements, generator arithmetic, the Moebius idempotents,
// the block-transposition elements and the cellular basis indexed by
// shapes (lambda | mu).  Scalars live over the rationals (r = 1), since
// no roots of unity enter the defining relations.

#include <yhe/lambda.hpp>
#include <yhe/linalg.hpp>
#include <yhe/yokonuma.hpp>

namespace yhe {

class EtElement {
 public:
  // (set partition, permutation) -> coefficient
  using Key = std::pair<SetPartition, Perm>;

  explicit EtElement(int n) : n_(n) {}

  static EtElement zero(int n) { return EtElement(n); }
  static EtElement one(int n) {
    EtElement a(n);
    a.add_term(SetPartition(n), Perm::identity(n), Scalar::one(1));
    return a;
  }
  static EtElement g_of(int n, const Perm& w) {
    EtElement a(n);
    a.add_term(SetPartition(n), w, Scalar::one(1));
    return a;
  }
  static EtElement g_gen(int n, int i) { return g_of(n, Perm::s(n, i)); }
  static EtElement e_pair(int n, int i, int j) {
    EtElement a(n);
    a.add_term(SetPartition(n).join_pair(i, j), Perm::identity(n), Scalar::one(1));
    return a;
  }
  static EtElement e_gen(int n, int i) { return e_pair(n, i, i + 1); }
  static EtElement E_of(const SetPartition& A) {
    EtElement a(A.n());
    a.add_term(A, Perm::identity(A.n()), Scalar::one(1));
    return a;
  }
  // g_i^{-1} = g_i + (q^{-1} - q) e_i
  static EtElement g_inv(int n, int i) {
    return g_gen(n, i) + e_gen(n, i).scaled(-Scalar::q_minus_qinv(1));
  }

  int n() const { return n_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SetPartition& A, const Perm& w, const Scalar& c) {
    if (c.is_zero()) return;
    Key key{A, w};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const EtElement& a, const EtElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const EtElement& a, const EtElement& b) { return !(a == b); }

  EtElement operator-() const { return scaled(-Scalar::one(1)); }
  EtElement scaled(const Scalar& c) const {
    EtElement a(n_);
    for (const auto& [key, x] : terms_) a.add_term(key.first, key.second, x * c);
    return a;
  }
  friend EtElement operator+(const EtElement& a, const EtElement& b) {
    assert(a.n_ == b.n_);
    EtElement s = a;
    for (const auto& [key, c] : b.terms_) s.add_term(key.first, key.second, c);
    return s;
  }
  friend EtElement operator-(const EtElement& a, const EtElement& b) { return a + (-b); }
  EtElement& operator+=(const EtElement& b) { return *this = *this + b; }
  EtElement& operator-=(const EtElement& b) { return *this = *this - b; }

  // Right multiplication by E_B: (E_A g_w) E_B = E_{A v (B w^{-1})} g_w.
  EtElement rmul_E(const SetPartition& B) const {
    EtElement out(n_);
    for (const auto& [key, c] : terms_)
      out.add_term(join(key.first, B.act(key.second.inverse())), key.second, c);
    return out;
  }

  // Right multiplication by g_i:
  // (E_A g_w) g_i = E_A g_{w s_i}                               if l(w s_i) > l(w)
  //              = E_A g_{w s_i} + (q-q^-1) E_{A v {a,b}} g_w   otherwise,
  // with {a,b} = {i w^{-1}, (i+1) w^{-1}}.
  EtElement rmul_g(int i) const {
    EtElement out(n_);
    Scalar dq = Scalar::q_minus_qinv(1);
    for (const auto& [key, c] : terms_) {
      const Perm& w = key.second;
      out.add_term(key.first, w * Perm::s(n_, i), c);
      if (!w.right_ascent(i)) {
        Perm winv = w.inverse();
        out.add_term(key.first.join_pair(winv.of(i), winv.of(i + 1)), w, c * dq);
      }
    }
    return out;
  }

  friend EtElement operator*(const EtElement& a, const EtElement& b) {
    assert(a.n_ == b.n_);
    EtElement out(a.n_);
    for (const auto& [key, c] : b.terms_) {
      EtElement part = a.scaled(c).rmul_E(key.first);
      for (int i : key.second.reduced_word()) part = part.rmul_g(i);
      out += part;
    }
    return out;
  }
  EtElement& operator*=(const EtElement& b) { return *this = *this * b; }

  // The antiautomorphism fixing e_i and g_i: E_A g_w -> E_{Aw} g_{w^{-1}}.
  EtElement star() const {
    EtElement out(n_);
    for (const auto& [key, c] : terms_)
      out.add_term(key.first.act(key.second), key.second.inverse(), c);
    return out;
  }

  std::string str() const;  // defined in parse.hpp alongside the grammar

 private:
  int n_;
  std::map<Key, Scalar> terms_;
};

// ---- Moebius idempotents ------------------------------------------------

// The orthogonal idempotent attached to A: the Moebius-inverted sum of the
// E_B over coarsenings B of A.
inline EtElement ebb_of(const SetPartition& A) {
  EtElement out(A.n());
  for (const SetPartition& B : all_setpartitions(A.n())) {
    long long mu = mobius(A, B);
    if (mu) out.add_term(B, Perm::identity(A.n()), Scalar::from_rat(1, Rat((long)mu)));
  }
  return out;
}

// The central idempotent attached to a block-size type.
inline EtElement ebb_alpha(int n, const Partition& alpha) {
  EtElement out(n);
  for (const SetPartition& A : all_setpartitions(n))
    if (A.type() == alpha) out += ebb_of(A);
  return out;
}

// ---- block transpositions and the cellular basis ------------------------

// The Murphy sum over the row stabilizer of the canonical multitableau.
inline EtElement et_x_of(const MultiPartition& shape) {
  int n = shape.size();
  EtElement x(n);
  for (const Perm& w : run_preserving_perms(n, red(shape.rows())))
    x.add_term(SetPartition(n), w, Scalar::q_pow(1, w.length()));
  return x;
}

// The element interchanging the equally sized consecutive blocks i, i+1 of
// the canonical set partition of the shape, written as a g-word behind the
// Moebius idempotent.
inline EtElement bbb_gen(const LambdaShape& L, int i) {
  Composition sizes = L.norm();
  assert(i >= 1 && i < (int)sizes.size() && sizes[i - 1] == sizes[i]);
  int c = 0;
  for (int j = 0; j < i - 1; j++) c += sizes[j];
  int a = sizes[i - 1];
  EtElement out = ebb_of(L.A());
  for (int col = 1; col <= a; col++)
    for (int k = a + col - 1; k >= col; k--) out = out.rmul_g(k + c);
  return out;
}

// For y a block permutation preserving sizes, the product of the
// generators along a reduced word; well defined since the generators
// satisfy the symmetric group relations with unit ebb_of(A).
inline EtElement bbb_of(const LambdaShape& L, const Perm& y) {
  EtElement out = ebb_of(L.A());
  for (int i : y.reduced_word()) out *= bbb_gen(L, i);
  return out;
}

// The subgroup elements of the block permutations fixing components, as a
// global permutation of the component indices, from one permutation per
// run of equal components.
inline Perm assemble_block_perm(const LambdaShape& L, const std::vector<Perm>& per_run) {
  auto runs = L.runs_equal_component();
  assert(per_run.size() == runs.size());
  std::vector<int> img(L.m());
  int off = 0;
  for (size_t j = 0; j < runs.size(); j++) {
    for (int k = 1; k <= runs[j]; k++) img[off + k - 1] = off + per_run[j].of(k);
    off += runs[j];
  }
  return Perm(img);
}

// b_mu: the product over runs of the q=1 Murphy sums of the mu-partitions,
// realized inside the algebra through the block transpositions.
inline EtElement b_mu(const LambdaShape& L) {
  EtElement out = ebb_of(L.A());
  auto runs = L.runs_equal_component();
  int off = 0;
  for (size_t j = 0; j < runs.size(); j++) {
    EtElement sum(L.n());
    for (const Perm& u : run_preserving_perms(runs[j], red(L.mu[j]))) {
      std::vector<Perm> per_run;
      for (size_t l = 0; l < runs.size(); l++)
        per_run.push_back(l == j ? u : Perm::identity(runs[l]));
      sum += bbb_of(L, assemble_block_perm(L, per_run));
    }
    out *= sum;
    off += runs[j];
  }
  return out;
}

inline EtElement et_m_of(const LambdaShape& L) {
  return ebb_of(L.A()) * et_x_of(L.lambda) * b_mu(L);
}

// The global block permutation d(u) of a tableau tuple u, one factor per
// run of equal components.
inline Perm d_of_u(const LambdaShape& L, const std::vector<Tableau>& u) {
  std::vector<Perm> per_run;
  for (const auto& ui : u) per_run.push_back(tableau_d(ui));
  return assemble_block_perm(L, per_run);
}

// m_st = g_{d(s)}^* ebb_A B_{d(u)}^* x_lambda b_mu B_{d(v)} g_{d(t)} for
// row standard Lambda-tableaux s = (s|u), t = (t|v).
inline EtElement et_m_cell(const LambdaShape& L, const LambdaTableau& s, const LambdaTableau& t) {
  int n = L.n();
  return EtElement::g_of(n, tableau_d(s.t).inverse()) * ebb_of(L.A()) *
         bbb_of(L, d_of_u(L, s.u)).star() * et_x_of(L.lambda) * b_mu(L) *
         bbb_of(L, d_of_u(L, t.u)) * EtElement::g_of(n, tableau_d(t.t));
}

// ---- coordinates in the normal form basis -------------------------------

class EtCoords {
 public:
  explicit EtCoords(int n) : n_(n), perms_(all_perms(n)), parts_(all_setpartitions(n)) {
    for (size_t i = 0; i < perms_.size(); i++) perm_index_[perms_[i]] = (int)i;
    for (size_t i = 0; i < parts_.size(); i++) part_index_[parts_[i]] = (int)i;
  }

  int dim() const { return (int)(perms_.size() * parts_.size()); }

  int index(const SetPartition& A, const Perm& w) const {
    return part_index_.at(A) * (int)perms_.size() + perm_index_.at(w);
  }

  SVec vec(const EtElement& a) const {
    SVec v;
    for (const auto& [key, c] : a.terms()) v.emplace(index(key.first, key.second), Frac(c));
    return v;
  }

 private:
  int n_;
  std::vector<Perm> perms_;
  std::vector<SetPartition> parts_;
  std::map<Perm, int> perm_index_;
  std::map<SetPartition, int> part_index_;
};

struct EtCellLabel {
  LambdaShape shape;
  LambdaTableau s, t;
};

inline std::vector<EtCellLabel> et_cell_labels(int n) {
  std::vector<EtCellLabel> out;
  for (const auto& L : enumerate_lambda_shapes(n)) {
    auto tabs = enumerate_std_lambda(L);
    for (const auto& s : tabs)
      for (const auto& t : tabs) out.push_back({L, s, t});
  }
  return out;
}

// ---- the homomorphism into the Yokonuma-Hecke algebra -------------------

// e_i -> e_i, g_i -> g_i; an embedding when r >= n.
inline YElement phi(int r, const EtElement& a) {
  int n = a.n();
  YElement out(r, n);
  for (const auto& [key, c] : a.terms())
    out += (YElement::E_of(r, key.first) * YElement::g_of(r, n, key.second))
               .scaled(embed_scalar(c, r));
  return out;
}

// ---- wreath decomposition helpers ---------------------------------------

// The orbit of the distinguished coset representative of d(s) under the
// size-preserving block permutations, labelled by a set partition.
inline SetPartition orbit_label(const LambdaShape& L, const LambdaTableau& s) {
  return L.A().act(initial_decompose(s.t).w);
}

// The tableau with the multitableau part replaced by its initial-kind part.
inline LambdaTableau initial_part(const LambdaTableau& s) {
  LambdaTableau out = s;
  out.t = initial_decompose(s.t).s0;
  return out;
}

}  // namespace yhe
