#pragma once

// The index set L_n for the ties algebra: pairs (lambda | mu) of an
// increasing multipartition and multiplicity partitions, their tableaux,
// the partial order, and the block-permutation combinatorics (B_y, the
// circle action, initial-kind decompositions).

#include <yhe/setpartition.hpp>
#include <yhe/tableau.hpp>

namespace yhe {

struct LambdaShape {
  MultiPartition lambda;      // increasing, components nonempty
  std::vector<Partition> mu;  // one partition per run of equal components

  int m() const { return lambda.r(); }
  Composition norm() const { return lambda.norm(); }
  int n() const { return lambda.size(); }

  // Multiplicities of equal lambda^(i) (the m_i) as run lengths.
  std::vector<int> runs_equal_component() const {
    std::vector<int> runs;
    int i = 0;
    while (i < m()) {
      int j = i;
      while (j < m() && lambda.comp[j] == lambda.comp[i]) j++;
      runs.push_back(j - i);
      i = j;
    }
    return runs;
  }

  // Multiplicities of equal component sizes (the k_i) as run lengths.
  std::vector<int> runs_equal_size() const {
    Composition sizes = norm();
    std::vector<int> runs;
    int i = 0;
    while (i < m()) {
      int j = i;
      while (j < m() && sizes[j] == sizes[i]) j++;
      runs.push_back(j - i);
      i = j;
    }
    return runs;
  }

  // Block sizes in decreasing order.
  Partition type() const {
    Composition sizes = norm();
    Partition t(sizes.rbegin(), sizes.rend());
    return t;
  }

  // The set partition with consecutive blocks of the component sizes.
  SetPartition A() const { return SetPartition::consecutive(n(), norm()); }

  bool valid() const {
    for (const auto& p : lambda.comp)
      if (p.empty()) return false;
    for (int i = 0; i + 1 < m(); i++)
      if (part_less(lambda.comp[i + 1], lambda.comp[i])) return false;
    auto runs = runs_equal_component();
    if (mu.size() != runs.size()) return false;
    for (size_t i = 0; i < runs.size(); i++)
      if ((int)comp_sum(mu[i]) != runs[i]) return false;
    return true;
  }

  friend bool operator==(const LambdaShape& a, const LambdaShape& b) {
    return a.lambda == b.lambda && a.mu == b.mu;
  }
  friend auto operator<=>(const LambdaShape& a, const LambdaShape& b) {
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    return a.mu <=> b.mu;
  }

  std::string str() const {
    std::ostringstream os;
    os << lambda.str() << "||(";
    for (size_t i = 0; i < mu.size(); i++) os << (i ? "|" : "") << partition_str(mu[i]);
    os << ")";
    return os.str();
  }
};

inline std::vector<LambdaShape> enumerate_lambda_shapes(int n) {
  // partitions of every positive size up to n, sorted by the fixed total order
  std::vector<Partition> pool;
  for (int s = 1; s <= n; s++)
    for (const auto& p : all_partitions(s)) pool.push_back(p);
  std::sort(pool.begin(), pool.end(), part_less);

  std::vector<LambdaShape> out;
  std::vector<Partition> seq;
  auto emit = [&]() {
    LambdaShape base;
    base.lambda.comp = seq;
    auto runs = base.runs_equal_component();
    // all choices of one partition per multiplicity
    std::vector<std::vector<Partition>> choices;
    for (int run : runs) choices.push_back(all_partitions(run));
    std::vector<size_t> idx(runs.size(), 0);
    while (true) {
      LambdaShape L = base;
      for (size_t i = 0; i < runs.size(); i++) L.mu.push_back(choices[i][idx[i]]);
      assert(L.valid());
      out.push_back(L);
      size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  };
  auto rec = [&](auto&& self, size_t minidx, int rest) -> void {
    if (rest == 0) {
      emit();
      return;
    }
    for (size_t i = minidx; i < pool.size(); i++) {
      int s = (int)comp_sum(pool[i]);
      if (s > rest) continue;
      seq.push_back(pool[i]);
      self(self, i, rest - s);
      seq.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

// Closed counting formula for |Std(Lambda)|.
inline long long count_std_shape(const LambdaShape& L) {
  long long c = multinomial(L.n(), L.norm());
  for (const auto& p : L.lambda.comp) c *= std_count(p);
  for (const auto& p : L.mu) {
    c /= factorial((int)comp_sum(p));
    c *= std_count(p);
  }
  return c;
}

struct LambdaTableau {
  MultiTableau t;
  std::vector<Tableau> u;

  bool row_standard() const {
    if (!t.row_standard()) return false;
    for (const auto& x : u)
      if (!tableau_row_standard(x)) return false;
    return true;
  }

  bool standard(const LambdaShape& L) const {
    if (!t.standard()) return false;
    for (const auto& x : u)
      if (!tableau_standard(x)) return false;
    // increasing: within each run of equal components, minima increase
    for (int i = 0; i + 1 < L.m(); i++)
      if (L.lambda.comp[i] == L.lambda.comp[i + 1] &&
          t.min_entry(i) > t.min_entry(i + 1))
        return false;
    return true;
  }

  friend bool operator==(const LambdaTableau& a, const LambdaTableau& b) {
    return a.t == b.t && a.u == b.u;
  }
  friend auto operator<=>(const LambdaTableau& a, const LambdaTableau& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.u <=> b.u;
  }
  std::string str() const {
    std::ostringstream os;
    os << t.str() << "||";
    MultiTableau uu;
    uu.comp = u;
    os << uu.str();
    return os.str();
  }
};

// The maximal tableau (canonical fillings everywhere).
inline LambdaTableau t_canonical(const LambdaShape& L) {
  LambdaTableau T;
  T.t = t_canonical(L.lambda);
  for (const auto& p : L.mu) T.u.push_back(t_canonical(p));
  return T;
}

inline std::vector<LambdaTableau> enumerate_std_lambda(const LambdaShape& L) {
  std::vector<MultiTableau> ts;
  for (const auto& t : enumerate_std(L.lambda)) {
    bool incr = true;
    for (int i = 0; i + 1 < L.m() && incr; i++)
      if (L.lambda.comp[i] == L.lambda.comp[i + 1] && t.min_entry(i) > t.min_entry(i + 1))
        incr = false;
    if (incr) ts.push_back(t);
  }
  std::vector<std::vector<Tableau>> uchoices;
  for (const auto& p : L.mu) uchoices.push_back(enumerate_std(p));
  std::vector<LambdaTableau> out;
  std::vector<size_t> idx(uchoices.size(), 0);
  for (const auto& t : ts) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      LambdaTableau T;
      T.t = t;
      for (size_t i = 0; i < idx.size(); i++) T.u.push_back(uchoices[i][idx[i]]);
      out.push_back(T);
      size_t k = 0;
      while (k < idx.size() && ++idx[k] == uchoices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

// lambda |>_1 mu: some permutation of the components of lambda dominates mu.
inline bool dominates1_strict(const MultiPartition& a, const MultiPartition& b) {
  if (a.r() != b.r()) return false;
  std::vector<int> sigma(a.r());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    MultiPartition pa;
    for (int i = 0; i < a.r(); i++) pa.comp.push_back(a.comp[sigma[i]]);
    if (dominance(pa, b) == Cmp::greater) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

// The partial order on L_n: shapes with different size compositions are
// incomparable; otherwise compare via |>_1 on the multipartitions, with
// ties broken by componentwise strict dominance on the mu's.
inline Cmp dominance(const LambdaShape& a, const LambdaShape& b) {
  if (a == b) return Cmp::equal;
  if (a.norm() != b.norm()) return Cmp::incomparable;
  auto strictly_greater = [](const LambdaShape& x, const LambdaShape& y) {
    if (dominates1_strict(x.lambda, y.lambda)) return true;
    if (x.lambda == y.lambda) {
      for (size_t i = 0; i < x.mu.size(); i++)
        if (dominance(Composition(x.mu[i]), Composition(y.mu[i])) != Cmp::greater)
          return false;
      return true;
    }
    return false;
  };
  if (strictly_greater(a, b)) return Cmp::greater;
  if (strictly_greater(b, a)) return Cmp::less;
  return Cmp::incomparable;
}

// Order on Lambda-tableaux of shapes a and b; only comparable when the
// shapes are.
inline Cmp dominance(const LambdaShape& sa, const LambdaTableau& a,
                     const LambdaShape& sb, const LambdaTableau& b) {
  Cmp shapes = dominance(sa, sb);
  if (shapes == Cmp::incomparable) return Cmp::incomparable;
  if (sa == sb && a == b) return Cmp::equal;
  auto strictly_greater = [](const LambdaShape& sx, const LambdaTableau& x,
                             const LambdaShape& sy, const LambdaTableau& y) {
    Cmp sh = dominance(sx, sy);
    if (sh == Cmp::less || sh == Cmp::incomparable) return false;
    // t-parts: exists sigma with permuted x.t strictly dominating y.t
    if (x.t.r() == y.t.r()) {
      std::vector<int> sigma(x.t.r());
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        MultiTableau px;
        for (int i = 0; i < x.t.r(); i++) px.comp.push_back(x.t.comp[sigma[i]]);
        if (dominance(px, y.t) == Cmp::greater) return true;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    if (x.t == y.t) {
      if (x.u.size() != y.u.size()) return false;
      for (size_t i = 0; i < x.u.size(); i++)
        if (tableau_dominance(x.u[i], y.u[i]) != Cmp::greater) return false;
      return true;
    }
    return false;
  };
  if (strictly_greater(sa, a, sb, b)) return Cmp::greater;
  if (strictly_greater(sb, b, sa, a)) return Cmp::less;
  return Cmp::incomparable;
}

// ---- block permutations -------------------------------------------------

// All permutations of {1..m} preserving the given consecutive runs.
inline std::vector<Perm> run_preserving_perms(int m, const std::vector<int>& runs) {
  std::vector<std::vector<std::vector<int>>> per_run;
  int start = 1;
  for (int run : runs) {
    std::vector<int> base(run);
    std::iota(base.begin(), base.end(), start);
    std::vector<std::vector<int>> arr;
    std::sort(base.begin(), base.end());
    do {
      arr.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    per_run.push_back(arr);
    start += run;
  }
  std::vector<Perm> out;
  std::vector<size_t> idx(per_run.size(), 0);
  while (true) {
    std::vector<int> img;
    for (size_t i = 0; i < per_run.size(); i++)
      for (int v : per_run[i][idx[i]]) img.push_back(v);
    out.emplace_back(img);
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == per_run[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

// Elements of the block-permutation group S^k (equal block sizes) and its
// subgroup S^m (equal components), as permutations of the m block indices.
inline std::vector<Perm> group_Sk(const LambdaShape& L) {
  return run_preserving_perms(L.m(), L.runs_equal_size());
}
inline std::vector<Perm> group_Sm(const LambdaShape& L) {
  return run_preserving_perms(L.m(), L.runs_equal_component());
}

// B_y: the permutation of {1..n} moving block I_i onto I_{(i)y} order
// preservingly.  Requires y to preserve block sizes.
inline Perm block_perm(const Composition& sizes, const Perm& y) {
  int n = 0;
  for (int s : sizes) n += s;
  std::vector<int> offset(sizes.size() + 1, 0);
  for (size_t i = 0; i < sizes.size(); i++) offset[i + 1] = offset[i] + sizes[i];
  std::vector<int> img(n);
  for (int i = 1; i <= (int)sizes.size(); i++) {
    int j = y.of(i);
    assert(sizes[i - 1] == sizes[j - 1]);
    for (int k = 0; k < sizes[i - 1]; k++) img[offset[i - 1] + k] = offset[j - 1] + k + 1;
  }
  return Perm(img);
}

// The circle action of y in S^k on multitableaux: apply B_y^{-1} to the
// entries and then move component (i)y into slot i.
inline MultiTableau circle_action(const Composition& sizes, const Perm& y, const MultiTableau& s) {
  Perm By = block_perm(sizes, y);
  MultiTableau s1 = s.act(By.inverse());
  MultiTableau out;
  out.comp.resize(s.r());
  for (int i = 1; i <= s.r(); i++) out.comp[i - 1] = s1.comp[y.of(i) - 1];
  return out;
}

// Initial-kind decomposition of a row-standard multitableau: s = s0.w with
// s0 using the numbers of block I_j in component j and w a distinguished
// coset representative.
struct InitialDecomposition {
  MultiTableau s0;
  Perm y;  // d(s0)
  Perm w;  // the distinguished coset representative w_s
};

inline InitialDecomposition initial_decompose(const MultiTableau& s) {
  Composition sizes = s.shape().norm();
  auto [y, w] = coset_decompose(tableau_d(s), sizes);
  MultiTableau s0 = t_canonical(s.shape()).act(y);
  return {s0, y, w};
}

// Wreath type: the distinguished part of d(s) maps every block of the
// canonical set partition onto a block (necessarily of equal size).
inline bool is_wreath_type(const MultiTableau& s) {
  Composition sizes = s.shape().norm();
  Perm w = initial_decompose(s).w;
  SetPartition A = SetPartition::consecutive(s.size(), sizes);
  SetPartition Aw = A.act(w);
  for (const auto& blk : Aw.blocks()) {
    bool found = false;
    for (const auto& ref : A.blocks())
      if (ref == blk) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

}  // namespace yhe
