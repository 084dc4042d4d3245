#pragma once

// The tensor space V^{tensor n} with V of dimension r*n, the operators
// giving the representation of Y_{r,n}(q) on it, Jimbo-style operators for
// the modified Ariki-Koike algebra, and exact rank computations.

#include <yhe/linalg.hpp>
#include <yhe/yokonuma.hpp>

namespace yhe {

// Basis vectors of V are v_i^t with 1 <= i <= n and 0 <= t <= r-1, encoded
// as (i-1)*r + t.  Pure tensors are encoded big-endian: position 1 is the
// most significant digit in base r*n.
class TensorSpace {
 public:
  TensorSpace(int r, int n) : r_(r), n_(n) {
    dim_ = 1;
    for (int k = 0; k < n; k++) dim_ *= r * n;
  }

  int r() const { return r_; }
  int n() const { return n_; }
  long dim() const { return dim_; }

  long stride(int pos) const {
    long s = 1;
    for (int k = pos; k < n_; k++) s *= r_ * n_;
    return s;
  }
  // lower index i and color t of the factor at the given position
  int lower(long x, int pos) const { return (int)(factor(x, pos) / r_) + 1; }
  int color(long x, int pos) const { return (int)(factor(x, pos) % r_); }
  long factor(long x, int pos) const { return (x / stride(pos)) % (r_ * n_); }

  long with_factors_swapped(long x, int pos) const {
    long a = factor(x, pos), b = factor(x, pos + 1);
    return x + (b - a) * stride(pos) + (a - b) * stride(pos + 1);
  }

 private:
  int r_, n_;
  long dim_;
};

// Sparse operator acting on row vectors: (vM)_y = sum_x v_x M_{xy}.
class OpMatrix {
 public:
  OpMatrix(int r, long dim) : r_(r), dim_(dim), rows_(dim) {}

  static OpMatrix identity(int r, long dim) {
    OpMatrix m(r, dim);
    for (long x = 0; x < dim; x++) m.rows_[x][x] = Scalar::one(r);
    return m;
  }

  int r() const { return r_; }
  long dim() const { return dim_; }
  const std::map<long, Scalar>& row(long x) const { return rows_[x]; }

  void add(long x, long y, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = rows_[x].find(y);
    if (it == rows_[x].end()) {
      rows_[x].emplace(y, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) rows_[x].erase(it);
    }
  }

  bool is_zero() const {
    for (const auto& row : rows_)
      if (!row.empty()) return false;
    return true;
  }

  friend bool operator==(const OpMatrix& a, const OpMatrix& b) {
    return a.r_ == b.r_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const OpMatrix& a, const OpMatrix& b) { return !(a == b); }

  OpMatrix scaled(const Scalar& c) const {
    OpMatrix m(r_, dim_);
    for (long x = 0; x < dim_; x++)
      for (const auto& [y, v] : rows_[x]) m.add(x, y, v * c);
    return m;
  }
  friend OpMatrix operator+(const OpMatrix& a, const OpMatrix& b) {
    assert(a.dim_ == b.dim_);
    OpMatrix m = a;
    for (long x = 0; x < b.dim_; x++)
      for (const auto& [y, v] : b.rows_[x]) m.add(x, y, v);
    return m;
  }
  friend OpMatrix operator-(const OpMatrix& a, const OpMatrix& b) {
    return a + b.scaled(-Scalar::one(a.r_));
  }
  friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
    assert(a.dim_ == b.dim_);
    OpMatrix m(a.r_, a.dim_);
    for (long x = 0; x < a.dim_; x++)
      for (const auto& [y, v] : a.rows_[x])
        for (const auto& [z, w] : b.rows_[y]) m.add(x, z, v * w);
    return m;
  }
  OpMatrix& operator*=(const OpMatrix& b) { return *this = *this * b; }
  OpMatrix& operator+=(const OpMatrix& b) { return *this = *this + b; }

  // flattened coordinates, for rank computations
  SVec flatten() const {
    SVec v;
    for (long x = 0; x < dim_; x++)
      for (const auto& [y, c] : rows_[x]) v.emplace((int)(x * dim_ + y), Frac(c));
    return v;
  }

 private:
  int r_;
  long dim_;
  std::vector<std::map<long, Scalar>> rows_;
};

// ---- the operators ------------------------------------------------------

// T_k: multiplication by xi^{t_k} (diagonal).
inline OpMatrix op_T(const TensorSpace& ts, int k, long power = 1) {
  OpMatrix m(ts.r(), ts.dim());
  for (long x = 0; x < ts.dim(); x++)
    m.add(x, x, Scalar::zeta_pow(ts.r(), power * ts.color(x, k)));
  return m;
}

// E_k: projection onto equal colors in factors k, k+1 (diagonal).
inline OpMatrix op_E(const TensorSpace& ts, int k) {
  OpMatrix m(ts.r(), ts.dim());
  for (long x = 0; x < ts.dim(); x++)
    if (ts.color(x, k) == ts.color(x, k + 1)) m.add(x, x, Scalar::one(ts.r()));
  return m;
}

// G_k acting in factors k, k+1.
inline OpMatrix op_G(const TensorSpace& ts, int k) {
  int r = ts.r();
  OpMatrix m(r, ts.dim());
  for (long x = 0; x < ts.dim(); x++) {
    int t = ts.color(x, k), s = ts.color(x, k + 1);
    int i = ts.lower(x, k), j = ts.lower(x, k + 1);
    long swapped = ts.with_factors_swapped(x, k);
    if (t != s) {
      m.add(x, swapped, Scalar::one(r));
    } else if (i == j) {
      m.add(x, x, Scalar::q(r));
    } else if (i > j) {
      m.add(x, swapped, Scalar::one(r));
    } else {
      m.add(x, x, Scalar::q_minus_qinv(r));
      m.add(x, swapped, Scalar::one(r));
    }
  }
  return m;
}

// Jimbo's operator H_i acting in factors i-1, i (so 2 <= i <= n), with
// respect to the total order v_1^1, ..., v_n^1, v_1^2, ..., v_n^r on the
// basis of V; the superscript r is the color 0.
inline OpMatrix op_H(const TensorSpace& ts, int i) {
  int r = ts.r(), n = ts.n();
  auto ord = [&](long x, int pos) {
    int t = ts.color(x, pos);
    return ((t + r - 1) % r) * n + (ts.lower(x, pos) - 1);
  };
  OpMatrix m(r, ts.dim());
  for (long x = 0; x < ts.dim(); x++) {
    long a = ord(x, i - 1), b = ord(x, i);
    long swapped = ts.with_factors_swapped(x, i - 1);
    if (a == b) {
      m.add(x, x, Scalar::q(r));
    } else if (a > b) {
      m.add(x, swapped, Scalar::one(r));
    } else {
      m.add(x, x, Scalar::q_minus_qinv(r));
      m.add(x, swapped, Scalar::one(r));
    }
  }
  return m;
}

// The representation t_k -> T_k, g_i -> G_i, extended to arbitrary elements.
inline OpMatrix rho(const TensorSpace& ts, const YElement& a) {
  assert(a.r() == ts.r() && a.n() == ts.n());
  OpMatrix out(ts.r(), ts.dim());
  for (const auto& [key, c] : a.terms()) {
    OpMatrix part = OpMatrix::identity(ts.r(), ts.dim()).scaled(c);
    for (int k = 1; k <= ts.n(); k++)
      if (key.first[k - 1]) part *= op_T(ts, k, key.first[k - 1]);
    for (int i : key.second.reduced_word()) part *= op_G(ts, i);
    out += part;
  }
  return out;
}

// ---- Vandermonde data for the modified Ariki-Koike algebra --------------

inline Scalar vandermonde_det(int r) {
  Scalar d = Scalar::one(r);
  for (int i = 2; i <= r; i++)
    for (int j = 1; j < i; j++)
      d *= Scalar::zeta_pow(r, i) - Scalar::zeta_pow(r, j);
  return d;
}

namespace detail {
inline Scalar scalar_det(const std::vector<std::vector<Scalar>>& m) {
  size_t k = m.size();
  if (k == 0) return Scalar::one(m.empty() ? 1 : m[0][0].r());
  if (k == 1) return m[0][0];
  Scalar out(m[0][0].r());
  int sign = 1;
  for (size_t c = 0; c < k; c++) {
    std::vector<std::vector<Scalar>> minor;
    for (size_t x = 1; x < k; x++) {
      std::vector<Scalar> row;
      for (size_t y = 0; y < k; y++)
        if (y != c) row.push_back(m[x][y]);
      minor.push_back(row);
    }
    Scalar term = m[0][c] * scalar_det(minor);
    out += sign > 0 ? term : -term;
    sign = -sign;
  }
  return out;
}
}  // namespace detail

// Adjugate of the Vandermonde matrix A_{ij} = xi^{j(i-1)}; its entries are
// the coefficients h_{ij} of the interpolation polynomials.
inline std::vector<std::vector<Scalar>> vandermonde_adjugate(int r) {
  std::vector<std::vector<Scalar>> A(r, std::vector<Scalar>(r, Scalar::zero(r)));
  for (int i = 1; i <= r; i++)
    for (int j = 1; j <= r; j++) A[i - 1][j - 1] = Scalar::zeta_pow(r, (long)j * (i - 1));
  std::vector<std::vector<Scalar>> B(r, std::vector<Scalar>(r, Scalar::zero(r)));
  for (int i = 1; i <= r; i++) {
    for (int j = 1; j <= r; j++) {
      std::vector<std::vector<Scalar>> minor;
      for (int x = 1; x <= r; x++) {
        if (x == j) continue;
        std::vector<Scalar> row;
        for (int y = 1; y <= r; y++)
          if (y != i) row.push_back(A[x - 1][y - 1]);
        minor.push_back(row);
      }
      Scalar cof = detail::scalar_det(minor);
      B[i - 1][j - 1] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return B;
}

// F_c evaluated at the operator X: sum_j h_{cj} X^{j-1}.
inline OpMatrix op_F(const TensorSpace& ts, const std::vector<std::vector<Scalar>>& h, int c,
                     const OpMatrix& X) {
  int r = ts.r();
  OpMatrix out(r, ts.dim());
  OpMatrix power = OpMatrix::identity(r, ts.dim());
  for (int j = 1; j <= r; j++) {
    out += power.scaled(h[c - 1][j - 1]);
    if (j < r) power *= X;
  }
  return out;
}

// Delta^{-2} (q - q^{-1}) sum_{c1<c2} F_{c1}(T_{i-1}) F_{c2}(T_i).
inline OpMatrix mak_correction(const TensorSpace& ts, int i) {
  int r = ts.r();
  auto h = vandermonde_adjugate(r);
  OpMatrix Tprev = op_T(ts, i - 1), Tcur = op_T(ts, i);
  OpMatrix sum(r, ts.dim());
  for (int c1 = 1; c1 <= r; c1++)
    for (int c2 = c1 + 1; c2 <= r; c2++)
      sum += op_F(ts, h, c1, Tprev) * op_F(ts, h, c2, Tcur);
  Scalar delta = vandermonde_det(r);
  Scalar factor = Scalar::q_minus_qinv(r) * (delta * delta).invert();
  return sum.scaled(factor);
}

// ---- exact ranks and dimension counts -----------------------------------

// Rank of the image of the normal form basis of Y_{r,n}(q) inside
// End(V^{tensor n}); faithfulness is rank r^n n!.
inline int faithfulness_rank(int r, int n) {
  TensorSpace ts(r, n);
  RowReducer rr;
  std::vector<int> tv(n, 0);
  for (const Perm& w : all_perms(n)) {
    std::fill(tv.begin(), tv.end(), 0);
    while (true) {
      YElement a(r, n);
      a.add_term(tv, w, Scalar::one(r));
      rr.add_row(rho(ts, a).flatten());
      int k = 0;
      while (k < n && ++tv[k] == r) tv[k++] = 0;
      if (k == n) break;
    }
  }
  return rr.rank();
}

// sum over length-r compositions mu of n of p_mu^2 * prod mu_i!,
// the dimension count of the matrix algebra decomposition; it must equal
// the rank r^n n! of the algebra.
inline bool structure_dimension_identity(int r, int n) {
  long long total = 0;
  for (const auto& mu : compositions_into(n, r)) {
    long long p = multinomial(n, mu);
    long long h = 1;
    for (int part : mu) h *= factorial(part);
    total += p * p * h;
  }
  long long dim = factorial(n);
  for (int i = 0; i < n; i++) dim *= r;
  return total == dim;
}

}  // namespace yhe
