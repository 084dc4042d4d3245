#pragma once

// Exact linear algebra over the fraction field of the scalar ring:
// reduced fractions of Laurent polynomials in q over Q(zeta_r), sparse
// row reduction for ranks, and a reusable solver for expressing vectors
// in a fixed basis.

#include <yhe/scalar.hpp>

#include <optional>

namespace yhe {

// ---- polynomial helpers on Scalar (exponents >= 0 assumed) --------------

inline long poly_min_exp(const Scalar& s) {
  assert(!s.is_zero());
  return s.terms().begin()->first;
}
inline long poly_deg(const Scalar& s) {
  assert(!s.is_zero());
  return s.terms().rbegin()->first;
}
inline const Cyclo& poly_lc(const Scalar& s) { return s.terms().rbegin()->second; }

inline Scalar scalar_q_shift(const Scalar& s, long k) {
  Scalar out(s.r());
  for (const auto& [e, c] : s.terms()) out.add_term(e + k, c);
  return out;
}

// Long division a = q*b + rem with deg(rem) < deg(b).
inline std::pair<Scalar, Scalar> poly_divmod(const Scalar& a, const Scalar& b) {
  assert(!b.is_zero());
  Scalar quot(a.r()), rem = a;
  Cyclo lcb_inv = poly_lc(b).inverse();
  while (!rem.is_zero() && poly_deg(rem) >= poly_deg(b)) {
    long shift = poly_deg(rem) - poly_deg(b);
    Cyclo f = poly_lc(rem) * lcb_inv;
    quot.add_term(shift, f);
    Scalar mono(a.r());
    mono.add_term(shift, f);
    rem -= mono * b;
  }
  return {quot, rem};
}

// Monic gcd by the Euclidean algorithm.
inline Scalar poly_gcd(Scalar a, Scalar b) {
  while (!b.is_zero()) {
    Scalar rem = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  Scalar out(a.r());
  Cyclo lc_inv = poly_lc(a).inverse();
  for (const auto& [e, c] : a.terms()) out.add_term(e, c * lc_inv);
  return out;
}

// ---- the fraction field -------------------------------------------------

// num/den with den a monic polynomial in q with nonzero constant term and
// gcd(num shifted to exponent 0, den) = 1.  Zero is 0/1.
class Frac {
 public:
  Frac() : num_(1), den_(Scalar::one(1)) {}
  explicit Frac(const Scalar& s) : num_(s), den_(Scalar::one(s.r())) {}
  Frac(const Scalar& n, const Scalar& d) : num_(n), den_(d) { reduce(); }
  static Frac zero(int r) { return Frac(Scalar::zero(r)); }
  static Frac one(int r) { return Frac(Scalar::one(r)); }

  int r() const { return num_.r(); }
  const Scalar& num() const { return num_; }
  const Scalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Exact only when the denominator is trivial.
  const Scalar& as_scalar() const {
    assert(is_polynomial());
    return num_;
  }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  Frac operator-() const {
    Frac f = *this;
    f.num_ = -f.num_;
    return f;
  }
  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num_ * b.num_, a.den_ * b.den_);
  }
  Frac inverse() const {
    assert(!is_zero());
    return Frac(den_, num_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }
  Frac& operator+=(const Frac& b) { return *this = *this + b; }
  Frac& operator-=(const Frac& b) { return *this = *this - b; }
  Frac& operator*=(const Frac& b) { return *this = *this * b; }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void reduce() {
    assert(!den_.is_zero());
    if (num_.is_zero()) {
      den_ = Scalar::one(r());
      return;
    }
    // a monomial denominator is a unit: fold it into the numerator
    if (den_.terms().size() == 1) {
      num_ *= den_.invert();
      den_ = Scalar::one(r());
      return;
    }
    long sn = poly_min_exp(num_), sd = poly_min_exp(den_);
    Scalar a = scalar_q_shift(num_, -sn);
    Scalar b = scalar_q_shift(den_, -sd);
    Scalar g = poly_gcd(a, b);
    if (!g.is_one()) {
      a = poly_divmod(a, g).first;
      b = poly_divmod(b, g).first;
    }
    if (b.terms().size() == 1) {
      num_ = scalar_q_shift(a, sn - sd) * b.invert();
      den_ = Scalar::one(r());
      return;
    }
    Cyclo lc_inv = poly_lc(b).inverse();
    Scalar scale(r());
    scale.add_term(0, lc_inv);
    num_ = scalar_q_shift(a, sn - sd) * scale;
    den_ = b * scale;
  }

  Scalar num_, den_;
};

// ---- sparse vectors and row reduction -----------------------------------

using SVec = std::map<int, Frac>;

inline void svec_axpy(SVec& v, const Frac& f, const SVec& w) {
  if (f.is_zero()) return;
  for (const auto& [col, x] : w) {
    auto it = v.find(col);
    if (it == v.end()) {
      Frac fx = f * x;
      if (!fx.is_zero()) v.emplace(col, fx);
    } else {
      it->second += f * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

inline SVec svec_scale(const SVec& v, const Frac& f) {
  SVec out;
  if (f.is_zero()) return out;
  for (const auto& [col, x] : v) out.emplace(col, f * x);
  return out;
}

// Incremental Gaussian elimination.  Each stored row is normalized so its
// leading entry (smallest column) is 1, and leading columns are distinct,
// so membership in the row space is decided by forward elimination alone.
class RowReducer {
 public:
  // Eliminate v against the stored rows in place.
  void reduce(SVec& v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.begin()->first);
      if (it == pivots_.end()) return;
      svec_axpy(v, -v.begin()->second, it->second);
    }
  }

  // Returns true (and keeps the row) if v is independent from the rows so far.
  bool add_row(SVec v) {
    reduce(v);
    if (v.empty()) return false;
    Frac lead_inv = v.begin()->second.inverse();
    pivots_.emplace(v.begin()->first, svec_scale(v, lead_inv));
    return true;
  }

  int rank() const { return (int)pivots_.size(); }

 private:
  std::map<int, SVec> pivots_;  // leading column -> normalized row
};

template <class Rows>
inline int sparse_rank(const Rows& rows) {
  RowReducer rr;
  for (const auto& row : rows) rr.add_row(row);
  return rr.rank();
}

// ---- express-in-basis solver --------------------------------------------

// Fix basis vectors b_0, ..., b_{k-1} once; solve(v) finds coefficients
// with v = sum c_j b_j, or nullopt when v is outside the span.  The
// elimination of the basis is done a single time and reused.
class BasisSolver {
 public:
  explicit BasisSolver(const std::vector<SVec>& basis) {
    for (size_t j = 0; j < basis.size(); j++) {
      SVec row = basis[j];
      SVec combo;
      combo.emplace((int)j, Frac::one(frac_field_r(basis[j])));
      // forward elimination, tracking the combination producing the row
      while (!row.empty()) {
        auto it = pivots_.find(row.begin()->first);
        if (it == pivots_.end()) break;
        Frac f = -row.begin()->second;
        svec_axpy(row, f, it->second.first);
        svec_axpy(combo, f, it->second.second);
      }
      if (row.empty()) continue;  // dependent basis vector; solve would be ambiguous
      Frac lead_inv = row.begin()->second.inverse();
      int col = row.begin()->first;
      pivots_.emplace(col, std::make_pair(svec_scale(row, lead_inv),
                                          svec_scale(combo, lead_inv)));
      independent_++;
    }
  }

  int rank() const { return independent_; }

  std::optional<SVec> solve(SVec v) const {
    SVec coeffs;
    while (!v.empty()) {
      auto it = pivots_.find(v.begin()->first);
      if (it == pivots_.end()) return std::nullopt;
      Frac f = v.begin()->second;
      svec_axpy(v, -f, it->second.first);
      svec_axpy(coeffs, f, it->second.second);
    }
    return coeffs;
  }

 private:
  static int frac_field_r(const SVec& v) {
    return v.empty() ? 1 : v.begin()->second.r();
  }

  std::map<int, std::pair<SVec, SVec>> pivots_;  // col -> (row, combination)
  int independent_ = 0;
};

}  // namespace yhe
