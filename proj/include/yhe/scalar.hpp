#pragma once

// The coefficient field Q(zeta_r)(q), restricted to what the algebras need
// day-to-day: Laurent polynomials in q over Q(zeta_r).  Genuine fractions
// only appear inside linear solves and live in linalg.hpp.

#include <yhe/cyclo.hpp>

#include <map>

namespace yhe {

class Scalar {
 public:
  Scalar() : r_(1) {}
  explicit Scalar(int r) : r_(r) {}
  Scalar(int r, const Rat& x) : r_(r) { add_term(0, Cyclo(r, x)); }

  static Scalar from_rat(int r, const Rat& x) { return Scalar(r, x); }
  static Scalar one(int r) { return Scalar(r, Rat(1)); }
  static Scalar zero(int r) { return Scalar(r); }
  static Scalar q_pow(int r, long k) {
    Scalar s(r);
    s.add_term(k, Cyclo(r, Rat(1)));
    return s;
  }
  static Scalar q(int r) { return q_pow(r, 1); }
  static Scalar zeta_pow(int r, long j) {
    Scalar s(r);
    s.add_term(0, Cyclo::zeta_pow(r, j));
    return s;
  }
  // q - q^-1, ubiquitous in the quadratic relations.
  static Scalar q_minus_qinv(int r) { return q_pow(r, 1) - q_pow(r, -1); }

  int r() const { return r_; }
  const std::map<long, Cyclo>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const {
    return t_.size() == 1 && t_.begin()->first == 0 &&
           t_.begin()->second.is_rational() &&
           t_.begin()->second.rational_part() == 1;
  }

  void add_term(long qexp, const Cyclo& c) {
    if (c.is_zero()) return;
    auto it = t_.find(qexp);
    if (it == t_.end()) {
      t_.emplace(qexp, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.r_ == b.r_ && a.t_ == b.t_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend auto operator<=>(const Scalar& a, const Scalar& b) {
    if (a.r_ != b.r_) return a.r_ <=> b.r_;
    return std::compare_strong_order_fallback(a.t_, b.t_);
  }

  Scalar operator-() const {
    Scalar s(r_);
    for (const auto& [e, c] : t_) s.t_.emplace(e, -c);
    return s;
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    assert(a.r_ == b.r_);
    Scalar s = a;
    for (const auto& [e, c] : b.t_) s.add_term(e, c);
    return s;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    assert(a.r_ == b.r_);
    Scalar s(a.r_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) s.add_term(ea + eb, ca * cb);
    return s;
  }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool is_unit() const { return t_.size() == 1 && !t_.begin()->second.is_zero(); }

  // Inverse of a unit c*q^k.  General denominators are handled by the
  // fraction type in linalg.hpp.
  Scalar invert() const {
    if (is_zero()) throw std::domain_error("Scalar: inversion of zero");
    if (!is_unit())
      throw std::domain_error("Scalar: not a monomial unit; use fractions");
    Scalar s(r_);
    s.add_term(-t_.begin()->first, t_.begin()->second.inverse());
    return s;
  }

  // Grammar: sum of terms `rational [*z^int] [*q^int]`.
  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      const auto& coeffs = c.coeffs();
      for (size_t i = 0; i < coeffs.size(); i++) {
        if (coeffs[i] == 0) continue;
        Rat v = coeffs[i];
        if (first) {
          if (v < 0) { os << "-"; v = -v; }
        } else {
          os << (v < 0 ? " - " : " + ");
          if (v < 0) v = -v;
        }
        os << v.get_str();
        if (i > 0) os << "*z^" << i;
        if (e != 0) os << "*q^" << e;
        first = false;
      }
    }
    return os.str();
  }

 private:
  int r_;
  std::map<long, Cyclo> t_;
};

// Change of coefficient field: reinterpret a Scalar over Q(q) (r=1) inside
// Q(zeta_r)(q).  Used by the homomorphism from the ties algebra.
inline Scalar embed_scalar(const Scalar& a, int r) {
  assert(a.r() == 1);
  Scalar s(r);
  for (const auto& [e, c] : a.terms()) s.add_term(e, Cyclo(r, c.rational_part()));
  return s;
}

}  // namespace yhe
