#pragma once

// Arithmetic in the cyclotomic field Q(zeta_r) = Q[z]/(Phi_r(z)).
// Elements are stored as residues mod the r-th cyclotomic polynomial,
// so the representation is a genuine field: no zero divisors, and every
// nonzero element (in particular zeta^i - zeta^j for i != j) is invertible.

#include <gmpxx.h>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace yhe {

using Rat = mpq_class;

namespace detail {

// Polynomials over Q, dense, index = degree.  Only what Cyclo needs.
using QPoly = std::vector<Rat>;

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++)
      c[i + j] += a[i] * b[j];
  qp_trim(c);
  return c;
}

// Euclidean division: returns quotient, leaves remainder in a.
inline QPoly qp_divmod(QPoly& a, const QPoly& b) {
  assert(!b.empty());
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); i++) a[shift + i] -= f * b[i];
    qp_trim(a);
    if (a.empty()) break;
    if (a.size() >= b.size() && a.back() == 0) qp_trim(a);
  }
  return q;
}

// Cyclotomic polynomial Phi_r, computed by dividing x^r - 1 by the
// product of Phi_d over proper divisors d of r.
inline const QPoly& cyclotomic(int r) {
  static std::map<int, QPoly> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  QPoly num(r + 1, Rat(0));
  num[0] = -1;
  num[r] = 1;
  for (int d = 1; d < r; d++) {
    if (r % d == 0) {
      const QPoly& pd = cyclotomic(d);
      QPoly rem = num;
      QPoly q = qp_divmod(rem, pd);
      assert(rem.empty());
      num = q;
    }
  }
  return cache.emplace(r, std::move(num)).first->second;
}

}  // namespace detail

class Cyclo {
 public:
  // Degree phi(r) of the extension.
  static int degree(int r) { return (int)detail::cyclotomic(r).size() - 1; }

  Cyclo() : r_(1), c_(1, Rat(0)) {}
  explicit Cyclo(int r) : r_(r), c_(degree(r), Rat(0)) { assert(r >= 1); }
  Cyclo(int r, const Rat& x) : Cyclo(r) { c_[0] = x; }

  static Cyclo zeta(int r) { return zeta_pow(r, 1); }

  static Cyclo zeta_pow(int r, long k) {
    Cyclo x(r);
    k %= r;
    if (k < 0) k += r;
    int d = degree(r);
    if (k < d) {
      x.c_[k] = 1;
    } else {
      detail::QPoly p(k + 1, Rat(0));
      p[k] = 1;
      detail::qp_divmod(p, detail::cyclotomic(r));
      for (size_t i = 0; i < p.size(); i++) x.c_[i] = p[i];
    }
    return x;
  }

  int r() const { return r_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); i++)
      if (c_[i] != 0) return false;
    return true;
  }
  const Rat& rational_part() const { return c_[0]; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.r_ == b.r_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
  friend auto operator<=>(const Cyclo& a, const Cyclo& b) {
    if (a.r_ != b.r_) return a.r_ <=> b.r_;
    for (size_t i = 0; i < a.c_.size(); i++) {
      int s = cmp(a.c_[i], b.c_[i]);
      if (s != 0) return s <=> 0;
    }
    return std::strong_ordering::equal;
  }

  Cyclo operator-() const {
    Cyclo x = *this;
    for (Rat& v : x.c_) v = -v;
    return x;
  }
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    assert(a.r_ == b.r_);
    Cyclo x = a;
    for (size_t i = 0; i < x.c_.size(); i++) x.c_[i] += b.c_[i];
    return x;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    assert(a.r_ == b.r_);
    Cyclo x(a.r_);
    detail::QPoly p = detail::qp_mul(a.poly(), b.poly());
    detail::qp_divmod(p, detail::cyclotomic(a.r_));
    for (size_t i = 0; i < p.size(); i++) x.c_[i] = p[i];
    return x;
  }
  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

  // Inverse by the extended Euclidean algorithm in Q[z] against Phi_r.
  Cyclo inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: inversion of zero");
    if (is_rational()) {
      Cyclo x(r_);
      x.c_[0] = 1 / c_[0];
      return x;
    }
    detail::QPoly a = detail::cyclotomic(r_);
    detail::QPoly b = poly();
    // Invariants: a = sa*Phi + ta*this, b = sb*Phi + tb*this (mod nothing).
    detail::QPoly ta, tb{Rat(1)};
    while (true) {
      assert(!b.empty());
      detail::QPoly rem = a;
      detail::QPoly q = detail::qp_divmod(rem, b);
      // new remainder rem = a - q*b, its t-cofactor = ta - q*tb
      detail::QPoly tr = ta;
      detail::QPoly qtb = detail::qp_mul(q, tb);
      if (tr.size() < qtb.size()) tr.resize(qtb.size(), Rat(0));
      for (size_t i = 0; i < qtb.size(); i++) tr[i] -= qtb[i];
      detail::qp_trim(tr);
      if (rem.empty()) {
        // b is the gcd; Phi_r is irreducible so b is a nonzero constant.
        assert(b.size() == 1);
        Cyclo x(r_);
        for (size_t i = 0; i < tb.size(); i++) x.c_[i] = tb[i] / b[0];
        return x;
      }
      a = std::move(b);
      ta = std::move(tb);
      b = std::move(rem);
      tb = std::move(tr);
    }
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); i++) {
      if (c_[i] == 0) continue;
      Rat v = c_[i];
      if (first) {
        if (v < 0) { os << "-"; v = -v; }
      } else {
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      os << v.get_str();
      if (i == 1) os << "*z";
      else if (i > 1) os << "*z^" << i;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  detail::QPoly poly() const {
    detail::QPoly p(c_.begin(), c_.end());
    detail::qp_trim(p);
    return p;
  }

  int r_;
  std::vector<Rat> c_;
};

}  // namespace yhe
