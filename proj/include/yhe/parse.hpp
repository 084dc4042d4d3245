#pragma once

// Text grammars for every object the command line handles: scalars,
// permutations, partitions, set partitions and algebra elements.  Printing
// always produces a string the parser accepts, and parse(print(x)) = x.

#include <yhe/braidsties.hpp>

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>

namespace yhe {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t p)
      : std::runtime_error(what + " at position " + std::to_string(p)), pos(p) {}
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string s) : s_(std::move(s)) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) i_++;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    i_++;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, i_); }
  size_t pos() const { return i_; }

  long integer() {
    skip_ws();
    size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) i_++;
    size_t digits = i_;
    while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) i_++;
    if (i_ == digits) fail("expected integer");
    return std::stol(s_.substr(start, i_ - start));
  }

  // unsigned digits only; used where the sign belongs to the caller
  long digits() {
    skip_ws();
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) i_++;
    if (i_ == start) fail("expected digits");
    return std::stol(s_.substr(start, i_ - start));
  }

  Rat rational() {
    long num = integer();
    if (eat('/')) return Rat(num, digits());
    return Rat(num);
  }

 private:
  std::string s_;
  size_t i_ = 0;
};

inline Perm perm(Cursor& c) {
  c.expect('[');
  std::vector<int> img;
  if (!c.eat(']')) {
    do {
      img.push_back((int)c.digits());
    } while (c.eat(','));
    c.expect(']');
  }
  return Perm(img);
}

inline SetPartition setpartition(Cursor& c, int n) {
  c.expect('{');
  std::vector<std::vector<int>> blocks;
  if (!c.eat('}')) {
    do {
      std::vector<int> blk;
      do {
        blk.push_back((int)c.digits());
      } while (c.eat(','));
      blocks.push_back(blk);
    } while (c.eat('|'));
    c.expect('}');
  }
  return SetPartition(n, std::move(blocks));
}

// The per-algebra atom multiplication shares one expression parser.
template <class Elem, class Atom>
Elem expression(Cursor& c, const Elem& unit, Atom&& atom) {
  auto term = [&]() {
    Elem t = unit;
    bool neg = false;
    while (c.eat('-')) neg = !neg;
    t *= atom(c);
    while (c.eat('*')) t *= atom(c);
    return neg ? -t : t;
  };
  Elem out = term();
  while (true) {
    if (c.eat('+')) {
      out += term();
    } else if (c.eat('-')) {
      Elem t = unit;
      t *= atom(c);
      while (c.eat('*')) t *= atom(c);
      out -= t;
    } else {
      break;
    }
  }
  return out;
}

inline long exponent(Cursor& c) { return c.eat('^') ? c.integer() : 1; }

// scalar factors shared by both element grammars; returns false when the
// cursor does not start a scalar atom
inline bool scalar_atom(Cursor& c, int r, Scalar& out) {
  char p = c.peek();
  if (std::isdigit((unsigned char)p)) {
    out = Scalar::from_rat(r, c.rational());
    return true;
  }
  if (p == 'q') {
    c.eat('q');
    out = Scalar::q_pow(r, exponent(c));
    return true;
  }
  if (p == 'z') {
    c.eat('z');
    out = Scalar::zeta_pow(r, exponent(c));
    return true;
  }
  return false;
}

}  // namespace detail

// ---- entry points -------------------------------------------------------

inline Perm parse_perm(const std::string& s) {
  detail::Cursor c(s);
  Perm w = detail::perm(c);
  if (!c.done()) c.fail("trailing input");
  return w;
}

inline Partition parse_partition(const std::string& s) {
  detail::Cursor c(s);
  Partition p;
  if (!c.done()) {
    do {
      p.push_back((int)c.digits());
    } while (c.eat(','));
  }
  if (!c.done()) c.fail("trailing input");
  return p;
}

inline MultiPartition parse_multipartition(const std::string& s) {
  detail::Cursor c(s);
  c.expect('(');
  MultiPartition mp;
  do {
    Partition p;
    while (std::isdigit((unsigned char)c.peek())) {
      p.push_back((int)c.digits());
      if (!c.eat(',')) break;
    }
    mp.comp.push_back(p);
  } while (c.eat('|'));
  c.expect(')');
  if (!c.done()) c.fail("trailing input");
  return mp;
}

inline SetPartition parse_setpartition(const std::string& s, int n) {
  detail::Cursor c(s);
  SetPartition A = detail::setpartition(c, n);
  if (!c.done()) c.fail("trailing input");
  return A;
}

// out-of-line helper so parenthesized scalar subexpressions can recurse
inline Scalar parse_scalar_impl(detail::Cursor& c, int r);

inline Scalar parse_scalar(const std::string& s, int r) {
  detail::Cursor c(s);
  Scalar out = detail::expression(
      c, Scalar::one(r), [&](detail::Cursor& cur) {
        Scalar a(r);
        if (cur.eat('(')) {
          a = parse_scalar_impl(cur, r);
          cur.expect(')');
          return a;
        }
        if (!detail::scalar_atom(cur, r, a)) cur.fail("expected scalar atom");
        return a;
      });
  if (!c.done()) c.fail("trailing input");
  return out;
}

inline YElement parse_y_element(const std::string& s, int r, int n) {
  detail::Cursor c(s);
  std::function<YElement(detail::Cursor&)> atom = [&](detail::Cursor& cur) -> YElement {
    if (cur.eat('(')) {
      YElement inner = detail::expression(cur, YElement::one(r, n), atom);
      cur.expect(')');
      return inner;
    }
    Scalar sc(r);
    if (detail::scalar_atom(cur, r, sc)) return YElement::one(r, n).scaled(sc);
    char p = cur.peek();
    if (p == 't') {
      cur.eat('t');
      int j = (int)cur.digits();
      if (j < 1 || j > n) cur.fail("t index out of range");
      return YElement::t_pow(r, n, j, detail::exponent(cur));
    }
    if (p == 'g') {
      cur.eat('g');
      if (cur.peek() == '[') return YElement::g_of(r, n, detail::perm(cur));
      int i = (int)cur.digits();
      if (i < 1 || i >= n) cur.fail("g index out of range");
      return YElement::g_gen(r, n, i);
    }
    if (p == 'e') {
      cur.eat('e');
      int i = (int)cur.digits();
      if (i < 1 || i >= n) cur.fail("e index out of range");
      return YElement::e_gen(r, n, i);
    }
    cur.fail("expected element atom");
  };
  YElement out = detail::expression(c, YElement::one(r, n), atom);
  if (!c.done()) c.fail("trailing input");
  return out;
}

inline EtElement parse_et_element(const std::string& s, int n) {
  detail::Cursor c(s);
  std::function<EtElement(detail::Cursor&)> atom = [&](detail::Cursor& cur) -> EtElement {
    if (cur.eat('(')) {
      EtElement inner = detail::expression(cur, EtElement::one(n), atom);
      cur.expect(')');
      return inner;
    }
    Scalar sc(1);
    if (detail::scalar_atom(cur, 1, sc)) return EtElement::one(n).scaled(sc);
    char p = cur.peek();
    if (p == 'E') {
      cur.eat('E');
      return EtElement::E_of(detail::setpartition(cur, n));
    }
    if (p == 'g') {
      cur.eat('g');
      if (cur.peek() == '[') return EtElement::g_of(n, detail::perm(cur));
      int i = (int)cur.digits();
      if (i < 1 || i >= n) cur.fail("g index out of range");
      return EtElement::g_gen(n, i);
    }
    if (p == 'e') {
      cur.eat('e');
      int i = (int)cur.digits();
      if (i < 1 || i >= n) cur.fail("e index out of range");
      return EtElement::e_gen(n, i);
    }
    cur.fail("expected element atom");
  };
  EtElement out = detail::expression(c, EtElement::one(n), atom);
  if (!c.done()) c.fail("trailing input");
  return out;
}

// ---- printers -----------------------------------------------------------

namespace detail {

// coefficient prefix: empty for 1, bare for a simple positive monomial,
// parenthesized otherwise
inline std::string coeff_prefix(const Scalar& c, bool alone) {
  std::string s = c.str();
  if (!alone && c.is_one()) return "";
  bool wrap = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos ||
              s[0] == '-';
  if (wrap) s = "(" + s + ")";
  return alone ? s : s + "*";
}

}  // namespace detail

inline std::string YElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string piece;
    for (int i = 1; i <= n_; i++)
      if (key.first[i - 1]) {
        if (!piece.empty()) piece += "*";
        piece += "t" + std::to_string(i) + "^" + std::to_string(key.first[i - 1]);
      }
    if (key.second != Perm::identity(n_)) {
      if (!piece.empty()) piece += "*";
      piece += "g" + key.second.str();
    }
    std::string term = detail::coeff_prefix(c, piece.empty()) + piece;
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

inline std::string EtElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string piece;
    if (key.first != SetPartition(n_)) piece += "E" + key.first.str();
    if (key.second != Perm::identity(n_)) {
      if (!piece.empty()) piece += "*";
      piece += "g" + key.second.str();
    }
    std::string term = detail::coeff_prefix(c, piece.empty()) + piece;
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

inline Scalar parse_scalar_impl(detail::Cursor& c, int r) {
  return detail::expression(c, Scalar::one(r), [&](detail::Cursor& cur) {
    Scalar a(r);
    if (cur.eat('(')) {
      a = parse_scalar_impl(cur, r);
      cur.expect(')');
      return a;
    }
    if (!detail::scalar_atom(cur, r, a)) cur.fail("expected scalar atom");
    return a;
  });
}

}  // namespace yhe
