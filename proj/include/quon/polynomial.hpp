#pragma once

/*
 * Dense univariate polynomials in q with arbitrary-precision integer
 * coefficients.
 *
 * Representation: coeffs[d] is the coefficient of q^d.  The vector is kept
 * trimmed (no trailing zeros), so the zero polynomial is the empty vector and
 * two polynomials are equal iff their coefficient vectors are equal.
 *
 * Text form: terms ascending by degree, joined by " + " / " - ", with the
 * coefficient 1 elided and "*" between a non-unit coefficient and q:
 *
 *     1 - 2*q + q^2        q^4 + q^5        -3 + q        0
 */

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quon/errors.hpp"

namespace quon {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or an integer literal.  Decimal notation is rejected.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("not an exact rational: '" + std::string(text) + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

  /// c * q^degree
  static Polynomial monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial one() { return constant(1); }
  static Polynomial q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Integer(0); }

  const Integer& leading() const { return coeffs_.back(); }

  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
    return coeffs_.empty() ? 0 : v;
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
  }

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  Polynomial primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    return divide_scalar(g);
  }

  /// Exact division of every coefficient by `d`; throws if any is not divisible.
  Polynomial divide_scalar(const Integer& d) const {
    if (d == 0) throw DivisionByZero("polynomial divided by zero scalar");
    std::vector<Integer> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t()))
        throw InexactDivision("coefficient not divisible by scalar");
      mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return Polynomial(std::move(out));
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  Polynomial pow(unsigned long e) const {
    Polynomial result = one();
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1UL) result *= base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Polynomial operator-() const {
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
      if (mpz_sgn(ai) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        mpz_addmul(out[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Integer& c, const Polynomial& p) {
    if (c == 0) return {};
    std::vector<Integer> out(p.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs_[i];
    return Polynomial(std::move(out));
  }

  /// a*b - c*d, sharing one accumulator vector.
  friend Polynomial mul_sub(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                            const Polynomial& d) {
    std::size_t n1 = (a.is_zero() || b.is_zero()) ? 0 : a.coeffs_.size() + b.coeffs_.size() - 1;
    std::size_t n2 = (c.is_zero() || d.is_zero()) ? 0 : c.coeffs_.size() + d.coeffs_.size() - 1;
    std::vector<Integer> out(std::max(n1, n2));
    if (n1)
      for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
        if (mpz_sgn(ai) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
          mpz_addmul(out[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
      }
    if (n2)
      for (std::size_t i = 0; i < c.coeffs_.size(); ++i) {
        const mpz_srcptr ci = c.coeffs_[i].get_mpz_t();
        if (mpz_sgn(ci) == 0) continue;
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
          mpz_submul(out[i + j].get_mpz_t(), ci, d.coeffs_[j].get_mpz_t());
      }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/*
 * Exact quotient a / b over Z[q].  Works upward from the lowest nonzero
 * coefficient of b, so a divisor with constant term +-1 (every leading minor
 * of a Gram block) never needs an integer division.  Every remaining
 * coefficient is checked, so an inexact division always throws.
 */
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return {};
  const std::size_t vb = b.valuation();
  const std::size_t va = a.valuation();
  if (va < vb || a.degree() < b.degree()) throw InexactDivision("polynomial division not exact");

  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t len_b = bc.size() - vb;        // b shifted down by vb
  const std::size_t len_a = ac.size() - vb;        // a shifted down by vb
  const std::size_t len_q = len_a - len_b + 1;     // quotient length
  const mpz_srcptr b0 = bc[vb].get_mpz_t();
  const bool unit = mpz_cmpabs_ui(b0, 1) == 0;
  const bool neg_unit = unit && mpz_sgn(b0) < 0;

  std::vector<Integer> quot(len_q);
  Integer r;
  for (std::size_t k = 0; k < len_a; ++k) {
    r = ac[k + vb];
    const std::size_t jmax = std::min(k, len_b - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (k - j >= len_q) continue;
      mpz_submul(r.get_mpz_t(), bc[vb + j].get_mpz_t(), quot[k - j].get_mpz_t());
    }
    if (k < len_q) {
      if (unit) {
        if (neg_unit) mpz_neg(quot[k].get_mpz_t(), r.get_mpz_t());
        else quot[k].swap(r);
      } else {
        if (!mpz_divisible_p(r.get_mpz_t(), b0))
          throw InexactDivision("polynomial division not exact");
        mpz_divexact(quot[k].get_mpz_t(), r.get_mpz_t(), b0);
      }
    } else if (r != 0) {
      throw InexactDivision("polynomial division not exact");
    }
  }
  return Polynomial(std::move(quot));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero polynomial");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Integer& lb = bc.back();
  long da = static_cast<long>(r.size()) - 1;
  long steps = da - static_cast<long>(db) + 1;
  if (steps <= 0) return a;
  for (long d = da; d >= static_cast<long>(db); --d) {
    Integer lead = r[d];
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[d - db + j] -= lead * bc[j];
    --steps;
  }
  // Remaining powers of lc(b) keep the result equal to the textbook prem.
  Polynomial rem(std::move(r));
  for (; steps > 0; --steps) rem = lb * rem;
  return rem;
}

/// Primitive gcd over Q[q], normalized to a positive leading coefficient.
inline Polynomial gcd(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero()) return y.primitive_part();
  if (y.is_zero()) return x.primitive_part();
  Polynomial a = x.primitive_part();
  Polynomial b = y.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Polynomial::one();
    Polynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    const Integer& c = p.coeffs()[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Integer mag = abs(c);
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse_all() {
    Polynomial p = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

  /// sum := ['-'] term (('+'|'-') term)*
  Polynomial parse_sum() {
    skip_ws();
    Polynomial acc;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    acc = parse_term();
    if (negative) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = parse_term();
      if (c == '+') acc += t;
      else acc -= t;
    }
    return acc;
  }

  std::size_t pos() const { return pos_; }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void advance() { ++pos_; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why +
                     " in '" + std::string(s_) + "'");
  }

 private:
  /// term := integer ['*' 'q' ['^' integer]] | 'q' ['^' integer]
  Polynomial parse_term() {
    skip_ws();
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_digits());
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'q') fail("expected 'q' after '*'");
      }
    }
    if (peek() == 'q') {
      ++pos_;
      std::size_t degree = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        degree = std::stoul(read_digits());
      }
      return Polynomial::monomial(coeff, degree);
    }
    if (!have_coeff) fail("expected a term");
    return Polynomial::constant(coeff);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
  return detail::PolyParser(text).parse_all();
}

}  // namespace quon
