#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "quon/polynomial.hpp"

namespace quon {

/*
 * Element of Q(q) stored as num/den over Z[q].
 *
 * Canonical form: gcd(num, den) = 1 over Q, the integer contents of num and
 * den are jointly coprime, and den has a positive leading coefficient.  The
 * zero function is 0/1.  Canonical form is unique, so equality is structural.
 */
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::one()) {}

  // NOLINTNEXTLINE(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::one()) { reduce_content(); }

  // NOLINTNEXTLINE(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Polynomial::constant(c)) {}

  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RationalFunction q() { return RationalFunction(Polynomial::q()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw PoleError("evaluation at a pole (denominator vanishes at " + to_string(x) + ")");
    return num_.eval(x) / d;
  }

  RationalFunction pow(unsigned long e) const {
    RationalFunction out;
    out.num_ = num_.pow(e);
    out.den_ = den_.pow(e);
    return out;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RationalFunction(den_, num_);
  }

  RationalFunction operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return RationalFunction(a.num_ + b.num_);
      return RationalFunction(a.num_ + b.num_, a.den_);
    }
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
    // Cross-cancel first so the products stay small.
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    return RationalFunction(divide_exact(a.num_, g1) * divide_exact(b.num_, g2),
                            divide_exact(a.den_, g2) * divide_exact(b.den_, g1));
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial::one();
      return;
    }
    if (!den_.is_constant()) {
      Polynomial g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
      }
    }
    reduce_content();
  }

  void reduce_content() {
    if (num_.is_zero()) {
      den_ = Polynomial::one();
      return;
    }
    Integer g = gcd(num_.content(), den_.content());
    if (den_.leading() < 0) g = -g;
    if (g != 1) {
      num_ = num_.divide_scalar(g);
      den_ = den_.divide_scalar(g);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

/// Builds num/den in canonical form; throws DivisionByZero when den = 0.
inline RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

inline Rational rf_eval(const RationalFunction& f, const Rational& x) { return f.eval(x); }

/// "(num)/(den)", parentheses only around multi-term or negative parts.
inline std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  auto wrap = [](const Polynomial& p) {
    std::string s = to_string(p);
    if (p.term_count() > 1) return "(" + s + ")";
    return s;
  };
  return wrap(f.num()) + "/" + wrap(f.den());
}

/// Accepts the output grammar of to_string(RationalFunction), and plain polynomials.
inline RationalFunction parse_rational_function(std::string_view text) {
  detail::PolyParser p(text);
  auto atom = [&p]() {
    p.skip_ws();
    if (p.peek() == '(') {
      p.advance();
      Polynomial inner = p.parse_sum();
      p.skip_ws();
      if (p.peek() != ')') p.fail("expected ')'");
      p.advance();
      return inner;
    }
    return p.parse_sum();
  };
  Polynomial num = atom();
  p.skip_ws();
  Polynomial den = Polynomial::one();
  if (p.peek() == '/') {
    p.advance();
    den = atom();
  }
  p.skip_ws();
  if (p.peek() != '\0') p.fail("trailing input");
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace quon
