#pragma once

/*
 * Group algebra Q(q)[U_m wr S_n] and its representations on the modules
 * Q(q)[U_m wr S_I].
 *
 * The cyclic group Z_m is U_m wr S_1; its generator gamma is the element with
 * color 1 at the single position.
 */

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "quon/colored_perm.hpp"
#include "quon/matrix.hpp"
#include "quon/rational_function.hpp"

namespace quon {

/// Sparse linear combination of colored permutations; zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  using Terms = std::map<ColoredPermutation, RationalFunction>;

  GroupAlgebraElement(int m, std::size_t n) : m_(m), n_(n) {
    if (m < 1) throw InvalidArgument("color count must be >= 1");
  }

  static GroupAlgebraElement identity(int m, std::size_t n) {
    return scalar(m, n, RationalFunction(1));
  }

  static GroupAlgebraElement scalar(int m, std::size_t n, const RationalFunction& c) {
    GroupAlgebraElement x(m, n);
    x.add_term(ColoredPermutation::neutral(m, n), c);
    return x;
  }

  static GroupAlgebraElement basis(const ColoredPermutation& g, const RationalFunction& c = 1) {
    GroupAlgebraElement x(g.m(), g.size());
    x.add_term(g, c);
    return x;
  }

  int m() const { return m_; }
  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  RationalFunction coefficient(const ColoredPermutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add_term(const ColoredPermutation& g, const RationalFunction& c) {
    if (g.m() != m_ || g.size() != n_) throw SizeMismatch("group element outside U_m wr S_n");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    check_same(o);
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }

  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    check_same(o);
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }

  friend GroupAlgebraElement operator*(const RationalFunction& c, const GroupAlgebraElement& x) {
    GroupAlgebraElement out(x.m_, x.n_);
    if (c.is_zero()) return out;
    for (const auto& [g, v] : x.terms_) out.terms_.emplace(g, c * v);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

  void check_same(const GroupAlgebraElement& o) const {
    if (o.m_ != m_ || o.n_ != n_) throw SizeMismatch("group algebra elements over different groups");
  }

 private:
  int m_;
  std::size_t n_;
  Terms terms_;
};

/// Convolution product: (sum x_g g)(sum y_h h) = sum x_g y_h (g h).
inline GroupAlgebraElement ga_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  x.check_same(y);
  // Accumulate per target with a common-denominator fast path.
  std::map<ColoredPermutation, std::vector<RationalFunction>> buckets;
  for (const auto& [g, a] : x.terms())
    for (const auto& [h, b] : y.terms()) buckets[compose(g, h)].push_back(a * b);
  GroupAlgebraElement out(x.m(), x.n());
  for (auto& [g, parts] : buckets) {
    std::map<Polynomial, Polynomial, bool (*)(const Polynomial&, const Polynomial&)> by_den(
        [](const Polynomial& a, const Polynomial& b) { return a.coeffs() < b.coeffs(); });
    for (auto& p : parts) by_den[p.den()] += p.num();
    RationalFunction total;
    for (auto& [den, num] : by_den) total += RationalFunction(num, den);
    out.add_term(g, total);
  }
  return out;
}

inline GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  return ga_mul(x, y);
}

/// Matrix of a group-algebra element acting on the right of Q(q)[U_m wr S_I].
struct RepMatrix {
  std::vector<ColoredArrangement> basis;
  Matrix<RationalFunction> entries;
};

/// Column j holds the coefficients of basis[j] . x in the canonical basis.
inline RepMatrix rep_matrix(const GroupAlgebraElement& x, const Multiset& set) {
  if (set.size() != x.n()) throw SizeMismatch("rep_matrix: |I| differs from n");
  RepMatrix rep;
  rep.basis = enumerate_arrangements(x.m(), set);
  const std::size_t dim = rep.basis.size();
  std::map<ColoredArrangement, std::size_t> index;
  for (std::size_t i = 0; i < dim; ++i) index.emplace(rep.basis[i], i);
  rep.entries = Matrix<RationalFunction>(dim, dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (const auto& [g, c] : x.terms())
      rep.entries(index.at(act(rep.basis[col], g)), col) += c;
  return rep;
}

/*
 * Determinant of a RationalFunction matrix: each row is scaled by the lcm of
 * its denominators, Bareiss runs over Z[q], and the row scales are divided
 * back out.
 */
inline RationalFunction determinant(const Matrix<RationalFunction>& a) {
  if (!a.square()) throw SizeMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<Polynomial> p(n, n);
  Polynomial scale = Polynomial::one();
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial row_lcm = Polynomial::one();
    for (std::size_t c = 0; c < n; ++c) {
      const Polynomial& d = a(r, c).den();
      if (d.is_one()) continue;
      row_lcm = divide_exact(row_lcm * d, gcd(row_lcm, d));
    }
    for (std::size_t c = 0; c < n; ++c)
      p(r, c) = a(r, c).den().is_one() && row_lcm.is_one()
                    ? a(r, c).num()
                    : divide_exact(a(r, c).num() * row_lcm, a(r, c).den());
    scale *= row_lcm;
  }
  return RationalFunction(bareiss_determinant(std::move(p), Polynomial::one()), scale);
}

inline RationalFunction det_rep(const GroupAlgebraElement& x, const Multiset& set) {
  return determinant(rep_matrix(x, set).entries);
}

/// xi_i: identity sigma, color 1 at position i (1-based), neutral elsewhere.
inline ColoredPermutation xi(int m, std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw InvalidArgument("xi: position out of range");
  auto e = ColoredPermutation::neutral(m, n);
  std::vector<int> alpha = e.alpha();
  alpha[i - 1] = wrap_color(1, m);
  return ColoredPermutation(m, e.sigma(), std::move(alpha));
}

/// g^k in the group (k >= 0).
inline ColoredPermutation power(const ColoredPermutation& g, unsigned k) {
  auto out = ColoredPermutation::neutral(g.m(), g.size());
  for (unsigned i = 0; i < k; ++i) out = compose(out, g);
  return out;
}

/// Generator gamma of Z_m = U_m wr S_1.
inline ColoredPermutation cyclic_generator(int m) { return xi(m, 1, 1); }

/// Sends gamma^k in Z_m to xi_i^k in U_m wr S_n.
inline GroupAlgebraElement embed_cyclic(const GroupAlgebraElement& x, std::size_t n, std::size_t i) {
  if (x.n() != 1) throw SizeMismatch("embed_cyclic expects an element of U_m wr S_1");
  GroupAlgebraElement out(x.m(), n);
  for (const auto& [g, c] : x.terms()) {
    auto e = ColoredPermutation::neutral(x.m(), n);
    std::vector<int> alpha = e.alpha();
    alpha[i - 1] = g.alpha()[0];
    out.add_term(ColoredPermutation(x.m(), e.sigma(), std::move(alpha)), c);
  }
  return out;
}

/// Extends every sigma in S_k to S_n by fixing k+1..n (colors neutral there).
inline GroupAlgebraElement embed_prefix(const GroupAlgebraElement& x, std::size_t n) {
  if (x.n() > n) throw SizeMismatch("embed_prefix: target smaller than source");
  GroupAlgebraElement out(x.m(), n);
  for (const auto& [g, c] : x.terms()) {
    std::vector<int> sigma = g.sigma(), alpha = g.alpha();
    for (std::size_t i = x.n(); i < n; ++i) {
      sigma.push_back(static_cast<int>(i) + 1);
      alpha.push_back(x.m());
    }
    out.add_term(ColoredPermutation(x.m(), std::move(sigma), std::move(alpha)), c);
  }
  return out;
}

/// 1 + z * sum_{k=1}^{m-1} gamma^k on Z_m.
inline GroupAlgebraElement cyclic_one_plus_sum(int m, const RationalFunction& z) {
  GroupAlgebraElement x = GroupAlgebraElement::identity(m, 1);
  const auto gamma = cyclic_generator(m);
  for (int k = 1; k < m; ++k) x.add_term(power(gamma, static_cast<unsigned>(k)), z);
  return x;
}

/// (1 + (m-1) z)(1 - z)^(m-1)
inline RationalFunction circulant_det_closed(int m, const RationalFunction& z) {
  if (m < 1) throw InvalidArgument("color count must be >= 1");
  RationalFunction head = RationalFunction(1) + RationalFunction(m - 1) * z;
  return head * (RationalFunction(1) - z).pow(static_cast<unsigned long>(m - 1));
}

/// (1 + q sum gamma^k)^(-1) = (1 + (m-2) q - q sum gamma^k) / ((1 + (m-1) q)(1 - q))
inline GroupAlgebraElement xi_inverse_closed(int m) {
  if (m < 1) throw InvalidArgument("color count must be >= 1");
  if (m == 1) return GroupAlgebraElement::identity(1, 1);
  const RationalFunction q = RationalFunction::q();
  const RationalFunction scale =
      (RationalFunction(1) + RationalFunction(m - 1) * q) * (RationalFunction(1) - q);
  GroupAlgebraElement body = GroupAlgebraElement::scalar(m, 1, RationalFunction(1) + RationalFunction(m - 2) * q);
  const auto gamma = cyclic_generator(m);
  for (int k = 1; k < m; ++k) body.add_term(power(gamma, static_cast<unsigned>(k)), -q);
  return scale.inverse() * body;
}

/// (1 - z gamma)^(-1) = (1 / (1 - z^m)) sum_{i=0}^{m-1} z^i gamma^i
inline GroupAlgebraElement gamma_inverse_closed(int m, const RationalFunction& z) {
  if (m < 1) throw InvalidArgument("color count must be >= 1");
  const auto gamma = cyclic_generator(m);
  GroupAlgebraElement sum(m, 1);
  for (int i = 0; i < m; ++i) sum.add_term(power(gamma, static_cast<unsigned>(i)), z.pow(static_cast<unsigned long>(i)));
  return (RationalFunction(1) - z.pow(static_cast<unsigned long>(m))).inverse() * sum;
}

}  // namespace quon
