#pragma once

/*
 * Closed forms for X = sum_{pi in U_m wr S_n} q^cinv(pi) pi and brute-force
 * oracles for them.
 *
 * Determinant of the regular representation:
 *
 *     det R(X) = ((1 + (m-1) q)(1 - q)^(m-1))^(n m^(n-1) n!)
 *                * prod_{i=1}^{n-1} (1 - q^(i^2+i))^((n-i) m^n n! / (i^2+i))
 *
 * X factors as (sum_sigma q^inv(sigma) sigma)(sum_{xi in C_n} q^cinv(xi) xi),
 * and the color part is prod_i (1 + q sum_k xi_i^k).  Each color factor
 * lives in a cyclic subgroup of index m^(n-1) n!, which is where the color
 * exponent comes from.
 *
 * Inverse:
 *
 *     X^(-1) = rho_1 ... rho_n * gamma_n eps_{n-1} gamma_{n-1} eps_{n-2} ... gamma_2 eps_1
 *
 *     rho_k   = (1 + (m-2) q - q sum_{i=1}^{m-1} xi_k^i) / ((1 + (m-1) q)(1 - q))
 *     gamma_n = (1 - q^(n-1) t_{1,n}) (1 - q^(n-2) t_{2,n}) ... (1 - q t_{n-1,n})
 *     eps_n   = E_{n,n} E_{n,n-1} ... E_{n,1}
 *     E_{n,k} = sum_{i=0}^{n-k} q^((n-k+2) i) t_{k,n}^i / (1 - q^((n-k+1)(n-k+2)))
 *
 * with t_{k,n} the cycle n -> n-1 -> ... -> k -> n, colors neutral.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quon/colored_perm.hpp"
#include "quon/gram.hpp"
#include "quon/group_algebra.hpp"

namespace quon {

struct DetFactorization {
  int m = 1;
  std::size_t n = 1;
  Polynomial color_factor;            // (1 + (m-1) q)(1 - q)^(m-1)
  unsigned long color_exponent = 0;   // n m^(n-1) n!
  /// (1 - q^(i^2+i), exponent) for i = 1..n-1
  std::vector<std::pair<Polynomial, unsigned long>> perm_factors;

  Polynomial expand() const {
    Polynomial out = color_factor.pow(color_exponent);
    for (const auto& [base, e] : perm_factors) out *= base.pow(e);
    return out;
  }
};

namespace detail {
inline unsigned long factorial(std::size_t n) {
  unsigned long f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}
inline unsigned long upow(unsigned long b, std::size_t e) {
  unsigned long r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}
inline Polynomial color_factor(int m) {
  return Polynomial{1, m - 1} * Polynomial{1, -1}.pow(static_cast<unsigned long>(m - 1));
}
}  // namespace detail

inline DetFactorization det_factorization(int m, std::size_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("det_factorization needs m >= 1, n >= 1");
  DetFactorization f;
  f.m = m;
  f.n = n;
  const unsigned long mm = static_cast<unsigned long>(m);
  const unsigned long nfact = detail::factorial(n);
  f.color_factor = detail::color_factor(m);
  f.color_exponent = n * detail::upow(mm, n - 1) * nfact;
  const unsigned long group = detail::upow(mm, n) * nfact;
  for (std::size_t i = 1; i < n; ++i) {
    const unsigned long d = i * i + i;
    const unsigned long top = (n - i) * group;
    if (top % d != 0)
      throw Error("determinant exponent (" + std::to_string(top) + ") not divisible by " + std::to_string(d));
    f.perm_factors.emplace_back(Polynomial::one() - Polynomial::monomial(1, d), top / d);
  }
  return f;
}

inline Polynomial det_closed_form(int m, std::size_t n) { return det_factorization(m, n).expand(); }

/// The same product with the overall exponent m^n n! applied to the color factor,
/// kept to document that it disagrees with the brute-force determinant.
inline Polynomial det_uniform_exponent_form(int m, std::size_t n) {
  DetFactorization f = det_factorization(m, n);
  f.color_exponent = detail::upow(static_cast<unsigned long>(m), n) * detail::factorial(n);
  return f.expand();
}

inline std::string to_string(const DetFactorization& f) {
  std::string out = "(" + to_string(f.color_factor) + ")^" + std::to_string(f.color_exponent);
  for (const auto& [base, e] : f.perm_factors) out += " * (" + to_string(base) + ")^" + std::to_string(e);
  return out;
}

inline RationalFunction det_bruteforce(const Matrix<RationalFunction>& a) { return determinant(a); }
inline RationalFunction det_bruteforce(const RepMatrix& r) { return determinant(r.entries); }
inline RationalFunction det_bruteforce(const GramBlock& b) { return determinant(b.entries); }

/// t_{k,n}: the cycle n -> n-1 -> ... -> k -> n in S_n (colors neutral).
inline ColoredPermutation t_cycle(int m, std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw InvalidArgument("t_cycle: k out of range");
  std::vector<int> sigma(n);
  for (std::size_t j = 1; j <= n; ++j) sigma[j - 1] = static_cast<int>(j);
  for (std::size_t j = k + 1; j <= n; ++j) sigma[j - 1] = static_cast<int>(j) - 1;
  sigma[k - 1] = static_cast<int>(n);
  return ColoredPermutation(m, std::move(sigma), std::vector<int>(n, m));
}

struct InverseFactors {
  std::vector<GroupAlgebraElement> rho;      // rho_1 .. rho_n
  std::vector<GroupAlgebraElement> gamma;    // gamma_2 .. gamma_n
  std::vector<GroupAlgebraElement> epsilon;  // eps_1 .. eps_{n-1}
};

/// rho_k in U_m wr S_n: the cyclic inverse of 1 + q(xi + ... + xi^(m-1)) transported to <xi_k>.
inline GroupAlgebraElement rho(int m, std::size_t n, std::size_t k) {
  return embed_cyclic(xi_inverse_closed(m), n, k);
}

/// gamma_j, built inside S_j and embedded in U_m wr S_n.
inline GroupAlgebraElement gamma_factor(int m, std::size_t j, std::size_t n) {
  const RationalFunction q = RationalFunction::q();
  GroupAlgebraElement out = GroupAlgebraElement::identity(m, j);
  for (std::size_t k = 1; k < j; ++k) {
    GroupAlgebraElement f = GroupAlgebraElement::identity(m, j);
    f.add_term(t_cycle(m, k, j), -q.pow(j - k));
    out = out * f;
  }
  return embed_prefix(out, n);
}

/// eps_j, built inside S_j and embedded in U_m wr S_n.
inline GroupAlgebraElement epsilon_factor(int m, std::size_t j, std::size_t n) {
  const RationalFunction q = RationalFunction::q();
  GroupAlgebraElement out = GroupAlgebraElement::identity(m, j);
  for (std::size_t k = j; k >= 1; --k) {
    const auto t = t_cycle(m, k, j);
    const std::size_t len = j - k + 1;
    GroupAlgebraElement f(m, j);
    for (std::size_t i = 0; i < len; ++i)
      f.add_term(power(t, static_cast<unsigned>(i)), q.pow((j - k + 2) * i));
    const RationalFunction denom = RationalFunction(1) - q.pow(len * (len + 1));
    out = out * (denom.inverse() * f);
  }
  return embed_prefix(out, n);
}

inline InverseFactors inverse_factors(int m, std::size_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("inverse_factors needs m >= 1, n >= 1");
  InverseFactors f;
  for (std::size_t k = 1; k <= n; ++k) f.rho.push_back(rho(m, n, k));
  for (std::size_t j = 2; j <= n; ++j) f.gamma.push_back(gamma_factor(m, j, n));
  for (std::size_t j = 1; j < n; ++j) f.epsilon.push_back(epsilon_factor(m, j, n));
  return f;
}

inline GroupAlgebraElement inverse_closed_form(int m, std::size_t n) {
  const InverseFactors f = inverse_factors(m, n);
  GroupAlgebraElement out = GroupAlgebraElement::identity(m, n);
  for (const auto& r : f.rho) out = out * r;
  for (std::size_t i = n - 1; i >= 1; --i) {
    out = out * f.gamma[i - 1];   // gamma_{i+1}
    out = out * f.epsilon[i - 1]; // eps_i
  }
  return out;
}

/// Both products of the closed-form inverse with sum q^cinv(pi) are the identity.
inline bool verify_inverse(int m, std::size_t n) {
  const GroupAlgebraElement x = sum_q_cinv(m, n);
  const GroupAlgebraElement inv = inverse_closed_form(m, n);
  const GroupAlgebraElement one = GroupAlgebraElement::identity(m, n);
  return inv * x == one && x * inv == one;
}

/// (sum_sigma q^inv(sigma) sigma, sum_{xi in C_n} q^cinv(xi) xi)
inline std::pair<GroupAlgebraElement, GroupAlgebraElement> factor_sum(int m, std::size_t n) {
  GroupAlgebraElement perm_sum(m, n), color_sum(m, n);
  for (const auto& pi : enumerate_group(m, n)) {
    auto [perm, color] = decompose(pi);
    const RationalFunction w(Polynomial::monomial(1, cinv(pi)));
    if (color.is_neutral()) perm_sum.add_term(pi, w);
    if (perm.is_neutral()) color_sum.add_term(pi, w);
  }
  return {std::move(perm_sum), std::move(color_sum)};
}

/// prod_{i=1}^n (1 + q sum_{k=1}^{m-1} xi_i^k)
inline GroupAlgebraElement color_sum_product_form(int m, std::size_t n) {
  GroupAlgebraElement out = GroupAlgebraElement::identity(m, n);
  for (std::size_t i = 1; i <= n; ++i) out = out * embed_cyclic(cyclic_one_plus_sum(m, RationalFunction::q()), n, i);
  return out;
}

}  // namespace quon
