#pragma once

// Exact positive-definiteness certificates for Gram blocks at rational q
// (Sylvester's criterion on exact leading principal minors).

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "quon/gram.hpp"

namespace quon {

enum class Verdict { positive_definite, singular, indefinite };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::positive_definite: return "positive_definite";
    case Verdict::singular: return "singular";
    case Verdict::indefinite: return "indefinite";
  }
  return "unknown";
}

struct PosDefReport {
  int m = 1;
  Multiset multiset;
  Rational q0;
  std::vector<Rational> minors;
  Verdict verdict = Verdict::indefinite;

  Rational smallest_minor() const {
    return minors.empty() ? Rational(1) : *std::min_element(minors.begin(), minors.end());
  }
};

/// Classifies a minor sequence: the first non-positive minor decides.
inline Verdict classify_minors(const std::vector<Rational>& minors) {
  for (const auto& d : minors) {
    if (d < 0) return Verdict::indefinite;
    if (d == 0) return Verdict::singular;
  }
  return Verdict::positive_definite;
}

inline std::vector<Rational> leading_minors(const Matrix<RationalFunction>& a, const Rational& q0) {
  return bareiss_leading_minors(evaluate(a, q0), Rational(1));
}

inline std::vector<Rational> leading_minors(const GramBlock& block, const Rational& q0) {
  return leading_minors(block.entries, q0);
}

inline PosDefReport certify_block(const GramBlock& block, const Rational& q0) {
  PosDefReport r;
  r.m = block.m;
  r.multiset = block.multiset;
  r.q0 = q0;
  r.minors = leading_minors(block, q0);
  r.verdict = classify_minors(r.minors);
  return r;
}

/// Builds M_[n] and applies Sylvester's criterion at q0.
inline PosDefReport certify(int m, std::size_t n, const Rational& q0) {
  return certify_block(build_gram(m, Multiset::range(static_cast<int>(n))), q0);
}

/// `steps` evenly spaced points from q_lo to q_hi inclusive.
inline std::vector<Rational> scan_points(const Rational& q_lo, const Rational& q_hi, std::size_t steps) {
  if (steps < 1) throw InvalidArgument("scan needs steps >= 1");
  std::vector<Rational> pts;
  if (steps == 1) return {q_lo};
  for (std::size_t j = 0; j < steps; ++j) {
    const Rational t = make_rational(Integer(static_cast<unsigned long>(j)), Integer(static_cast<unsigned long>(steps - 1)));
    Rational p = q_lo + (q_hi - q_lo) * t;
    p.canonicalize();
    pts.push_back(p);
  }
  return pts;
}

inline std::vector<PosDefReport> scan(int m, std::size_t n, const Rational& q_lo, const Rational& q_hi,
                                      std::size_t steps) {
  const auto points = scan_points(q_lo, q_hi, steps);
  const GramBlock block = build_gram(m, Multiset::range(static_cast<int>(n)));
  std::vector<PosDefReport> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(certify_block(block, p));
  return out;
}

/// Open interval on which the form is positive definite: (-1, 1) for m = 1,
/// (1/(1-m), 1) otherwise.
inline std::pair<Rational, Rational> positivity_interval(int m) {
  if (m < 1) throw InvalidArgument("color count must be >= 1");
  if (m == 1) return {Rational(-1), Rational(1)};
  return {make_rational(1, 1 - m), Rational(1)};
}

/// Same block with rows and columns permuted by `order` (order[i] = old index).
inline GramBlock permute_basis(const GramBlock& block, const std::vector<std::size_t>& order) {
  GramBlock out;
  out.m = block.m;
  out.multiset = block.multiset;
  const std::size_t dim = block.dimension();
  out.entries = Matrix<RationalFunction>(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out.basis.push_back(block.basis[order[i]]);
    for (std::size_t j = 0; j < dim; ++j) out.entries(i, j) = block.entries(order[i], order[j]);
  }
  return out;
}

inline std::string reports_to_csv(const std::vector<PosDefReport>& reports) {
  std::string out = "q0,verdict,smallest_minor\n";
  for (const auto& r : reports)
    out += to_string(r.q0) + "," + to_string(r.verdict) + "," + to_string(r.smallest_minor()) + "\n";
  return out;
}

inline nlohmann::json to_json(const PosDefReport& r) {
  nlohmann::json j;
  j["m"] = r.m;
  j["multiset"] = r.multiset.values();
  j["q0"] = to_string(r.q0);
  std::vector<std::string> minors;
  for (const auto& d : r.minors) minors.push_back(to_string(d));
  j["minors"] = minors;
  j["smallest_minor"] = to_string(r.smallest_minor());
  j["verdict"] = to_string(r.verdict);
  return j;
}

}  // namespace quon
