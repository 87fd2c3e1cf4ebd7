#pragma once

/*
 * Finite Gram blocks M_I of the vacuum bilinear form.
 *
 * For a multiset I of n modes, rows and columns are indexed by the colored
 * arrangements of I in canonical order, and
 *
 *     M_I[r][c] = <0| a_{bra(n)} ... a_{bra(1)} a+_{ket(1)} ... a+_{ket(n)} |0>
 *
 * with bra = basis[r] and ket = basis[c].  Blocks for different multisets
 * are orthogonal, so the full form is their direct sum and only individual
 * blocks are ever built.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "quon/colored_perm.hpp"
#include "quon/group_algebra.hpp"
#include "quon/matrix.hpp"
#include "quon/quon_engine.hpp"

namespace quon {

enum class GramPath { operator_rewriting, combinatorial };

struct GramBlock {
  int m = 1;
  Multiset multiset;
  std::vector<ColoredArrangement> basis;
  Matrix<RationalFunction> entries;

  std::size_t dimension() const { return basis.size(); }

  bool is_symmetric() const { return entries == entries.transpose(); }
};

/// sum over U_m wr S_n of q^cinv(pi) pi
inline GroupAlgebraElement sum_q_cinv(int m, std::size_t n) {
  GroupAlgebraElement x(m, n);
  for (const auto& pi : enumerate_group(m, n)) x.add_term(pi, RationalFunction(Polynomial::monomial(1, cinv(pi))));
  return x;
}

inline GramBlock build_gram(int m, const Multiset& set, GramPath path = GramPath::operator_rewriting) {
  GramBlock block;
  block.m = m;
  block.multiset = set;
  block.basis = enumerate_arrangements(m, set);
  const std::size_t dim = block.basis.size();
  block.entries = Matrix<RationalFunction>(dim, dim);
  std::vector<CreatorWord> words;
  words.reserve(dim);
  for (const auto& b : block.basis) words.push_back(word_of(b));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      block.entries(r, c) = path == GramPath::operator_rewriting
                                ? vacuum_expectation(words[r], words[c], m)
                                : cosym_expectation(block.basis[r], block.basis[c]);
  return block;
}

/// M_I (operator path) equals the representation of sum q^cinv(pi) on Q(q)[U_m wr S_I].
inline bool verify_representation(int m, const Multiset& set) {
  const GramBlock block = build_gram(m, set, GramPath::operator_rewriting);
  const RepMatrix rep = rep_matrix(sum_q_cinv(m, set.size()), set);
  return rep.basis == block.basis && rep.entries == block.entries;
}

/// Entries evaluated at a rational q0 (Gram entries are polynomials, so never a pole).
inline Matrix<Rational> evaluate(const Matrix<RationalFunction>& a, const Rational& q0) {
  return a.map([&q0](const RationalFunction& f) { return f.eval(q0); });
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Header row of basis strings, then one row of polynomial strings per basis element.
inline std::string to_csv(const GramBlock& block) {
  std::string out;
  for (std::size_t c = 0; c < block.dimension(); ++c) {
    if (c) out += ",";
    out += detail::csv_field(to_string(block.basis[c]));
  }
  out += "\n";
  for (std::size_t r = 0; r < block.dimension(); ++r) {
    for (std::size_t c = 0; c < block.dimension(); ++c) {
      if (c) out += ",";
      out += detail::csv_field(to_string(block.entries(r, c)));
    }
    out += "\n";
  }
  return out;
}

inline nlohmann::json to_json(const GramBlock& block) {
  nlohmann::json j;
  j["m"] = block.m;
  j["multiset"] = block.multiset.values();
  std::vector<std::string> basis;
  for (const auto& b : block.basis) basis.push_back(to_string(b));
  j["basis"] = basis;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < block.dimension(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < block.dimension(); ++c) row.push_back(to_string(block.entries(r, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

}  // namespace quon
