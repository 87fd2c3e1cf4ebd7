#pragma once

/*
 * Vacuum expectation values of the deformed quon algebra
 *
 *     a_{j,l} a+_{i,k} = q a+_{i,k} a_{j,l} + q^beta(k,l) delta_{ij},   a_{i,k}|0> = 0.
 *
 * States reachable from |0> are kept as linear combinations of creator words
 * a+_{i1,k1} ... a+_{ir,kr}|0>.  An annihilator is pushed through a creator
 * word in one step:
 *
 *     a_{j,l} a+_{i1,k1}...a+_{ir,kr}|0> = sum_{u : i_u = j} q^(u-1) q^beta(k_u,l) (word without u)|0>
 *
 * Bra convention: a bra (j_1,l_1)...(j_s,l_s) denotes the operator
 * a_{j_s,l_s} ... a_{j_1,l_1}, so bra entry 1 is applied first (innermost).
 */

#include <cstddef>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "quon/colored_perm.hpp"
#include "quon/rational_function.hpp"

namespace quon {

struct OperatorToken {
  enum class Kind { annihilate, create };
  Kind kind = Kind::create;
  int mode = 1;
  int color = 1;

  friend auto operator<=>(const OperatorToken&, const OperatorToken&) = default;
};

/// A word of operator tokens over m colors.
class OperatorWord {
 public:
  OperatorWord(int m, std::vector<OperatorToken> tokens) : m_(m), tokens_(std::move(tokens)) {
    if (m_ < 1) throw InvalidArgument("color count must be >= 1");
    for (const auto& t : tokens_) validate(t, m_);
  }

  static void validate(const OperatorToken& t, int m) {
    if (t.mode < 1) throw InvalidArgument("operator mode must be >= 1");
    if (t.color < 1 || t.color > m) throw InvalidArgument("operator color out of range [1, m]");
  }

  int m() const { return m_; }
  const std::vector<OperatorToken>& tokens() const { return tokens_; }

 private:
  int m_;
  std::vector<OperatorToken> tokens_;
};

/// (mode, color) pairs of a creator word, left to right.
using CreatorWord = std::vector<std::pair<int, int>>;

/// Linear combination of creator words applied to |0>; zero terms are dropped.
class CreatorState {
 public:
  explicit CreatorState(int m) : m_(m) {}

  static CreatorState vacuum(int m) {
    CreatorState s(m);
    s.add(CreatorWord{}, RationalFunction(1));
    return s;
  }

  /// a+_{ket_1} ... a+_{ket_n} |0>
  static CreatorState from_word(int m, const CreatorWord& ket) {
    for (auto [mode, color] : ket) OperatorWord::validate({OperatorToken::Kind::create, mode, color}, m);
    CreatorState s(m);
    s.add(ket, RationalFunction(1));
    return s;
  }

  int m() const { return m_; }
  const std::map<CreatorWord, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RationalFunction coefficient(const CreatorWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add(const CreatorWord& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  int m_;
  std::map<CreatorWord, RationalFunction> terms_;
};

/// 0 when the colors agree mod m, 1 otherwise.
inline int beta(int k, int l, int m) {
  if (k < 1 || k > m || l < 1 || l > m) throw InvalidArgument("beta: color out of range");
  return wrap_color(static_cast<long>(l) - k, m) == m ? 0 : 1;
}

inline CreatorState apply_annihilator(int mode, int color, const CreatorState& s) {
  OperatorWord::validate({OperatorToken::Kind::annihilate, mode, color}, s.m());
  CreatorState out(s.m());
  for (const auto& [word, coeff] : s.terms()) {
    for (std::size_t u = 0; u < word.size(); ++u) {
      if (word[u].first != mode) continue;
      const auto exponent = u + static_cast<std::size_t>(beta(word[u].second, color, s.m()));
      CreatorWord rest;
      rest.reserve(word.size() - 1);
      rest.insert(rest.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(u));
      rest.insert(rest.end(), word.begin() + static_cast<std::ptrdiff_t>(u) + 1, word.end());
      out.add(rest, coeff * RationalFunction(Polynomial::monomial(1, exponent)));
    }
  }
  return out;
}

/// <0| a_{bra_s} ... a_{bra_1} a+_{ket_1} ... a+_{ket_n} |0>
inline RationalFunction vacuum_expectation(const CreatorWord& bra, const CreatorWord& ket, int m) {
  for (auto [mode, color] : bra) OperatorWord::validate({OperatorToken::Kind::annihilate, mode, color}, m);
  CreatorState state = CreatorState::from_word(m, ket);
  for (auto [mode, color] : bra) {
    state = apply_annihilator(mode, color, state);
    if (state.is_zero()) break;
  }
  RationalFunction value = state.coefficient(CreatorWord{});
  if (!value.is_polynomial()) throw Error("vacuum expectation produced a non-polynomial value");
  return value;
}

/// Creator word a+_{theta(1)} ... a+_{theta(n)}.
inline CreatorWord word_of(const ColoredArrangement& theta) {
  CreatorWord w;
  w.reserve(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) w.emplace_back(theta.value(i), theta.color(i));
  return w;
}

/// sum of q^cinv(pi) over all pi in U_m wr S_n with theta_ket . pi = theta_bra.
inline RationalFunction cosym_expectation(const ColoredArrangement& theta_bra,
                                          const ColoredArrangement& theta_ket) {
  if (theta_bra.m() != theta_ket.m()) throw SizeMismatch("cosym_expectation: color counts differ");
  if (theta_bra.size() != theta_ket.size() || theta_bra.multiset() != theta_ket.multiset())
    return RationalFunction();
  std::vector<Integer> coeffs;
  for (const auto& pi : enumerate_group(theta_ket.m(), theta_ket.size())) {
    if (act(theta_ket, pi) != theta_bra) continue;
    const unsigned e = cinv(pi);
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] += 1;
  }
  return RationalFunction(Polynomial(std::move(coeffs)));
}

/// Parses the word grammar "(i,k)(i,k)..." and checks colors against m.
inline CreatorWord parse_word(int m, std::string_view text) {
  CreatorWord w = parse_pairs(text);
  for (auto [mode, color] : w) {
    if (mode < 1) throw ParseError("operator mode must be >= 1 in '" + std::string(text) + "'");
    if (color < 1 || color > m)
      throw InvalidArgument("color " + std::to_string(color) + " out of range [1, " + std::to_string(m) + "]");
  }
  return w;
}

}  // namespace quon
