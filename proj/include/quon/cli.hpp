#pragma once

/*
 * Command-line front end.  run_cli() is the whole program; tools/quon.cpp only
 * forwards argv.  Exit codes: 0 success / verified, 1 verification mismatch,
 * 2 usage, parse or limit error.
 *
 *   quon expect    --m M --bra WORD --ket WORD
 *   quon gram      --m M --multiset I [--path operator|combinatorial]
 *   quon det       --m M --n N [--verify]
 *   quon inverse   --m M --n N [--verify]
 *   quon posdef    --m M --n N (--q Q | --from LO --to HI --steps K) [--eigenvalues]
 *   quon enumerate --m M (--n N | --multiset I)
 *
 * Every subcommand accepts --format text|json|csv (where meaningful) and
 * --output FILE.  Words use "(i,k)(i,k)..."; a bra (j1,l1)...(js,ls) stands
 * for the operator a_{js,ls} ... a_{j1,l1}.  Block sizes are limited to
 * m^n * n! <= 10000 unless QUON_MAX_BLOCK or --max-block raises the limit.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "json.hpp"

#include "quon/colored_perm.hpp"
#include "quon/formulas.hpp"
#include "quon/gram.hpp"
#include "quon/posdef.hpp"
#include "quon/quon_engine.hpp"

namespace quon::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2 };

struct CliConfig {
  std::string subcommand;
  int m = 1;
  int n = 0;
  std::string multiset;
  std::string bra;
  std::string ket;
  std::string path = "operator";
  std::string format = "text";
  std::string output;
  std::string q;
  std::string q_from;
  std::string q_to;
  std::size_t steps = 0;
  bool verify = false;
  bool eigenvalues = false;
  std::optional<std::size_t> max_block;
};

constexpr std::size_t kDefaultMaxBlock = 10000;

inline std::size_t block_limit(const CliConfig& cfg) {
  if (cfg.max_block) return *cfg.max_block;
  if (const char* env = std::getenv("QUON_MAX_BLOCK")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw ParseError(std::string("QUON_MAX_BLOCK is not a number: '") + env + "'");
    }
  }
  return kDefaultMaxBlock;
}

inline void check_limit(const CliConfig& cfg, int m, std::size_t n) {
  // m^n n! with early exit before overflow.
  const std::size_t limit = block_limit(cfg);
  std::size_t order = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    order *= i * static_cast<std::size_t>(m);
    if (order > limit)
      throw LimitExceeded("group order m^n*n! for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                          " exceeds the block limit " + std::to_string(limit) +
                          " (raise it with --max-block or QUON_MAX_BLOCK)");
  }
}

inline void require_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw ParseError("format '" + cfg.format + "' not supported by '" + cfg.subcommand + "'");
}

inline int cmd_expect(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const CreatorWord bra = parse_word(cfg.m, cfg.bra);
  const CreatorWord ket = parse_word(cfg.m, cfg.ket);
  const RationalFunction value = vacuum_expectation(bra, ket, cfg.m);
  if (cfg.format == "json") {
    nlohmann::json j{{"m", cfg.m}, {"bra", cfg.bra}, {"ket", cfg.ket}, {"value", to_string(value)}};
    out << j.dump(2) << "\n";
  } else {
    out << to_string(value) << "\n";
  }
  return ok;
}

inline int cmd_gram(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  const Multiset set = parse_multiset(cfg.multiset);
  check_limit(cfg, cfg.m, set.size());
  GramPath path;
  if (cfg.path == "operator") path = GramPath::operator_rewriting;
  else if (cfg.path == "combinatorial") path = GramPath::combinatorial;
  else throw ParseError("unknown path '" + cfg.path + "' (operator|combinatorial)");
  const GramBlock block = build_gram(cfg.m, set, path);
  if (cfg.format == "json") {
    out << to_json(block).dump(2) << "\n";
  } else {
    // text and csv share the CSV table
    out << to_csv(block);
  }
  return ok;
}

inline int cmd_det(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (cfg.n < 1) throw ParseError("det needs --n >= 1");
  check_limit(cfg, cfg.m, static_cast<std::size_t>(cfg.n));
  const auto n = static_cast<std::size_t>(cfg.n);
  const DetFactorization f = det_factorization(cfg.m, n);
  const Polynomial expanded = f.expand();
  nlohmann::json j{{"m", cfg.m}, {"n", cfg.n}, {"factored", to_string(f)}, {"expanded", to_string(expanded)}};
  int code = ok;
  std::string verdict;
  if (cfg.verify) {
    const RationalFunction oracle = det_bruteforce(rep_matrix(sum_q_cinv(cfg.m, n), Multiset::range(cfg.n)));
    const bool match = oracle == RationalFunction(expanded);
    const bool uniform = oracle == RationalFunction(det_uniform_exponent_form(cfg.m, n));
    verdict = match ? "MATCH" : "MISMATCH";
    code = match ? ok : mismatch;
    j["oracle"] = to_string(oracle);
    j["verdict"] = verdict;
    j["uniform_exponent_form_matches_oracle"] = uniform;
  }
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
    return code;
  }
  out << "det R(sum q^cinv pi) over U_" << cfg.m << " wr S_" << cfg.n << "\n";
  out << "factored: " << j["factored"].get<std::string>() << "\n";
  out << "expanded: " << j["expanded"].get<std::string>() << "\n";
  if (cfg.verify) {
    out << "oracle:   " << j["oracle"].get<std::string>() << "\n";
    out << verdict << "\n";
  }
  return code;
}

inline int cmd_inverse(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (cfg.n < 1) throw ParseError("inverse needs --n >= 1");
  check_limit(cfg, cfg.m, static_cast<std::size_t>(cfg.n));
  const auto n = static_cast<std::size_t>(cfg.n);
  const GroupAlgebraElement inv = inverse_closed_form(cfg.m, n);
  int code = ok;
  std::string verdict;
  if (cfg.verify) {
    const bool match = verify_inverse(cfg.m, n);
    verdict = match ? "MATCH (two-sided)" : "MISMATCH";
    code = match ? ok : mismatch;
  }
  if (cfg.format == "json") {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [g, c] : inv.terms()) terms.push_back({{"element", to_string(g)}, {"coefficient", to_string(c)}});
    nlohmann::json j{{"m", cfg.m}, {"n", cfg.n}, {"inverse", terms}};
    if (cfg.verify) j["verdict"] = verdict;
    out << j.dump(2) << "\n";
    return code;
  }
  out << "(sum q^cinv pi)^-1 over U_" << cfg.m << " wr S_" << cfg.n << " (" << inv.size() << " terms)\n";
  for (const auto& [g, c] : inv.terms()) out << to_string(g) << "  " << to_string(c) << "\n";
  if (cfg.verify) out << verdict << "\n";
  return code;
}

/// Approximate eigenvalues of the block evaluated at q0 (diagnostic only).
inline std::vector<double> approximate_eigenvalues(const GramBlock& block, const Rational& q0) {
  const std::size_t dim = block.dimension();
  Eigen::MatrixXd a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = block.entries(r, c).eval(q0).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline int cmd_posdef(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "csv"});
  if (cfg.n < 1) throw ParseError("posdef needs --n >= 1");
  check_limit(cfg, cfg.m, static_cast<std::size_t>(cfg.n));
  const auto n = static_cast<std::size_t>(cfg.n);
  std::vector<Rational> points;
  if (!cfg.q.empty()) {
    if (!cfg.q_from.empty() || !cfg.q_to.empty()) throw ParseError("use either --q or --from/--to/--steps");
    points.push_back(parse_rational(cfg.q));
  } else {
    if (cfg.q_from.empty() || cfg.q_to.empty() || cfg.steps < 1)
      throw ParseError("posdef needs --q, or --from, --to and --steps >= 1");
    points = scan_points(parse_rational(cfg.q_from), parse_rational(cfg.q_to), cfg.steps);
  }
  const GramBlock block = build_gram(cfg.m, Multiset::range(cfg.n));
  std::vector<PosDefReport> reports;
  for (const auto& p : points) reports.push_back(certify_block(block, p));

  // Inside the open positivity interval anything but positive_definite is a mismatch.
  const auto [lo, hi] = positivity_interval(cfg.m);
  int code = ok;
  for (const auto& r : reports)
    if (r.q0 > lo && r.q0 < hi && r.verdict != Verdict::positive_definite) code = mismatch;

  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << reports_to_csv(reports);
  } else {
    for (const auto& r : reports)
      out << "m=" << cfg.m << " n=" << cfg.n << " q0=" << to_string(r.q0) << ": " << to_string(r.verdict)
          << " (smallest minor " << to_string(r.smallest_minor()) << ")\n";
  }
  if (cfg.eigenvalues) {
    out << "# approximate eigenvalues (double precision, diagnostic only)\n";
    out << "q0,index,eigenvalue_approx\n";
    for (const auto& p : points) {
      const auto ev = approximate_eigenvalues(block, p);
      for (std::size_t i = 0; i < ev.size(); ++i) {
        std::ostringstream v;
        v.precision(12);
        v << ev[i];
        out << to_string(p) << "," << i << "," << v.str() << "\n";
      }
    }
  }
  return code;
}

inline int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "csv"});
  const bool by_multiset = !cfg.multiset.empty();
  if (!by_multiset && cfg.n < 0) throw ParseError("enumerate needs --n or --multiset");
  const Multiset set = by_multiset ? parse_multiset(cfg.multiset) : Multiset::range(cfg.n);
  check_limit(cfg, cfg.m, set.size());
  const auto elements = enumerate_arrangements(cfg.m, set);
  const bool with_cinv = set.is_range();
  nlohmann::json arr = nlohmann::json::array();
  if (cfg.format == "csv") out << (with_cinv ? "index,element,cinv\n" : "index,element\n");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string s = to_string(elements[i]);
    std::optional<unsigned> c;
    if (with_cinv) c = cinv(ColoredPermutation(elements[i]));
    if (cfg.format == "json") {
      nlohmann::json e{{"index", i}, {"element", s}};
      if (c) e["cinv"] = *c;
      arr.push_back(e);
    } else if (cfg.format == "csv") {
      out << i << "," << detail::csv_field(s);
      if (c) out << "," << *c;
      out << "\n";
    } else {
      out << i << "  " << s;
      if (c) out << "  cinv=" << *c;
      out << "\n";
    }
  }
  if (cfg.format == "json") out << arr.dump(2) << "\n";
  return ok;
}

inline int dispatch(const CliConfig& cfg, std::ostream& out) {
  if (cfg.m < 1) throw ParseError("--m must be >= 1");
  if (cfg.subcommand == "expect") return cmd_expect(cfg, out);
  if (cfg.subcommand == "gram") return cmd_gram(cfg, out);
  if (cfg.subcommand == "det") return cmd_det(cfg, out);
  if (cfg.subcommand == "inverse") return cmd_inverse(cfg, out);
  if (cfg.subcommand == "posdef") return cmd_posdef(cfg, out);
  if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg, out);
  throw ParseError("unknown subcommand '" + cfg.subcommand + "'");
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact vacuum expectations, Gram blocks and determinant checks for the deformed quon algebra",
               "quon"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::size_t max_block = 0;

  auto common = [&](CLI::App* sub, bool needs_n) {
    sub->add_option("--m", cfg.m, "number of colors (>= 1)")->required();
    if (needs_n) sub->add_option("--n", cfg.n, "number of particles")->required();
    sub->add_option("--format", cfg.format, "text|json|csv")->default_val("text");
    sub->add_option("--output", cfg.output, "write output to FILE instead of stdout");
    sub->add_option("--max-block", max_block, "override the m^n*n! size limit");
  };

  auto* expect = app.add_subcommand("expect", "vacuum expectation <0| bra ket |0>");
  common(expect, false);
  expect->add_option("--bra", cfg.bra, "annihilator word (j1,l1)...(js,ls); entry 1 acts first")->required();
  expect->add_option("--ket", cfg.ket, "creator word (i1,k1)...(in,kn)")->required();

  auto* gram = app.add_subcommand("gram", "Gram block M_I in the canonical basis");
  common(gram, false);
  gram->add_option("--multiset", cfg.multiset, "multiset I, e.g. 1,2 or 2,2,5")->required();
  gram->add_option("--path", cfg.path, "operator|combinatorial")->default_val("operator");

  auto* det = app.add_subcommand("det", "closed-form determinant of M_[n]");
  common(det, true);
  det->add_flag("--verify", cfg.verify, "compare with a brute-force Bareiss determinant");

  auto* inv = app.add_subcommand("inverse", "closed-form inverse of sum q^cinv pi");
  common(inv, true);
  inv->add_flag("--verify", cfg.verify, "check both products with sum q^cinv pi");

  auto* pd = app.add_subcommand("posdef", "exact Sylvester certificate of M_[n] at rational q");
  common(pd, true);
  pd->add_option("--q", cfg.q, "evaluation point p/q");
  pd->add_option("--from", cfg.q_from, "scan start p/q");
  pd->add_option("--to", cfg.q_to, "scan end p/q");
  pd->add_option("--steps", cfg.steps, "number of scan points, endpoints included");
  pd->add_flag("--eigenvalues", cfg.eigenvalues, "append approximate eigenvalues as CSV");

  auto* en = app.add_subcommand("enumerate", "list U_m wr S_n (with cinv) or U_m wr S_I");
  common(en, false);
  cfg.n = -1;
  en->add_option("--n", cfg.n, "list U_m wr S_n");
  en->add_option("--multiset", cfg.multiset, "list the colored arrangements of I");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (max_block > 0) cfg.max_block = max_block;

  try {
    if (cfg.output.empty()) return dispatch(cfg, out);
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer);
    std::ofstream file(cfg.output);
    if (!file) throw Error("cannot open output file '" + cfg.output + "'");
    file << buffer.str();
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("quon");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace quon::cli
