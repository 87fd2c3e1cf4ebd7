#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "golden_m3_n2.hpp"
#include "quon/cli.hpp"

namespace quon::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

/// Splits one CSV record; handles double-quoted fields with "" escapes.
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

TEST(CliTest, ExpectExamples) {
  auto r = run({"expect", "--m", "4", "--bra", "(2,4)(5,1)(2,4)", "--ket", "(5,2)(2,3)(2,1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q^4 + q^5\n");
  r = run({"expect", "--m", "2", "--bra", "", "--ket", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  r = run({"expect", "--m", "2", "--bra", "(1,1)", "--ket", "(2,1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  r = run({"expect", "--m", "4", "--bra", "(2,4)(5,1)(2,4)", "--ket", "(5,2)(2,3)(2,1)", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"], "q^4 + q^5");
}

TEST(CliTest, ExpectErrors) {
  auto r = run({"expect", "--m", "2", "--bra", "(1,1", "--ket", "(1,1)"});
  EXPECT_EQ(r.code, usage);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  r = run({"expect", "--m", "2", "--bra", "(1,3)", "--ket", "(1,1)"});
  EXPECT_EQ(r.code, usage);
  EXPECT_EQ(run({"expect", "--m", "0", "--bra", "", "--ket", ""}).code, usage);
  EXPECT_EQ(run({"expect", "--bra", "", "--ket", ""}).code, usage);
  EXPECT_EQ(run({"frobnicate"}).code, usage);
  EXPECT_EQ(run({}).code, usage);
  EXPECT_EQ(run({"--help"}).code, ok);
}

TEST(CliTest, GramCsvMatchesReferenceBlock) {
  const auto r = run({"gram", "--m", "3", "--multiset", "1,2"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 19u);
  EXPECT_EQ(csv_fields(rows[0]).size(), 18u);
  EXPECT_EQ(csv_fields(rows[0])[0], "(1,3)(2,3)");
  for (std::size_t i = 0; i < 18; ++i) {
    std::istringstream golden(testing::kGoldenM3N2[i]);
    const auto cells = csv_fields(rows[i + 1]);
    ASSERT_EQ(cells.size(), 18u);
    for (const auto& cell : cells) {
      std::string expected;
      golden >> expected;
      ASSERT_EQ(cell, expected);
    }
  }
}

TEST(CliTest, GramSmallBlocks) {
  auto r = run({"gram", "--m", "1", "--multiset", "1,2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"\"(1,1)(2,1)\",\"(2,1)(1,1)\"", "1,q", "q,1"}));
  r = run({"gram", "--m", "2", "--multiset", "2,2", "--path", "combinatorial"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  // A repeated letter has a nontrivial stabilizer, so the diagonal is not 1.
  const std::vector<std::string> diagonal{"1 + q", "1 + q^3", "1 + q^3", "1 + q"};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(csv_fields(rows[i + 1])[i], diagonal[i]);
  EXPECT_EQ(run({"gram", "--m", "2", "--multiset", "2,2", "--path", "magic"}).code, usage);
  EXPECT_EQ(run({"gram", "--m", "2", "--multiset", "2,,2"}).code, usage);
}

TEST(CliTest, GramJsonAndCsvAgree) {
  const auto csv = lines(run({"gram", "--m", "2", "--multiset", "1,2", "--format", "csv"}).out);
  const auto j = nlohmann::json::parse(run({"gram", "--m", "2", "--multiset", "1,2", "--format", "json"}).out);
  ASSERT_EQ(csv.size(), j["entries"].size() + 1);
  EXPECT_EQ(csv_fields(csv[0]), j["basis"].get<std::vector<std::string>>());
  for (std::size_t r = 0; r < j["entries"].size(); ++r) {
    const auto cells = csv_fields(csv[r + 1]);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      ASSERT_EQ(cells[c], j["entries"][r][c].get<std::string>());
      // Every emitted entry reparses to the built value.
      ASSERT_EQ(to_string(parse_rational_function(cells[c])), cells[c]);
    }
  }
}

TEST(CliTest, DetVerify) {
  const auto r = run({"det", "--m", "3", "--n", "2", "--verify"});
  EXPECT_EQ(r.code, ok);
  const auto out = lines(r.out);
  EXPECT_EQ(out.back(), "MATCH");
  EXPECT_NE(r.out.find("factored: (1 - 3*q^2 + 2*q^3)^12 * (1 - q^2)^9"), std::string::npos);
  EXPECT_NE(r.out.find("expanded: "), std::string::npos);
  const auto j = nlohmann::json::parse(run({"det", "--m", "2", "--n", "1", "--verify", "--format", "json"}).out);
  EXPECT_EQ(j["verdict"], "MATCH");
  EXPECT_EQ(j["expanded"], "1 - q^2");
  EXPECT_EQ(j["uniform_exponent_form_matches_oracle"], false);
}

TEST(CliTest, InverseVerify) {
  const auto r = run({"inverse", "--m", "2", "--n", "2", "--verify"});
  EXPECT_EQ(r.code, ok);
  EXPECT_EQ(lines(r.out).back(), "MATCH (two-sided)");
}

TEST(CliTest, Posdef) {
  auto r = run({"posdef", "--m", "3", "--n", "2", "--q", "1/2"});
  EXPECT_EQ(r.code, ok);
  EXPECT_NE(r.out.find("positive_definite"), std::string::npos);
  r = run({"posdef", "--m", "1", "--n", "2", "--from", "-1", "--to", "1", "--steps", "3", "--format", "csv"});
  EXPECT_EQ(r.code, ok);
  EXPECT_EQ(r.out, "q0,verdict,smallest_minor\n-1,singular,0\n0,positive_definite,1\n1,singular,0\n");
  EXPECT_EQ(run({"posdef", "--m", "3", "--n", "2", "--q", "0.5"}).code, usage);
  EXPECT_EQ(run({"posdef", "--m", "3", "--n", "2"}).code, usage);
  r = run({"posdef", "--m", "1", "--n", "2", "--q", "1/2", "--eigenvalues"});
  EXPECT_EQ(r.code, ok);
  EXPECT_NE(r.out.find("1/2,0,0.5"), std::string::npos);
  EXPECT_NE(r.out.find("1/2,1,1.5"), std::string::npos);
}

TEST(CliTest, SizeGuard) {
  auto r = run({"det", "--m", "3", "--n", "2", "--max-block", "10"});
  EXPECT_EQ(r.code, usage);
  EXPECT_NE(r.err.find("limit"), std::string::npos);
  EXPECT_EQ(run({"det", "--m", "5", "--n", "5"}).code, usage);
  ::setenv("QUON_MAX_BLOCK", "4", 1);
  EXPECT_EQ(run({"gram", "--m", "3", "--multiset", "1,2"}).code, usage);
  EXPECT_EQ(run({"gram", "--m", "3", "--multiset", "1,2", "--max-block", "100"}).code, ok);
  ::unsetenv("QUON_MAX_BLOCK");
}

TEST(CliTest, Enumerate) {
  auto r = run({"enumerate", "--m", "2", "--n", "2"});
  ASSERT_EQ(r.code, ok);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 8u);
  EXPECT_EQ(out[0], "0  (1,2)(2,2)  cinv=0");
  r = run({"enumerate", "--m", "1", "--multiset", "2,2,5", "--format", "csv"});
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"index,element", "0,\"(2,1)(2,1)(5,1)\"",
                                                    "1,\"(2,1)(5,1)(2,1)\"", "2,\"(5,1)(2,1)(2,1)\""}));
  const auto j = nlohmann::json::parse(run({"enumerate", "--m", "3", "--n", "2", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 18u);
  EXPECT_EQ(j[17]["cinv"], 3);
}

TEST(CliTest, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "quon_cli_test_output.txt";
  const auto r = run({"expect", "--m", "1", "--bra", "(1,1)(1,1)", "--ket", "(1,1)(1,1)", "--output", path.string()});
  EXPECT_EQ(r.code, ok);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "1 + q\n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace quon::cli
