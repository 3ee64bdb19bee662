#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"

namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = psop::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PSOP_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Structural equality with a relative tolerance on numbers.
bool same_json(const Json& a, const Json& b, std::string path = "$") {
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>(), y = b.get<double>();
    if (std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y))) return true;
    MESSAGE(path << ": " << x << " vs " << y);
    return false;
  }
  if (a.type() != b.type()) {
    MESSAGE(path << ": type differs");
    return false;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) {
      MESSAGE(path << ": key count differs");
      return false;
    }
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (!a.contains(it.key()) || !same_json(a.at(it.key()), it.value(), path + "." + it.key()))
        return false;
    }
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      MESSAGE(path << ": length differs");
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!same_json(a[i], b[i], path + "[" + std::to_string(i) + "]")) return false;
    }
    return true;
  }
  if (a == b) return true;
  MESSAGE(path << ": " << a.dump() << " vs " << b.dump());
  return false;
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
  int code;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"eval_two_slash_three.json", {"eval", "2 / 3"}, 0},
      {"eval_identity.json", {"eval", "1 / 1 \\ 1"}, 0},
      {"roots_golden_ratio.json", {"roots", "--coeffs", "1,1"}, 0},
      {"roots_tribonacci.json", {"roots", "--coeffs", "1,1,1"}, 0},
      {"roots_tetranacci_numeric.json", {"roots", "--coeffs", "1,1,1,1", "--method", "numeric"}, 0},
      {"sigma_tribonacci.json", {"sigma", "--coeffs", "1,1,1"}, 0},
      {"solve_fibonacci.json", {"solve", "--coeffs", "1,1", "--seeds", "0,1"}, 0},
      {"term_fibonacci_10.json", {"term", "--coeffs", "1,1", "--seeds", "0,1", "-k", "10"}, 0},
      {"seq_trilucas.csv",
       {"seq", "--coeffs", "1,1,1", "--seeds", "3,1,3", "--count", "7", "--format", "csv"}, 0},
      {"verify_fibonacci.json",
       {"verify", "--coeffs", "1,1", "--seeds", "0,1", "--kmax", "70", "--tol", "1e-8"}, 0},
      {"verify_tribonacci.json",
       {"verify", "--coeffs", "1,1,1", "--seeds", "0,1,1", "--kmax", "50", "--tol", "1e-8"}, 0},
      {"table_R3.json", {"table", "--group", "R3"}, 0},
      {"table_C3.json", {"table", "--group", "C3"}, 0},
      {"table_R4.json", {"table", "--group", "R4"}, 0},
      {"table_union3.json", {"table", "--group", "union3"}, 0},
      {"table_union8.json", {"table", "--group", "union8"}, 0},
  };
  return cases;
}

}  // namespace

TEST_CASE("golden outputs") {
  for (const auto& c : golden_cases()) {
    CAPTURE(c.file);
    const Result r = run(c.args);
    CHECK(r.code == c.code);
    CHECK(r.err.empty());
    const std::string expected = golden(c.file);
    if (std::string(c.file).ends_with(".json")) {
      const Json got = Json::parse(r.out);  // throws if stdout is not pure JSON
      CHECK(same_json(got, Json::parse(expected)));
    } else {
      CHECK(r.out == expected);
    }
  }
}

TEST_CASE("documented values") {
  const Json eval = Json::parse(run({"eval", "2 / 3"}).out);
  CHECK(std::abs(eval["mod"].get<double>() - 2.6457513110645906) <= 1e-15);
  const Json ident = Json::parse(run({"eval", "1 / 1 \\ 1"}).out);
  CHECK(std::abs(ident["re"].get<double>()) < 1e-15);
  CHECK(std::abs(ident["im"].get<double>()) < 1e-15);

  const Json gold = Json::parse(run({"roots", "--coeffs", "1,1"}).out);
  CHECK(std::abs(gold["roots"][0]["re"].get<double>() - 1.6180339887498949) < 1e-15);
  CHECK(std::abs(gold["roots"][1]["re"].get<double>() + 0.6180339887498949) < 1e-15);

  const Json trib = Json::parse(run({"roots", "--coeffs", "1,1,1"}).out);
  CHECK(trib["resolvents"]["A"] == 38.0);
  CHECK(trib["resolvents"]["B"] == 4.0);

  const Json tet = Json::parse(run({"roots", "--coeffs", "1,1,1,1", "--method", "numeric"}).out);
  CHECK(tet["roots"].size() == 4);
  CHECK(std::abs(tet["roots"][0]["re"].get<double>() - 1.92756198) < 1e-8);

  const Json term = Json::parse(run({"term", "--coeffs", "1,1", "--seeds", "0,1", "-k", "10"}).out);
  CHECK(std::abs(term["closed"].get<double>() - 55.0) < 1e-12);
  CHECK(term["exact"] == 55);

  const auto seq = run({"seq", "--coeffs", "1,1,1", "--seeds", "3,1,3", "--count", "7", "--format", "csv"});
  CHECK(seq.out.ends_with("\n6,39\n"));

  const Json r3 = Json::parse(run({"table", "--group", "R3"}).out);
  CHECK(r3["axioms"]["group"] == true);
  CHECK(r3["reference_discrepancies"].empty());
  CHECK(Json::parse(run({"table", "--group", "C3"}).out)["axioms"]["closure"] == false);
  const Json u8 = Json::parse(run({"table", "--group", "union8"}).out);
  CHECK(u8["order"] == 8);
  CHECK(u8["axioms"]["group"] == true);
  CHECK(u8["reference_discrepancies"].size() == 5);
}

TEST_CASE("exit codes") {
  const auto lex = run({"eval", "2 ? 3"});
  CHECK(lex.code == 1);
  CHECK(lex.out.empty());
  CHECK(lex.err.find("at 2..3") != std::string::npos);
  CHECK(run({"eval", "2 /"}).code == 1);
  CHECK(run({"solve", "--coeffs", "0,1", "--seeds", "1,1"}).code == 1);
  const auto degenerate = run({"verify", "--coeffs", "-1,2", "--seeds", "0,1"});
  CHECK(degenerate.code == 1);
  CHECK(degenerate.err.find("DegenerateRoots") != std::string::npos);
  CHECK(run({"verify", "--coeffs", "1,1,1", "--seeds", "0,1,1", "--tol", "0"}).code == 1);

  CHECK(run({"table", "--group", "R5"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"term", "--coeffs", "1,1", "--seeds", "0,1"}).code == 2);
  CHECK(run({"term", "--coeffs", "1,1", "--seeds", "0,1", "-k", "-3"}).code == 2);
  CHECK(run({"seq", "--coeffs", "1,1", "--seeds", "0,1,2", "--count", "3"}).code == 2);
  CHECK(run({"roots", "--coeffs", "1,x"}).code == 2);
  CHECK(run({"roots", "--coeffs", "1,1", "--format", "xml"}).code == 2);
  CHECK(run({"roots", "--coeffs", "1,1", "--method", "weights"}).code == 2);
  CHECK(run({"sigma", "--coeffs", "1,1,1,1"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every JSON payload parses and CSV rows have fixed width") {
  const std::vector<std::vector<std::string>> commands{
      {"eval", "I^2 _ rot(1,5)"},
      {"roots", "--coeffs", "2,-3"},
      {"roots", "--coeffs", "-1,-1,0.5,2,1"},
      {"sigma", "--coeffs", "1,-1"},
      {"solve", "--coeffs", "1,1,1,1", "--seeds", "0,0,0,1"},
      {"solve", "--coeffs", "1,1,1", "--seeds", "0,1,1", "--method", "numeric"},
      {"term", "--coeffs", "1,1,1,1", "--seeds", "0,0,0,1", "-k", "40"},
      {"term", "--coeffs", "0.5,0.25", "--seeds", "1,1", "-k", "5"},
      {"seq", "--coeffs", "1,1", "--seeds", "0,1", "--count", "100"},
      {"verify", "--coeffs", "1,1,1,1", "--seeds", "0,0,0,1", "--kmax", "40"},
      {"table", "--group", "C4"},
  };
  for (auto args : commands) {
    CAPTURE(args[0]);
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(Json::accept(r.out));

    args.push_back("--format");
    args.push_back("csv");
    const auto csv = run(args);
    CHECK(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    std::optional<std::size_t> width;
    while (std::getline(lines, line)) {
      const auto commas = static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
      if (!width) width = commas;
      CHECK(commas == *width);
    }
    CHECK(width.has_value());
  }
}

TEST_CASE("big integers are printed as strings") {
  const Json seq = Json::parse(run({"seq", "--coeffs", "1,1", "--seeds", "0,1", "--count", "301"}).out);
  CHECK(seq["terms"][70] == 190392490709135LL);
  CHECK(seq["terms"][300] == "222232244629420445529739893461909967206666939096499764990979600");
}
