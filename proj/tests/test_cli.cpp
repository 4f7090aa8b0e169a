#include <cli.hpp>
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "spin7/json_io.hpp"

namespace fs = std::filesystem;
using spin7::Json;
using namespace spin7::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "spin7_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

std::string matrix_json(const spin7::Mat7& e) {
  Json rows = Json::array();
  for (int i = 0; i < 7; ++i) {
    Json r = Json::array();
    for (int j = 0; j < 7; ++j) r.push_back(e(i, j));
    rows.push_back(r);
  }
  return Json{{"E", rows}}.dump();
}

// Numbers as printed in a document, in order.
std::multiset<std::string> numbers_in(const std::string& text) {
  static const std::regex num(R"(-?\d+(\.\d+)?([eE][-+]?\d+)?)");
  std::multiset<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it)
    out.insert(it->str());
  return out;
}

}  // namespace

TEST_CASE("classify-qa") {
  const fs::path nil = write_temp("nil.json", matrix_json(spin7::nilpotent_example()));
  const Result r = invoke({"classify-qa", "--input", nil.string(), "--json"});
  REQUIRE(r.code == kOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc.contains("admits_balanced"));

  // Deterministic byte-for-byte.
  CHECK(invoke({"classify-qa", "--input", nil.string(), "--json"}).out == r.out);

  // Human output carries the same numbers.
  const Result human = invoke({"classify-qa", "--input", nil.string()});
  REQUIRE(human.code == kOk);
  CHECK(numbers_in(human.out) == numbers_in(doc.dump()));

  const fs::path zero = write_temp("zero.json", matrix_json(spin7::Mat7::Zero()));
  const Result z = invoke({"classify-qa", "--input", zero.string(), "--json"});
  CHECK(z.code == kOk);
  CHECK(Json::parse(z.out)["abelian"] == true);
}

TEST_CASE("input errors exit with 2") {
  const fs::path malformed = write_temp("bad.json", "{\"E\": [[1, 2,");
  CHECK(invoke({"classify-qa", "--input", malformed.string()}).code == kInputError);
  CHECK(invoke({"classify-qa", "--input", "/nonexistent/file.json"}).code == kInputError);
  const fs::path short_rows = write_temp("short.json", "{\"E\": [[1, 2], [3, 4]]}");
  CHECK(invoke({"classify-qa", "--input", short_rows.string()}).code == kInputError);
  spin7::Mat7 e = spin7::Mat7::Zero();
  std::string text = matrix_json(e);
  text.replace(text.find("0.0"), 3, "1e999");
  const fs::path inf = write_temp("inf.json", text);
  const Result r = invoke({"classify-qa", "--input", inf.string()});
  CHECK(r.code == kInputError);
  CHECK(!r.err.empty());

  const fs::path four = write_temp("four.json", R"({"degree": 4, "terms": [{"axes": [0,1,2,3], "c": 1}]})");
  CHECK(invoke({"decompose", "--input", four.string()}).code == kInputError);
  const fs::path rep = write_temp("rep.json", R"({"degree": 2, "terms": [{"axes": [1,1], "c": 1}]})");
  CHECK(invoke({"decompose", "--input", rep.string()}).code == kInputError);
  const fs::path nan = write_temp("nan.json", R"({"degree": 2, "terms": [{"axes": [0,1], "c": "nan"}]})");
  CHECK(invoke({"decompose", "--input", nan.string()}).code == kInputError);

  CHECK(invoke({"examples", "--name", "torus"}).code == kInputError);
  CHECK(invoke({"verify", "--tolerance", "0"}).code == kInputError);
  CHECK(invoke({"verify", "--tolerance", "-1e-9"}).code == kInputError);
  CHECK(invoke({}).code == kInputError);
  CHECK(invoke({"frobnicate"}).code == kInputError);
}

TEST_CASE("decompose") {
  const fs::path two = write_temp("two.json", R"({"degree": 2, "terms": [{"axes": [1,0], "c": 2}, {"axes": [2,3], "c": "1/2"}]})");
  const Result r = invoke({"decompose", "--input", two.string(), "--json"});
  REQUIRE(r.code == kOk);
  const Json doc = Json::parse(r.out);
  for (const auto& [k, v] : doc["residuals"].items()) CHECK(v.get<double>() < 1e-14);
  const spin7::KForm<double> b7 = spin7::form_from_json(doc["b7"]);
  const spin7::KForm<double> b21 = spin7::form_from_json(doc["b21"]);
  const spin7::KForm<double> in = spin7::form_from_json(doc["input"]);
  CHECK(spin7::max_abs(b7 + b21 - in) < 1e-15);
  CHECK(in.coeff(spin7::MultiIndex{0, 1}) == -2.0);

  const fs::path three = write_temp("three.json", R"({"degree": 3, "terms": [{"axes": [0,1,2], "c": 1}]})");
  const Result t = invoke({"decompose", "--input", three.string(), "--json"});
  REQUIRE(t.code == kOk);
  for (const auto& [k, v] : Json::parse(t.out)["residuals"].items()) CHECK(v.get<double>() < 1e-14);
}

TEST_CASE("examples") {
  for (const char* name : {"nilmanifold", "mapping-torus"}) {
    const Result r = invoke({"examples", "--name", name, "--json"});
    CHECK(r.code == kOk);
    const Json doc = Json::parse(r.out);
    CHECK(doc["checks_passed"] == true);
    CHECK(invoke({"examples", "--name", name, "--json"}).out == r.out);
  }
  const Json nil = Json::parse(invoke({"examples", "--name", "nilmanifold", "--json"}).out);
  CHECK(nil["structure_equations"] == "(0,02,2*03,0,05,06,07,0)");
}

TEST_CASE("verify") {
  const Result r = invoke({"verify", "--json"});
  CHECK(r.code == kOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["suites"].size() == 11);
  CHECK(doc["passed"] == true);

  // At 1e-15 the floating-point suites cannot meet their thresholds; the exact ones still pass.
  const Result tight = invoke({"verify", "--tolerance", "1e-15", "--json"});
  CHECK(tight.code == kVerificationFailure);
  const Json t = Json::parse(tight.out);
  for (const auto& s : t["suites"])
    if (s["exact"] == true) CHECK(s["passed"] == true);

  const Result human = invoke({"verify", "--seed", "7"});
  CHECK(human.code == kOk);
  CHECK(human.out.rfind("seed 7", 0) == 0);
  std::istringstream lines(human.out);
  std::string line;
  int pass = 0;
  while (std::getline(lines, line))
    if (line.rfind("PASS", 0) == 0) ++pass;
  CHECK(pass == 11);
}
