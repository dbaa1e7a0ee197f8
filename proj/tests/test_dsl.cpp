#include <doctest.h>

#include "cartan/dsl.hpp"
#include "cartan/report.hpp"
#include "oracles.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace cartan;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError({}, "");
}

}  // namespace

TEST_SUITE("presentation-dsl") {

TEST_CASE("projective plane") {
  const auto doc = parse_document("gen x:2; gen y:5; d y = x^3;");
  REQUIRE(doc.algebra->size() == 2);
  CHECK(doc.algebra->generator(1).degree == 5);
  CHECK(Element(doc.algebra, doc.algebra->differential(1)) == parse_polynomial(doc.algebra, "x^3"));
  CHECK(doc.algebra->differential(0).empty());
}

TEST_CASE("omitted differentials are zero") {
  const auto doc = parse_document("gen x:3;");
  CHECK(doc.algebra->has_zero_differential());
}

TEST_CASE("degree mismatch carries a span") {
  const ParseError e = parse_error("gen x:2; d x = x;");
  CHECK(e.where().line == 1);
  CHECK(e.where().column == 12);  // the generator whose differential is wrong
  CHECK(std::string(e.what()).find("degree") != std::string::npos);
}

TEST_CASE("name, syntax and d^2 errors") {
  CHECK(parse_error("gen x:2;\ngen x:4;").where().line == 2);
  CHECK(parse_error("gen x:2; d y = x;").detail().find("y") != std::string::npos);
  CHECK(parse_error("gen x:2 gen y:3;").expected().count("';'") == 1);
  CHECK(parse_error("gen x:0;").where().line == 1);
  CHECK(parse_error("gen x:2; gen y:3; gen z:4; d y = x^2; d z = x y;").detail().find("d^2") != std::string::npos);
  CHECK(parse_error("gen x:2; elem a = 1/0;").where().line == 1);
  CHECK(parse_error("gen x:2; der t (x -> x) deg 1;").detail().find("degree") != std::string::npos);
}

TEST_CASE("polynomial syntax") {
  const auto p = parse_document("gen x:2; gen y:3;").algebra;
  CHECK(parse_polynomial(p, "x x") == parse_polynomial(p, "x^2"));
  CHECK(parse_polynomial(p, "(x + 1/2 x)*y") == parse_polynomial(p, "3/2 x y"));
  CHECK(parse_polynomial(p, "y*y").is_zero());
  CHECK(parse_polynomial(p, "-x^0") == Element::scalar(p, -1));
}

TEST_CASE("every fixture round-trips") {
  for (const char* name : {"cp2", "m11", "m14", "sphere3", "oddproj-1", "oddproj-2", "oddproj-3", "elliptic228"}) {
    const auto doc = oracle::load(name);
    const auto again = parse_document(serialize_document(doc));
    CHECK_MESSAGE(structurally_equal(doc, again), name);
    CHECK(serialize_document(again) == serialize_document(doc));
  }
}

TEST_CASE("fuzzed inputs raise ParseError or parse") {
  std::mt19937_64 rng(2024);
  const std::string alphabet = "xyz_bar:;=+-*^/()0123456789 \n#gendelmr->,";
  std::vector<std::string> seeds;
  for (const char* name : {"cp2", "m11", "m14"}) seeds.push_back(slurp(oracle::fixture(name)));
  int parsed = 0, rejected = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    std::string text = seeds[static_cast<std::size_t>(trial) % seeds.size()];
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const std::size_t at = rng() % text.size();
      switch (rng() % 3) {
        case 0: text.erase(at, 1 + rng() % 3); break;
        case 1: text.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
        default: text[at] = alphabet[rng() % alphabet.size()];
      }
    }
    if (trial % 50 == 0) text = std::string(300, '(') + "x";
    try {
      parse_document(text);
      ++parsed;
    } catch (const ParseError& err) {
      ++rejected;
      CHECK(err.where().line >= 1);
      CHECK(err.where().column >= 1);
    } catch (const std::exception& err) {
      FAIL("unexpected exception " << err.what() << " for input\n" << text);
    }
  }
  CHECK(rejected > 0);
  MESSAGE(parsed << " parsed, " << rejected << " rejected");
}

}  // TEST_SUITE

TEST_SUITE("report") {

TEST_CASE("table rows") {
  CHECK(table_row(CohomologyRecord{"H", 2, 1, {"x"}}) == "H^2: dim 1, basis [x]");
  CHECK(table_row(CohomologyRecord{"H", 7, 0, {}}) == "H^7: dim 0");
}

TEST_CASE("rationals are exact strings") {
  CHECK(rational_string(Rational(1, 2)) == "1/2");
  CHECK(rational_string(Rational(-3)) == "-3");
  const auto p = parse_document("gen x:2;").algebra;
  const auto j = terms_json(*p, parse_polynomial(p, "1/2 x^2").terms());
  CHECK(j.dump().find("\"1/2\"") != std::string::npos);
}

TEST_CASE("json schema and determinism") {
  Report r;
  r.request = {{"command", "cohomology"}};
  r.presentation_hash = "0123456789abcdef";
  r.seed = 5;
  r.section("H").cohomology.push_back({"H", 0, 1, {"1"}});
  r.section("H").checks.push_back({"a check", false, "witness"});
  const auto j = nlohmann::json::parse(serialize_result(r, Format::Json));
  CHECK(j["schema"] == 1);
  CHECK(j["ok"] == false);
  CHECK(j["seed"] == 5);
  CHECK(j["request"]["command"] == "cohomology");
  CHECK(j["results"][0]["checks"][0]["detail"] == "witness");
  CHECK(serialize_result(r, Format::Json) == serialize_result(r, Format::Json));
  const std::string table = serialize_result(r, Format::Table);
  CHECK(table.find("FAIL a check") != std::string::npos);
  CHECK(table.find("H^0: dim 1, basis [1]") != std::string::npos);
}

TEST_CASE("presentation hash") {
  const auto a = parse_document("gen x:2; gen y:5; d y = x^3;").algebra;
  const auto b = parse_document("# same\ngen x : 2 ;\ngen y:5;\nd y = x x x;").algebra;
  const auto c = parse_document("gen x:2; gen y:5; d y = 2 x^3;").algebra;
  CHECK(presentation_hash(*a).size() == 16);
  CHECK(presentation_hash(*a) == presentation_hash(*b));
  CHECK(presentation_hash(*a) != presentation_hash(*c));
}

}  // TEST_SUITE
