#include <doctest.h>

#include "oracles.hpp"

using namespace lielab;

namespace {

json table(std::string brackets) {
  return json::parse(R"({"field":{"kind":"Q"},"dim":3,"basis":["a","b","c"],"brackets":)" + brackets + "}");
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("Q").kind == FieldKind::Q);
  CHECK(FieldSpec::parse("F5").p == 5);
  CHECK(FieldSpec::parse("Fp:7").p == 7);
  CHECK(FieldSpec::parse("3").p == 3);
  CHECK_THROWS_AS(FieldSpec::parse("F4"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
}

TEST_CASE("parse errors name the entry") {
  const auto swapped = message_of([] { parse_algebra(table(R"([{"i":1,"j":0,"coeffs":{"2":"1"}}])")); });
  CHECK(swapped.find("brackets[0]") != std::string::npos);
  CHECK(swapped.find("i < j") != std::string::npos);
  CHECK_THROWS_AS(parse_algebra(table(R"([{"i":0,"j":5,"coeffs":{}}])")), ParseError);
  CHECK_THROWS_AS(parse_algebra(table(R"([{"i":0,"j":1,"coeffs":{"7":"1"}}])")), ParseError);
  CHECK_THROWS_AS(parse_algebra(table(R"([{"i":0,"j":1,"coeffs":{"0":"x"}}])")), std::exception);
  CHECK_THROWS_AS(parse_algebra(table(R"([{"i":0,"j":1,"coeffs":{}},{"i":0,"j":1,"coeffs":{}}])")), ParseError);
  CHECK_THROWS_AS(parse_algebra(json::parse(R"({"field":{"kind":"Q"},"dim":2,"basis":["a"],"brackets":[]})")),
                  ParseError);
}

TEST_CASE("Jacobi failures name the triple") {
  const json j = table(R"([{"i":0,"j":1,"coeffs":{"1":"1"}},{"i":1,"j":2,"coeffs":{"0":"1"}}])");
  try {
    parse_algebra(j);
    FAIL("accepted a Jacobi violation");
  } catch (const ValidationError& e) {
    REQUIRE(e.violations.size() == 1);
    CHECK(e.violations[0].i == 0);
    CHECK(e.violations[0].j == 1);
    CHECK(e.violations[0].k == 2);
  }
  CHECK(std::holds_alternative<LieAlgebra<Rational>>(parse_algebra_unchecked(j)));
}

TEST_CASE("round trip through canonical JSON") {
  const Q q;
  const Fp f3(3);
  std::vector<Algebra> algebras = {sl(q, 3), su2q(), heisenberg(q, 2), psl(f3, 3),
                                   quaternion(q, Rational(-1), Rational(-3)).algebra,
                                   reduced_polynomial_algebra(f3, 1)};
  for (const auto& a : algebras) {
    const std::string once = canonical(to_json(a));
    const Algebra back = parse_algebra(json::parse(once));
    CHECK(canonical(to_json(back)) == once);
    CHECK(table_hash(back) == table_hash(a));
  }
  CHECK(table_hash(Algebra(sl(q, 2))) != table_hash(Algebra(su2q())));
}

TEST_CASE("scalars are written as strings") {
  const json j = to_json(Algebra(su2q()));
  CHECK(j["field"]["kind"] == "Q");
  for (const auto& b : j["brackets"])
    for (const auto& [k, v] : b["coeffs"].items()) CHECK(v.is_string());
  const json fp = to_json(Algebra(sl(Fp(5), 2)));
  CHECK(fp["field"]["p"] == 5);
}

TEST_CASE("vectors") {
  const Q q;
  const auto v = parse_vector(q, "1, -1/2,0", 3);
  CHECK(v(1) == Rational(-1, 2));
  CHECK_THROWS(parse_vector(q, "1,2", 3));
  CHECK_THROWS(parse_vector(q, "1,,2", 3));
  CHECK(parse_vector(Fp(5), "7,-1", 2)(1).residue() == 4);
  CHECK(vector_json(v) == json::array({"1", "-1/2", "0"}));
}

TEST_CASE("verdict JSON carries the witness") {
  const auto v = is_regular_algebra(sl(Q{}, 2), Mode::Search);
  const json j = verdict_json(v);
  CHECK(j["status"] == "Refuted");
  CHECK(j["witness"].size() == 1);
  CHECK(j["witness"][0] == json::array({"1", "0", "0"}));
}

TEST_CASE("verify report is deterministic") {
  const auto a = suite_json(run_verify());
  const auto b = suite_json(run_verify());
  CHECK(canonical(a) == canonical(b));
  CHECK(a["checks"].size() > 20);
}
