#include <random>

#include "helpers.hpp"

using namespace qaff;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int terms, bool allow_negative) {
  std::uniform_int_distribution<int> node(1, 2), shift(-2, 2), expo(allow_negative ? -2 : 0, 2), coeff(-3, 3);
  LaurentPoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> f;
    for (int v = 0; v < 3; ++v) f.emplace_back(ykey(node(rng), shift(rng)), expo(rng));
    int c = coeff(rng);
    if (c == 0) c = 1;
    p.add_term(Monomial::from_factors(f), c);
  }
  return p;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("text round trip and canonical order") {
    const LaurentPoly p = P("3*Y[1,-2]^2*Y[2,1]^-1 - z[1,0] + 1");
    CHECK(p.to_string() == "3*Y[1,-2]^2*Y[2,1]^-1 - z[1,0] + 1");
    CHECK(P(p.to_string()) == p);
    CHECK(P("1 + Y[1,0]") == P("Y[1,0] + 1"));
    CHECK(P("Y[1,0]*Y[1,0]^-1") == LaurentPoly(1));
    CHECK(P("0").is_zero());
    CHECK(P("v[1,2]*v[2,3] + v[1,2] + 1").to_string() == "v[1,2]*v[2,3] + v[1,2] + 1");
  }

  TEST_CASE("json round trip") {
    const LaurentPoly p = P("3*Y[1,-2]^2*Y[2,1]^-1 - z[1,0] + 1");
    CHECK(poly_from_json(p.to_json()) == p);
    CHECK(p.to_json()[0]["coeff"] == "3");
    CHECK(p.to_json()[0]["monomial"]["Y[1,-2]"] == 2);
    CHECK(poly_from_json(json::parse(R"([{"coeff": 5, "monomial": {}}])")) == LaurentPoly(5));
    CHECK_ERROR_CODE(poly_from_json(json::parse(R"([{"coeff": "x", "monomial": {}}])")), ErrorCode::ParseError);
  }

  TEST_CASE("parse errors") {
    CHECK_ERROR_CODE(parse_poly("Y[1,"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_poly("Q[1,2]"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_poly("Y[1,2] +"), ErrorCode::ParseError);
  }

  TEST_CASE("big coefficients stay exact") {
    LaurentPoly p = P("Y[1,0] + 1");
    const LaurentPoly q = p.pow(80);
    CHECK(q.coefficient(Monomial(ykey(1, 0), 40)) ==
          Integer("107507208733336176461620"));
    CHECK(exact_div(q, p.pow(79)) == p);
  }

  TEST_CASE("exact division") {
    CHECK(exact_div(P("Y[1,0]^2 - 1"), P("Y[1,0] - 1")) == P("Y[1,0] + 1"));
    CHECK(exact_div(P("Y[1,0]^-1 + Y[1,2]^-1"), P("Y[1,0]^-1*Y[1,2]^-1")) == P("Y[1,0] + Y[1,2]"));
    CHECK_ERROR_CODE(exact_div(P("Y[1,0] + 2"), P("Y[1,0] + 1")), ErrorCode::ExactDivisionFailed);
    CHECK_ERROR_CODE(exact_div(P("Y[1,0]"), P("0")), ErrorCode::DivisionByZero);
    CHECK_ERROR_CODE(exact_div(P("2*Y[1,0]"), P("3")), ErrorCode::ExactDivisionFailed);
  }

  TEST_CASE("exact division round trip on random pairs") {
    std::mt19937 rng(7);
    for (int n = 0; n < 1000; ++n) {
      const LaurentPoly a = random_poly(rng, 1 + n % 4, true);
      const LaurentPoly b = random_poly(rng, 1 + n % 3, true);
      if (b.is_zero()) continue;
      REQUIRE(exact_div(a * b, b) == a);
    }
  }

  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(11);
    for (int n = 0; n < 100; ++n) {
      const LaurentPoly a = random_poly(rng, 3, true), b = random_poly(rng, 2, true), c = random_poly(rng, 2, false);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("substitution") {
    Substitution s{{zkey(1, 0), P("Y[1,0] + 1")}, {zkey(2, 0), P("Y[2,1]")}};
    CHECK(substitute(P("z[1,0]^2*z[2,0]^-1"), s) == P("Y[1,0]^2*Y[2,1]^-1 + 2*Y[1,0]*Y[2,1]^-1 + Y[2,1]^-1"));
    CHECK(substitute(P("z[3,0]"), s) == P("z[3,0]"));
    CHECK_ERROR_CODE(substitute(P("z[1,0]^-1"), s), ErrorCode::NegativePowerOfNonMonomial);
  }

  TEST_CASE("spectral shift and dimension") {
    CHECK(spectral_shift(P("Y[1,0]*Y[2,3]^-1 + z[1,1]"), 4) == P("Y[1,4]*Y[2,7]^-1 + z[1,5]"));
    CHECK(dimension(P("Y[1,0] + 2*Y[1,2]^-1")) == 3);
  }

  TEST_CASE("monomial helpers") {
    const Monomial m = parse_monomial("Y[1,0]^2*Y[2,1]^-1");
    CHECK(m.degree() == 1);
    CHECK(m.exponent(ykey(1, 0)) == 2);
    CHECK(!m.is_polynomial());
    CHECK((m * m.inverse()).is_one());
    CHECK(m.pow(3).exponent(ykey(2, 1)) == -3);
    CHECK(parse_monomial("Y[1,0]^2*Y[2,1]").divisible_by(parse_monomial("Y[1,0]")));
    CHECK(!parse_monomial("Y[1,0]").divisible_by(parse_monomial("Y[2,0]")));
    CHECK(P("Y[1,0]*Y[2,1]^-1 + Y[1,0]^2").min_exponents() == parse_monomial("Y[1,0]*Y[2,1]^-1"));
  }
}
