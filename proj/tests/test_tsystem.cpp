#include <thread>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qaff/quivrep.hpp"
#include "qaff/tsystem.hpp"

using namespace qaff;

TEST_SUITE("tsystem") {
  TEST_CASE("S-term factors") {
    const CartanData b2 = cartan_from_label("B2");
    CHECK(s_term_factors(b2, 1, 3, 5) == std::vector<KRIndex>{{2, 6, 4}});
    CHECK(s_term_factors(b2, 2, 4, 1) == std::vector<KRIndex>{{1, 2, 1}, {1, 2, 3}});
    CHECK(s_term_factors(b2, 2, 5, 1) == std::vector<KRIndex>{{1, 3, 1}, {1, 2, 3}});
    CHECK(s_term_factors(b2, 2, 1, 0) == std::vector<KRIndex>{{1, 1, 0}});
    CHECK(s_term_factors(cartan_from_label("A1"), 1, 3, 0).empty());
    CHECK(s_term_factors(cartan_from_label("A3"), 2, 2, 0) == std::vector<KRIndex>{{1, 2, 0}, {3, 2, 0}});
    const CartanData g2 = cartan_from_label("G2");
    CHECK(s_term_factors(g2, 1, 2, 0) == std::vector<KRIndex>{{2, 6, -2}});
    CHECK(s_term_factors(g2, 2, 3, 0) == std::vector<KRIndex>{{1, 1, 0}, {1, 1, 2}, {1, 1, 4}});
    CHECK(s_term_factors(g2, 2, 4, 0) == std::vector<KRIndex>{{1, 2, 0}, {1, 1, 2}, {1, 1, 4}});
    CHECK(s_term_factors(g2, 2, 5, 0) == std::vector<KRIndex>{{1, 2, 0}, {1, 2, 2}, {1, 1, 4}});
    const CartanData b3 = cartan_from_label("B3");
    CHECK(s_term_factors(b3, 2, 1, 0) == std::vector<KRIndex>{{1, 1, 0}, {3, 2, -1}});
    CHECK(s_term_factors(b3, 3, 3, 0) == std::vector<KRIndex>{{2, 2, 0}, {2, 1, 2}});
  }

  TEST_CASE("s_term multiplies lookups") {
    const CartanData b2 = cartan_from_label("B2");
    const LaurentPoly s = s_term(b2, 2, 2, 0, [](int j, int k, int r) {
      return LaurentPoly::var(ykey(j, 100 * k + r));
    });
    CHECK(s == P("Y[1,100]*Y[1,102]"));
    CHECK(s_term(cartan_from_label("A1"), 1, 2, 0, [](int, int, int) { return LaurentPoly(7); }) == LaurentPoly(1));
  }

  TEST_CASE("A1 Kirillov-Reshetikhin modules") {
    const CartanData a1 = cartan_from_label("A1");
    TSystemSolver s(a1, FundamentalProvider::builtin(a1));
    CHECK(s.kr_qchar(1, 2, 0) == P("Y[1,0]*Y[1,2] + Y[1,0]*Y[1,4]^-1 + Y[1,2]^-1*Y[1,4]^-1"));
    CHECK(s.kr_qchar(1, 0, 7) == LaurentPoly(1));
    for (int k = 0; k <= 6; ++k) {
      CHECK(dimension(s.kr_qchar(1, k, 3)) == k + 1);
      if (k > 0) CHECK(s.kr_qchar(1, k, -5) == oracle::sl2_string_qchar({-5, k}));
    }
    for (int k = 1; k <= 5; ++k)
      for (int r = -10; r <= 10; ++r) CHECK(s.verify(1, k, r));
  }

  TEST_CASE("A2 against the tableau oracle") {
    const CartanData a2 = cartan_from_label("A2");
    const FundamentalProvider fp = FundamentalProvider::builtin(a2);
    CHECK(fp(1, 0) == oracle::an_fundamental(2, 1, 0));
    CHECK(fp(2, 3) == oracle::an_fundamental(2, 2, 3));
    TSystemSolver s(a2, fp);
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 4; ++k) {
        CHECK(dimension(s.kr_qchar(i, k, 0)) == (k + 1) * (k + 2) / 2);
        for (int r = -6; r <= 6; ++r) CHECK(s.verify(i, k, r));
      }
  }

  TEST_CASE("A3 fundamentals from a file") {
    const CartanData a3 = cartan_from_label("A3");
    json j;
    for (int i = 1; i <= 3; ++i) j[std::to_string(i)] = oracle::an_fundamental(3, i, 0).to_json();
    TSystemSolver s(a3, FundamentalProvider::from_json(a3, j));
    CHECK(dimension(s.kr_qchar(2, 1, 0)) == 6);
    CHECK(dimension(s.kr_qchar(2, 2, 0)) == 20);
    for (int i = 1; i <= 3; ++i)
      for (int k = 1; k <= 3; ++k)
        for (int r = -3; r <= 3; ++r) CHECK(s.verify(i, k, r));
  }

  TEST_CASE("B2 values") {
    const CartanData b2 = cartan_from_label("B2");
    TSystemSolver s(b2, FundamentalProvider::builtin(b2));
    const LaurentPoly t22 = s.kr_qchar(2, 2, -2);
    CHECK(t22.size() == 11);
    CHECK(dimension(t22) == 11);
    CHECK(t22 == s.kr_qchar(2, 1, 0) * s.kr_qchar(2, 1, -2) - s.kr_qchar(1, 1, -1));
    CHECK(dimension(s.kr_qchar(1, 2, 0)) == 14);
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 4; ++k)
        for (int r = -8; r <= 8; ++r) CHECK(s.verify(i, k, r));
  }

  TEST_CASE("structural invariants") {
    for (const char* tag : {"A1", "A2", "B2"}) {
      const CartanData cd = cartan_from_label(tag);
      TSystemSolver s(cd, FundamentalProvider::builtin(cd));
      for (int i = 1; i <= cd.rank(); ++i)
        for (int k = 1; k <= 4; ++k) {
          const LaurentPoly t = s.kr_qchar(i, k, 0);
          CHECK(t.coefficient(kr_highest_monomial(cd, i, k, 0)) == 1);
          CHECK(t.nonnegative_coefficients());
          for (int sh = -5; sh <= 5; ++sh) CHECK(s.kr_qchar(i, k, sh) == spectral_shift(t, sh));
          const int d = cd.d(i);
          const Integer lhs = dimension(t) * dimension(t);
          const Integer rhs = dimension(s.kr_qchar(i, k - 1, 0)) * dimension(s.kr_qchar(i, k + 1, 0)) +
                              dimension(s.s_term(i, k, d));
          CHECK(lhs == rhs);
        }
    }
  }

  TEST_CASE("geometric fundamentals agree at every vertex") {
    for (const char* tag : {"A1", "A2", "B2"}) {
      const CartanData cd = cartan_from_label(tag);
      TSystemSolver s(cd, FundamentalProvider::builtin(cd));
      for (int i = 1; i <= cd.rank(); ++i)
        for (int r = -10; r <= 10; ++r) CHECK(geometric_qchar(cd, i, r, builtin_K(cd, i, r)) == s.kr_qchar(i, 1, r - cd.d(i)));
    }
  }

  TEST_CASE("fundamental provider errors") {
    const CartanData a2 = cartan_from_label("A2");
    CHECK_ERROR_CODE(FundamentalProvider::builtin(cartan_from_label("G2")), ErrorCode::UnsupportedType);
    json partial;
    partial["1"] = oracle::an_fundamental(2, 1, 0).to_json();
    TSystemSolver s(a2, FundamentalProvider::from_json(a2, partial));
    CHECK_ERROR_CODE(s.kr_qchar(2, 1, 0), ErrorCode::MissingFundamental);
    json shifted;
    shifted["1"] = oracle::an_fundamental(2, 1, 2).to_json();
    CHECK_ERROR_CODE(FundamentalProvider::from_json(a2, shifted), ErrorCode::InvalidFundamental);
    json wrong;
    wrong["1"] = oracle::an_fundamental(2, 1, 0).to_json();
    wrong["2"] = P("Y[2,0] + Y[1,5]^-1").to_json();
    TSystemSolver w(a2, FundamentalProvider::from_json(a2, wrong));
    bool failed = false;
    try {
      for (int k = 2; k <= 4; ++k) w.kr_qchar(2, k, 0);
    } catch (const Error& e) {
      failed = e.code() == ErrorCode::ExactDivisionFailed || e.code() == ErrorCode::InconsistentTSystem;
    }
    CHECK(failed);
    CHECK_ERROR_CODE(FundamentalProvider::from_json(a2, json::parse(R"({"x": []})")), ErrorCode::ParseError);
    CHECK_ERROR_CODE(FundamentalProvider::from_file(a2, "/nonexistent/fund.json"), ErrorCode::IoError);
  }

  TEST_CASE("concurrent lookups") {
    const CartanData b2 = cartan_from_label("B2");
    TSystemSolver s(b2, FundamentalProvider::builtin(b2));
    std::vector<std::thread> pool;
    std::vector<LaurentPoly> out(8);
    for (int t = 0; t < 8; ++t) pool.emplace_back([&, t] { out[t] = s.kr_qchar(1 + t % 2, 3, 2 * t); });
    for (auto& th : pool) th.join();
    TSystemSolver fresh(b2, FundamentalProvider::builtin(b2));
    for (int t = 0; t < 8; ++t) CHECK(out[t] == fresh.kr_qchar(1 + t % 2, 3, 2 * t));
  }
}
