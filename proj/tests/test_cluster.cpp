#include "helpers.hpp"
#include "oracles.hpp"
#include "qaff/cluster.hpp"
#include "qaff/tsystem.hpp"

using namespace qaff;

namespace {

Seed a3_seed() { return initial_seed(cartan_from_label("A3"), {1, {2, -1}}); }

json a3_fundamentals() {
  json j;
  for (int i = 1; i <= 3; ++i) j[std::to_string(i)] = oracle::an_fundamental(3, i, 0).to_json();
  return j;
}

}  // namespace

TEST_SUITE("cluster") {
  TEST_CASE("initial seeds") {
    const Seed a3 = a3_seed();
    CHECK(a3.vertices.size() == 6);
    CHECK(a3.frozen.size() == 3);
    CHECK(a3.at({2, -3}).laurent == P("z[2,-3]"));
    const Seed b2 = initial_seed(cartan_from_label("B2"), {2, {1, -2}});
    CHECK(b2.vertices.size() == 6);
    CHECK(b2.frozen.size() == 3);
    const Seed a1 = initial_seed(cartan_from_label("A1"), {0, {1, -2}});
    CHECK(a1.vertices == std::vector<Vertex>{{1, -2}});
    CHECK(a1.is_frozen({1, -2}));
    for (std::size_t u = 0; u < a3.vertices.size(); ++u)
      for (std::size_t v = 0; v < a3.vertices.size(); ++v) CHECK(a3.b[u][v] == -a3.b[v][u]);
  }

  TEST_CASE("A3 exchange relation") {
    Exchange ex;
    const Seed s = mutate(a3_seed(), {2, -1}, &ex);
    CHECK(s.at({2, -1}).laurent == P("z[2,-3]*z[2,-1]^-1 + z[1,-2]*z[3,-2]*z[2,-1]^-1"));
    CHECK(s.at({2, -1}).numerator() == P("z[2,-3] + z[1,-2]*z[3,-2]"));
    CHECK(s.at({2, -1}).denominator() == parse_monomial("z[2,-1]"));
    CHECK(ex.in_product == P("z[2,-3]"));
    CHECK(ex.out_product == P("z[1,-2]*z[3,-2]"));
  }

  TEST_CASE("A2 exchange relation") {
    const Seed s0 = initial_seed(cartan_from_label("A2"), {1, {2, -1}});
    CHECK(s0.vertices == std::vector<Vertex>{{1, -4}, {1, -2}, {2, -3}, {2, -1}});
    CHECK(mutate(s0, {2, -1}).at({2, -1}).to_string() == "(z[1,-2] + z[2,-3])/(z[2,-1])");
  }

  TEST_CASE("mutation errors") {
    CHECK_ERROR_CODE(mutate(a3_seed(), {2, -3}), ErrorCode::FrozenVertex);
    CHECK_ERROR_CODE(mutate(a3_seed(), {2, -7}), ErrorCode::UnknownVertex);
  }

  TEST_CASE("involution and commutation") {
    const Seed s = a3_seed();
    for (const auto& v : s.mutable_vertices()) {
      const Seed t = mutate(mutate(s, v), v);
      CHECK(t.b == s.b);
      CHECK(t.attach == s.attach);
    }
    // (1,-2) and (3,-2) are not adjacent.
    const Seed x = mutate(mutate(s, {1, -2}), {3, -2});
    const Seed y = mutate(mutate(s, {3, -2}), {1, -2});
    CHECK(x.b == y.b);
    CHECK(x.attach == y.attach);
  }

  TEST_CASE("matrix mutation against the case-split rule") {
    for (const char* tag : {"A3", "B2", "G2", "C3", "D4"}) {
      const Seed s = initial_seed(cartan_from_label(tag), {2, default_anchor(cartan_from_label(tag))});
      auto b = s.b;
      for (int step = 0; step < 20; ++step) {
        const std::size_t k = static_cast<std::size_t>(step * 7 + 3) % b.size();
        CHECK(mutate_matrix(b, k) == oracle::mutate_cases(b, k));
        b = mutate_matrix(b, k);
      }
    }
    std::vector<std::vector<int>> big{{0, 1 << 20, 0}, {-(1 << 20), 0, 1 << 20}, {0, -(1 << 20), 0}};
    CHECK_ERROR_CODE(mutate_matrix(big, 1), ErrorCode::InvalidConfig);
  }

  TEST_CASE("finite type closures") {
    const ClosureResult a3 = enumerate_closure(a3_seed(), 1000);
    CHECK(a3.closed);
    CHECK(a3.variables.size() == 9);
    CHECK(a3.frozen.size() == 3);
    CHECK(a3.seed_count == 14);
    const ClosureResult b2 = enumerate_closure(initial_seed(cartan_from_label("B2"), {2, {1, -2}}), 1000);
    CHECK(b2.closed);
    CHECK(b2.variables.size() == 9);
    CHECK(b2.seed_count == 14);
    const ClosureResult g2 = enumerate_closure(initial_seed(cartan_from_label("G2"), {3, {1, -3}}), 1000);
    CHECK(g2.closed);
    CHECK(g2.variables.size() == 14);
    CHECK(g2.frozen.size() == 4);
    CHECK(g2.seed_count == 42);
    const ClosureResult capped = enumerate_closure(a3_seed(), 5);
    CHECK(!capped.closed);
    CHECK(capped.seed_count == 5);
  }

  TEST_CASE("Laurent phenomenon and positivity") {
    for (const auto& [tag, ell, anchor] :
         std::vector<std::tuple<const char*, int, Vertex>>{{"A3", 1, {2, -1}}, {"B2", 2, {1, -2}}, {"G2", 3, {1, -3}}}) {
      const ClosureResult c = enumerate_closure(initial_seed(cartan_from_label(tag), {ell, anchor}), 1000);
      for (const auto& x : c.variables) {
        CHECK(x.denominator().is_polynomial());
        CHECK(x.numerator().nonnegative_coefficients());
        CHECK(x.numerator() * x.denominator().inverse() == x.laurent);
      }
      for (const auto& ex : c.exchanges) CHECK(ex.before.laurent * ex.after.laurent == ex.in_product + ex.out_product);
    }
  }

  TEST_CASE("denominator vectors are the almost positive roots") {
    const Seed s0 = a3_seed();
    const ClosureResult c = enumerate_closure(s0, 1000);
    std::set<std::vector<int>> got;
    for (const auto& x : c.variables) got.insert(denominator_vector(x, s0));
    // Order of mutable vertices: (1,-2), (2,-1), (3,-2).
    const std::set<std::vector<int>> expect{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 0, 0}, {0, 1, 0},
                                            {0, 0, 1},  {1, 1, 0},  {0, 1, 1},  {1, 1, 1}};
    CHECK(got == expect);
    CHECK(denominator_vector(ClusterVar::initial({2, -1}), s0) == std::vector<int>{0, -1, 0});
    CHECK(denominator_vector(mutate(s0, {2, -1}).at({2, -1}), s0) == std::vector<int>{0, 1, 0});
  }

  TEST_CASE("mutation sequence turns the A3 quiver into the B2 quiver") {
    const Seed a3 = mutate_sequence(a3_seed(), {{3, -2}, {2, -1}, {1, -2}});
    const Seed b2 = initial_seed(cartan_from_label("B2"), {2, {1, -2}});
    CHECK(isomorphic_ignoring_frozen_arrows(a3, b2));
    CHECK(!isomorphic_ignoring_frozen_arrows(a3_seed(), b2));
  }

  TEST_CASE("realization in A2") {
    const CartanData a2 = cartan_from_label("A2");
    const TruncationParams tp{1, {2, -1}};
    TSystemSolver solver(a2, FundamentalProvider::builtin(a2));
    const auto table = realization_table(a2, tp, solver);
    const Seed s0 = initial_seed(a2, tp);
    CHECK(realize_qchar(s0.at({2, -3}), table) == solver.kr_qchar(2, 2, -2));
    const ClusterVar x = mutate(s0, {2, -1}).at({2, -1});
    CHECK(realize_qchar(x, table) == solver.kr_qchar(2, 1, -2));
    const ClusterVar sq{x.laurent * x.laurent};
    CHECK(realize_qchar(sq, table) == realize_qchar(x, table).pow(2));
    for (const auto& v : enumerate_closure(s0, 100).variables) CHECK(realize_qchar(v, table).nonnegative_coefficients());
  }

  TEST_CASE("realization in A3 with file fundamentals") {
    const CartanData a3 = cartan_from_label("A3");
    const TruncationParams tp{1, {2, -1}};
    TSystemSolver solver(a3, FundamentalProvider::from_json(a3, a3_fundamentals()));
    const auto table = realization_table(a3, tp, solver);
    const Seed s0 = initial_seed(a3, tp);
    CHECK(realize_qchar(s0.at({2, -3}), table) == solver.kr_qchar(2, 2, -2));
    const ClusterVar x = mutate(s0, {2, -1}).at({2, -1});
    // x x* = z(2,-3) + z(1,-2) z(3,-2), with x* of class W(2)_{1,q^-2}.
    CHECK(realize_qchar(x, table) == solver.kr_qchar(2, 1, -2));
    CHECK(table.at({2, -1}) * realize_qchar(x, table) == table.at({2, -3}) + table.at({1, -2}) * table.at({3, -2}));

    // Highest monomials of the nine cluster variables.
    std::set<std::string> highest;
    for (const auto& v : enumerate_closure(s0, 100).variables)
      highest.insert(highest_monomial(a3, realize_qchar(v, table)).to_string());
    const std::set<std::string> expect{"Y[1,-1]", "Y[2,-2]", "Y[3,-1]", "Y[1,-3]", "Y[2,0]", "Y[3,-3]",
                                       "Y[1,-3]*Y[2,0]", "Y[2,0]*Y[3,-3]", "Y[1,-3]*Y[2,0]*Y[3,-3]"};
    CHECK(highest == expect);
  }

  TEST_CASE("frozen A3 fundamentals file matches the tableau oracle") {
    const CartanData a3 = cartan_from_label("A3");
    const auto fp = FundamentalProvider::from_file(a3, QAFF_TEST_DATA "/a3_fundamentals.json");
    for (int i = 1; i <= 3; ++i)
      for (int r = -4; r <= 4; ++r) CHECK(fp(i, r) == oracle::an_fundamental(3, i, r));
  }

  TEST_CASE("B2 level two primes") {
    const CartanData b2 = cartan_from_label("B2");
    const TruncationParams tp{2, {1, -2}};
    TSystemSolver solver(b2, FundamentalProvider::builtin(b2));
    const auto table = realization_table(b2, tp, solver);
    std::set<std::string> highest;
    for (const auto& v : enumerate_closure(initial_seed(b2, tp), 100).variables)
      highest.insert(highest_monomial(b2, realize_qchar(v, table)).to_string());
    const std::set<std::string> expect{"Y[1,-4]", "Y[2,-3]*Y[2,-1]", "Y[2,-1]", "Y[1,0]", "Y[2,-5]", "Y[2,-3]",
                                       "Y[1,0]*Y[2,-5]", "Y[2,-5]*Y[2,-3]", "Y[1,0]*Y[2,-5]*Y[2,-3]"};
    CHECK(highest == expect);
  }

  TEST_CASE("highest monomial") {
    const CartanData b2 = cartan_from_label("B2");
    TSystemSolver s(b2, FundamentalProvider::builtin(b2));
    CHECK(highest_monomial(b2, s.kr_qchar(1, 2, 4)) == kr_highest_monomial(b2, 1, 2, 4));
    CHECK(highest_monomial(b2, s.kr_qchar(2, 3, -1)) == kr_highest_monomial(b2, 2, 3, -1));
  }

  TEST_CASE("seed json") {
    const json j = mutate(a3_seed(), {2, -1}).to_json();
    CHECK(j["vertices"].size() == 6);
    CHECK(j["frozen"].size() == 3);
    CHECK(j["variables"].size() == 6);
  }
}
