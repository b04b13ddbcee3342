#include "helpers.hpp"
#include "qaff/cartan.hpp"

using namespace qaff;

TEST_SUITE("cartan") {
  TEST_CASE("B3 data") {
    const CartanData cd = cartan_from_label("B3");
    CHECK(cd.cartan_matrix() == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    CHECK(cd.symmetrizer() == std::vector<int>{2, 2, 1});
    CHECK(symmetrized_matrix(cd) == std::vector<std::vector<int>>{{4, -2, 0}, {-2, 4, -2}, {0, -2, 2}});
    CHECK(cd.t() == 2);
  }

  TEST_CASE("rank two types") {
    const CartanData b2 = cartan_from_label("b2");
    CHECK(b2.cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(b2.symmetrizer() == std::vector<int>{2, 1});
    CHECK(symmetrized_matrix(b2) == std::vector<std::vector<int>>{{4, -2}, {-2, 2}});

    const CartanData g2 = cartan_from_label("G2");
    CHECK(g2.cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
    CHECK(g2.symmetrizer() == std::vector<int>{3, 1});
    CHECK(symmetrized_matrix(g2) == std::vector<std::vector<int>>{{6, -3}, {-3, 2}});
    CHECK(g2.t() == 3);

    const CartanData a1 = cartan_from_label("A1");
    CHECK(a1.cartan_matrix() == std::vector<std::vector<int>>{{2}});
    CHECK(a1.simply_laced());
  }

  TEST_CASE("every supported type is symmetrizable with min d = 1") {
    for (const char* tag : {"A1", "A4", "B2", "B5", "C3", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2"}) {
      CAPTURE(tag);
      const CartanData cd = cartan_from_label(tag);
      const auto B = symmetrized_matrix(cd);
      int mind = 99;
      for (int i = 1; i <= cd.rank(); ++i) {
        mind = std::min(mind, cd.d(i));
        CHECK(cd.c(i, i) == 2);
        for (int j = 1; j <= cd.rank(); ++j) {
          CHECK(B[i - 1][j - 1] == B[j - 1][i - 1]);
          if (i != j) CHECK(cd.c(i, j) <= 0);
          CHECK((cd.c(i, j) == 0) == (cd.c(j, i) == 0));
        }
      }
      CHECK(mind == 1);
    }
  }

  TEST_CASE("simple-laced neighbour counts") {
    CHECK(cartan_from_label("D4").neighbours(2) == std::vector<int>{1, 3, 4});
    CHECK(cartan_from_label("E6").neighbours(4) == std::vector<int>{2, 3, 5});
    CHECK(cartan_from_label("C3").d(3) == 2);
    CHECK(cartan_from_label("F4").symmetrizer() == std::vector<int>{2, 2, 1, 1});
  }

  TEST_CASE("label errors") {
    CHECK_ERROR_CODE(parse_lie_type("H3"), ErrorCode::UnknownLabel);
    CHECK_ERROR_CODE(parse_lie_type("A"), ErrorCode::UnknownLabel);
    CHECK_ERROR_CODE(parse_lie_type("A0"), ErrorCode::RankOutOfRange);
    CHECK_ERROR_CODE(parse_lie_type("B1"), ErrorCode::RankOutOfRange);
    CHECK_ERROR_CODE(parse_lie_type("D3"), ErrorCode::RankOutOfRange);
    CHECK_ERROR_CODE(parse_lie_type("E9"), ErrorCode::RankOutOfRange);
    CHECK_ERROR_CODE(parse_lie_type("G3"), ErrorCode::RankOutOfRange);
    CHECK_ERROR_CODE(simple_root_coords(cartan_from_label("A2"), 3), ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("simple roots as columns") {
    CHECK(simple_root_coords(cartan_from_label("B2"), 1) == std::vector<int>{2, -2});
  }
}
