#include "doctest.h"

#include "gridhom/matrix.hpp"

using namespace gridhom;

TEST_CASE("rational echelon rank and kernel") {
  QMat a(3, 4);
  // rows: (1,2,3,4), (2,4,6,8), (0,1,1,0) -> rank 2
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) a.at(i, j) = vals[i][j];
  CHECK(a.rank() == 2);
  CHECK(a.nullity() == 2);
  auto ker = a.kernel_basis();
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    for (int i = 0; i < 3; ++i) {
      Rat s = 0;
      for (int j = 0; j < 4; ++j) s += a.at(i, j) * v[j];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("solve consistent and inconsistent systems") {
  QMat a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  auto x = a.solve({Rat(5), Rat(11)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 2);

  QMat b(2, 1);
  b.at(0, 0) = 1;
  b.at(1, 0) = 1;
  CHECK_FALSE(b.solve({Rat(0), Rat(1)}).has_value());
  CHECK(b.solve({Rat(2), Rat(2)}).has_value());
}

TEST_CASE("matrix algebra basics") {
  QMat id = QMat::identity(3);
  QMat a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = i * 3 + j + 1;
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK((a + a.scaled(Rat(-1))).is_zero());
  CHECK(a.transpose().transpose() == a);
}

TEST_CASE("row space comparison") {
  QMat a(2, 3), b(2, 3);
  // a spans {(1,0,1),(0,1,0)}; b spans {(1,1,1),(2,1,2)} -> same space
  a.at(0, 0) = 1;
  a.at(0, 2) = 1;
  a.at(1, 1) = 1;
  b.at(0, 0) = 1;
  b.at(0, 1) = 1;
  b.at(0, 2) = 1;
  b.at(1, 0) = 2;
  b.at(1, 1) = 1;
  b.at(1, 2) = 2;
  CHECK(same_row_space(a, b));
  b.at(1, 2) = 3;
  CHECK_FALSE(same_row_space(a, b));
}

TEST_CASE("integer unitriangular inverse") {
  ZMat z(3, 3);
  for (int i = 0; i < 3; ++i) z.at(i, i) = 1;
  z.at(0, 1) = 2;
  z.at(0, 2) = 5;
  z.at(1, 2) = -3;
  ZMat inv = z.inverse_unitriangular();
  CHECK((z * inv).is_identity());
  CHECK((inv * z).is_identity());
}

TEST_CASE("integer matrix power") {
  ZMat m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  // Fibonacci: m^10 has top-left F(11) = 89
  CHECK(m.power(10).at(0, 0) == 89);
  CHECK(m.power(0).is_identity());
}

TEST_CASE("gf2 solver") {
  // x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1
  std::vector<std::vector<int>> rows = {{0, 1}, {1, 2}, {0, 2}};
  std::vector<int> rhs = {1, 0, 1};
  auto sol = solve_gf2(rows, rhs, 3);
  REQUIRE(sol.has_value());
  CHECK(((*sol)[0] ^ (*sol)[1]) == 1);
  CHECK(((*sol)[1] ^ (*sol)[2]) == 0);

  // Inconsistent: x0 = 0, x0 = 1
  std::vector<std::vector<int>> bad = {{0}, {0}};
  CHECK_FALSE(solve_gf2(bad, {0, 1}, 1).has_value());
}
