#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "gridhom/auslander.hpp"
#include "gridhom/ycat.hpp"

using namespace gridhom;

namespace {

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

int kappa(const Partition& p, int n) { return coefficient_sum(from_partition(p, n)); }

std::vector<int> shifted_beads(const std::vector<int>& beads, int m) {
  std::vector<int> out = beads;
  for (int& b : out) b += m;
  return out;
}

std::vector<int> alphabet_complement(const std::vector<int>& x, int top) {
  std::vector<int> out;
  for (int z = 1; z <= top; ++z)
    if (!std::binary_search(x.begin(), x.end(), z)) out.push_back(z);
  return out;
}

// coeff-weighted pairing of a relation of Q with a relation of its dual:
// the 2-path "a then b" pairs with the reversed 2-path "b then a".
Rat pair_relations(const std::vector<PathTerm>& r, const std::vector<PathTerm>& rd) {
  Rat s = 0;
  for (const PathTerm& t : r)
    for (const PathTerm& td : rd)
      if (t.first == td.second && t.second == td.first) s += t.coeff * td.coeff;
  return s;
}

}  // namespace

TEST_CASE("tilting summands carry the distinct-value sums") {
  auto t11 = tilting_summands(1, 1);
  REQUIRE(t11.size() == 2);
  CHECK(t11[0].alpha == Partition{{0}});
  CHECK(t11[0].shift == 0);
  CHECK(t11[1].alpha == Partition{{1}});
  CHECK(t11[1].shift == 1);

  auto t22 = tilting_summands(2, 2);
  std::vector<int> shifts;
  for (const TiltingSummand& t : t22) shifts.push_back(t.shift);
  CHECK(shifts == std::vector<int>{0, 1, 2, 1, 3, 2});

  CHECK(tilting_summands(3, 2).front().shift == 0);  // all-zero partition

  // an allowed decrement lowers the sum by exactly the number of blocks hit
  GridLattice L(2, 3);
  for (std::size_t i = 0; i < L.size(); ++i) {
    CompactPartition p = from_partition(L.at(i), 3);
    const std::set<int> mut = p.mutable_indices();
    const std::vector<int> ms(mut.begin(), mut.end());
    for (unsigned mask = 0; mask < (1u << ms.size()); ++mask) {
      std::set<int> J;
      for (std::size_t t = 0; t < ms.size(); ++t)
        if (mask >> t & 1u) J.insert(ms[t]);
      if (!is_allowed(p, J)) continue;
      CHECK(coefficient_sum(decrement(p, J)) ==
            coefficient_sum(p) - static_cast<int>(J.size()));
    }
  }
}

TEST_CASE("higher auslander quivers") {
  QuiverPresentation Q = higher_auslander(2, 1);
  CHECK(Q.orientation == Orientation::Opposite);
  REQUIRE(Q.vertices.size() == 3);
  CHECK(Q.vertices[0] == std::vector<int>{1, 2});
  CHECK(Q.vertices[1] == std::vector<int>{1, 3});
  CHECK(Q.vertices[2] == std::vector<int>{2, 3});
  REQUIRE(Q.arrows.size() == 2);
  CHECK(Q.arrows[0] == QuiverArrow{0, 1, 2});
  CHECK(Q.arrows[1] == QuiverArrow{1, 2, 1});
  REQUIRE(Q.relations.size() == 1);  // the climb 2 then 1 out of (1,2)
  REQUIRE(Q.relations[0].size() == 1);
  CHECK(Q.relations[0][0].coeff == 1);
  CHECK(Q.relations[0][0].first == 0);
  CHECK(Q.relations[0][0].second == 1);

  // d = 0 degenerates to the linear quiver with no relations
  QuiverPresentation A30 = higher_auslander(3, 0);
  REQUIRE(A30.vertices.size() == 3);
  REQUIRE(A30.arrows.size() == 2);
  CHECK(A30.arrows[0] == QuiverArrow{0, 1, 1});
  CHECK(A30.arrows[1] == QuiverArrow{1, 2, 2});
  CHECK(A30.relations.empty());

  QuiverPresentation A31 = higher_auslander(3, 1);
  CHECK(A31.vertices.size() == 6);
  CHECK(A31.arrows.size() == 6);
  CHECK(A31.relations.size() == 3);

  for (int s = 1; s <= 4; ++s)
    for (int d = 0; d <= 2; ++d)
      CHECK(higher_auslander(s, d).vertices.size() ==
            static_cast<std::size_t>(binom(d + s, d + 1)));
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {2, 3}})
    CHECK(higher_auslander(m + 1, n - 1).vertices.size() == GridLattice(m, n).size());

  CHECK_THROWS_AS(higher_auslander(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(higher_auslander(2, -1), std::invalid_argument);
}

TEST_CASE("quadratic duals of auslander presentations") {
  // A_2^1: the only 2-path is the zero relation, so the dual has none
  QuiverPresentation D21 = quadratic_dual(higher_auslander(2, 1));
  REQUIRE(D21.arrows.size() == 2);
  CHECK(D21.arrows[0] == QuiverArrow{1, 0, 2});
  CHECK(D21.arrows[1] == QuiverArrow{2, 1, 1});
  CHECK(D21.relations.empty());

  // A_3^1: dual relation space equals the climbing paths reversed plus the
  // anticommuting square, spelled out by hand
  QuiverPresentation Q = higher_auslander(3, 1);
  QuiverPresentation D = quadratic_dual(Q);
  QuiverPresentation E = D;
  E.relations = {
      {PathTerm{Rat(1), 2, 0}},                          // (1,4)->(1,3)->(1,2)
      {PathTerm{Rat(1), 5, 3}},                          // (3,4)->(2,4)->(1,4)
      {PathTerm{Rat(1), 4, 1}, PathTerm{Rat(1), 3, 2}},  // square at (1,3), + sign
  };
  validate(E);
  CHECK(same_row_space(relation_matrix(E), relation_matrix(D)));

  for (int s = 1; s <= 4; ++s)
    for (int d = 0; d <= 2; ++d) {
      QuiverPresentation A = higher_auslander(s, d);
      QuiverPresentation Ad = quadratic_dual(A);
      // complementary dimensions and exact orthogonality under reversal
      CHECK(relation_matrix(A).rank() + relation_matrix(Ad).rank() == two_paths(A).size());
      for (const auto& r : A.relations)
        for (const auto& rd : Ad.relations) CHECK(pair_relations(r, rd) == 0);
      // double dual restores the relation space
      std::vector<int> id(A.vertices.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      CHECK(presentations_isomorphic(A, quadratic_dual(Ad), id));
    }
}

TEST_CASE("complement shift on configurations") {
  CHECK(complement_shift(Configuration{2, 2, {0, 2}}) == std::vector<int>{1, 3});
  // the all-zero partition lands on the maximal vertex
  CHECK(complement_shift(right_config(from_partition(Partition{{0, 0}}, 2))) ==
        std::vector<int>{3, 4});
  CHECK_THROWS_AS(complement_shift(Configuration{2, 2, {-2, 0}}), std::domain_error);

  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      GridLattice L(m, n);
      QuiverPresentation A = higher_auslander(m + 1, n - 1);
      std::set<std::vector<int>> seen;
      for (std::size_t i = 0; i < L.size(); ++i) {
        std::vector<int> x = complement_shift(right_config(from_partition(L.at(i), n)));
        CHECK(x.size() == static_cast<std::size_t>(n));
        CHECK(A.vertex_id(x) >= 0);
        seen.insert(x);
      }
      CHECK(seen.size() == L.size());  // injective, hence bijective by count
    }
}

TEST_CASE("endomorphism quiver of the tilting object") {
  QuiverPresentation P11 = end_tilting_presentation(1, 1);
  CHECK(P11.vertices.size() == 2);
  CHECK(P11.arrows.size() == 1);
  CHECK(P11.relations.empty());

  CHECK(end_tilting_presentation(2, 2).arrows.size() == higher_auslander(3, 1).arrows.size());

  // no self extensions: every nonzero hom lands in degree zero once the
  // summands are shifted, i.e. its degree is the kappa difference
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      GridLattice L(m, n);
      for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = 0; j < L.size(); ++j) {
          auto hd = hom_degree(L, L.at(i), L.at(j));
          if (hd) CHECK(hd->degree == kappa(L.at(i), n) - kappa(L.at(j), n));
        }
    }
}

TEST_CASE("derived equivalence bridges") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
    GridLattice L(m, n);

    // complement + shift carries the commuting presentation onto A_{m+1}^{n-1}
    QuiverPresentation T = end_tilting_presentation(m, n);
    QuiverPresentation A = higher_auslander(m + 1, n - 1);
    std::vector<int> bij(T.vertices.size());
    for (std::size_t i = 0; i < T.vertices.size(); ++i)
      bij[i] = A.vertex_id(complement_shift(Configuration{m, n, T.vertices[i]}));
    CHECK(presentations_isomorphic(T, A, bij));

    // plain shift carries the anticommuting presentation onto the dual of
    // A_{n+1}^{m-1}
    QuiverPresentation W = bead_presentation(L, SignConvention::Anticommuting);
    QuiverPresentation Dual = quadratic_dual(higher_auslander(n + 1, m - 1));
    std::vector<int> shift_bij(W.vertices.size());
    for (std::size_t i = 0; i < W.vertices.size(); ++i)
      shift_bij[i] = Dual.vertex_id(shifted_beads(W.vertices[i], m));
    CHECK(presentations_isomorphic(W, Dual, shift_bij));
  }

  // A_s^d against the dual of A_{d+2}^{s-2}: true after the per-arrow sign
  // modulation, and false without it -- the transported squares commute
  // while the dual's anticommute
  CHECK(complementary_dual_isomorphic(2, 0));
  for (auto [s, d] : {std::pair{3, 1}, {4, 1}, {3, 2}}) {
    CHECK(complementary_dual_isomorphic(s, d));
    QuiverPresentation A = higher_auslander(s, d);
    QuiverPresentation D = quadratic_dual(higher_auslander(d + 2, s - 2));
    std::vector<int> bij(A.vertices.size());
    for (std::size_t i = 0; i < A.vertices.size(); ++i)
      bij[i] = D.vertex_id(alphabet_complement(A.vertices[i], d + s));
    CHECK(!presentations_isomorphic(A, D, bij));
  }
  CHECK_THROWS_AS(complementary_dual_isomorphic(1, 2), std::invalid_argument);
}
