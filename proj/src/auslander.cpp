#include "gridhom/auslander.hpp"

#include <algorithm>
#include <stdexcept>

#include "gridhom/matrix.hpp"
#include "gridhom/ycat.hpp"

namespace gridhom {

namespace {

// Replace k by k+1 in the sorted sequence; empty result if not possible.
std::vector<int> sigma_plus(const std::vector<int>& x, int k, int top) {
  if (k + 1 > top || !std::binary_search(x.begin(), x.end(), k) ||
      std::binary_search(x.begin(), x.end(), k + 1))
    return {};
  std::vector<int> out = x;
  *std::find(out.begin(), out.end(), k) = k + 1;
  return out;
}

std::vector<int> defined_moves(const std::vector<int>& x, int top) {
  std::vector<int> out;
  for (int k : x)
    if (!sigma_plus(x, k, top).empty()) out.push_back(k);
  return out;
}

}  // namespace

std::vector<TiltingSummand> tilting_summands(int m, int n) {
  GridLattice L(m, n);
  std::vector<TiltingSummand> out;
  for (std::size_t i = 0; i < L.size(); ++i)
    out.push_back({L.at(i), coefficient_sum(from_partition(L.at(i), n))});
  return out;
}

QuiverPresentation higher_auslander(int s, int d) {
  if (s < 1 || d < 0) throw std::invalid_argument("higher_auslander: need s >= 1, d >= 0");
  const int top = d + s;
  QuiverPresentation Q;
  Q.orientation = Orientation::Opposite;

  // All strictly increasing sequences of length d+1 in [1, top], lex order.
  std::vector<int> seq(d + 1);
  for (int i = 0; i <= d; ++i) seq[i] = i + 1;
  while (true) {
    Q.vertices.push_back(seq);
    int i = d;
    while (i >= 0 && seq[i] == top - (d - i)) --i;
    if (i < 0) break;
    ++seq[i];
    for (int j = i + 1; j <= d; ++j) seq[j] = seq[j - 1] + 1;
  }

  for (std::size_t v = 0; v < Q.vertices.size(); ++v)
    for (int k : defined_moves(Q.vertices[v], top))
      Q.arrows.push_back(
          QuiverArrow{static_cast<int>(v), Q.vertex_id(sigma_plus(Q.vertices[v], k, top)), k});

  for (std::size_t v = 0; v < Q.vertices.size(); ++v) {
    const std::vector<int>& x = Q.vertices[v];
    const std::vector<int> moves = defined_moves(x, top);
    for (std::size_t p = 0; p < moves.size(); ++p)
      for (std::size_t q = p + 1; q < moves.size(); ++q) {
        const int k = moves[p], l = moves[q];
        const int vk = Q.vertex_id(sigma_plus(x, k, top));
        const int vl = Q.vertex_id(sigma_plus(x, l, top));
        const int vkl = Q.vertex_id(sigma_plus(sigma_plus(x, k, top), l, top));
        Q.relations.push_back(
            {PathTerm{Rat(1), Q.arrow_id(static_cast<int>(v), vl), Q.arrow_id(vl, vkl)},
             PathTerm{Rat(-1), Q.arrow_id(static_cast<int>(v), vk), Q.arrow_id(vk, vkl)}});
      }
    for (int k : x) {
      if (!std::binary_search(x.begin(), x.end(), k + 1) ||
          std::binary_search(x.begin(), x.end(), k + 2) || k + 2 > top)
        continue;
      const int v1 = Q.vertex_id(sigma_plus(x, k + 1, top));
      const int v2 = Q.vertex_id(sigma_plus(sigma_plus(x, k + 1, top), k, top));
      Q.relations.push_back(
          {PathTerm{Rat(1), Q.arrow_id(static_cast<int>(v), v1), Q.arrow_id(v1, v2)}});
    }
  }
  validate(Q);
  return Q;
}

QuiverPresentation quadratic_dual(const QuiverPresentation& Q) {
  validate(Q);
  QuiverPresentation D;
  D.orientation = Q.orientation;
  D.vertices = Q.vertices;
  for (const QuiverArrow& a : Q.arrows) D.arrows.push_back(QuiverArrow{a.tgt, a.src, a.move});

  const std::vector<std::pair<int, int>> paths = two_paths(Q);
  for (const std::vector<Rat>& v : relation_matrix(Q).kernel_basis()) {
    std::vector<PathTerm> rel;
    for (std::size_t j = 0; j < paths.size(); ++j)
      if (!(v[j] == 0)) rel.push_back(PathTerm{v[j], paths[j].second, paths[j].first});
    D.relations.push_back(rel);
  }
  validate(D);
  return D;
}

QuiverPresentation end_tilting_presentation(int m, int n) {
  GridLattice L(m, n);
  QuiverPresentation Q = bead_presentation(L, SignConvention::Commuting);
  std::vector<int> kappa(L.size());
  for (std::size_t i = 0; i < L.size(); ++i)
    kappa[i] = coefficient_sum(from_partition(L.at(i), n));
  for (const QuiverArrow& a : Q.arrows) {
    const int want = a.move > 0 ? 1 : 0;
    const auto hd = hom_degree(L, L.at(a.src), L.at(a.tgt));
    if (!hd || hd->degree != want || kappa[a.src] - kappa[a.tgt] != want)
      throw std::logic_error("end_tilting_presentation: arrow not degree zero after shifting");
  }
  return Q;
}

std::vector<int> complement_shift(const Configuration& R) {
  validate(R);
  if (R.has(-R.m)) throw std::domain_error("complement_shift: configuration is not plain");
  std::vector<int> out;
  for (int z = -R.m + 1; z <= R.n; ++z)
    if (!R.has(z)) out.push_back(z + R.m);
  return out;
}

bool complementary_dual_isomorphic(int s, int d) {
  if (s < 2 || d < 0)
    throw std::invalid_argument("complementary_dual_isomorphic: need s >= 2, d >= 0");
  const int m = s - 1, n = d + 1;
  QuiverPresentation A = higher_auslander(s, d);
  QuiverPresentation D = quadratic_dual(higher_auslander(d + 2, s - 2));

  // Vertex x corresponds to the configuration whose complement_shift is x;
  // the bijection onto the dual is the complement inside [1, d+s].
  std::vector<Configuration> cfg(A.vertices.size());
  std::vector<int> bij(A.vertices.size());
  for (std::size_t i = 0; i < A.vertices.size(); ++i) {
    const std::vector<int>& x = A.vertices[i];
    Configuration R{m, n, {}};
    std::vector<int> comp;
    for (int z = 1; z <= d + s; ++z)
      if (!std::binary_search(x.begin(), x.end(), z)) {
        R.beads.push_back(z - m);
        comp.push_back(z);
      }
    cfg[i] = R;
    bij[i] = D.vertex_id(comp);
    if (bij[i] < 0) return false;
  }

  // Rescale each arrow by the unit turning its commuting-variant generator
  // into the anticommuting-variant one, then compare strictly.
  for (std::vector<PathTerm>& rel : A.relations)
    for (PathTerm& t : rel)
      for (int a : {t.first, t.second}) {
        const QuiverArrow& ar = A.arrows[a];
        const int k = ar.move - m + 1;
        t.coeff *= generator_sign(cfg[ar.src], k, SignConvention::Commuting) *
                   generator_sign(cfg[ar.src], k, SignConvention::Anticommuting);
      }
  return presentations_isomorphic(A, D, bij);
}

}  // namespace gridhom
