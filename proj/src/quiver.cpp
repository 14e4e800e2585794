#include "gridhom/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gridhom {

int QuiverPresentation::vertex_id(const std::vector<int>& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  return -1;
}

int QuiverPresentation::arrow_id(int src, int tgt) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == src && arrows[i].tgt == tgt) return static_cast<int>(i);
  return -1;
}

void validate(const QuiverPresentation& Q) {
  const int nv = static_cast<int>(Q.vertices.size());
  const int na = static_cast<int>(Q.arrows.size());
  std::set<std::pair<int, int>> seen;
  for (const QuiverArrow& a : Q.arrows) {
    if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv)
      throw std::domain_error("quiver: arrow endpoint out of range");
    if (!seen.insert({a.src, a.tgt}).second)
      throw std::domain_error("quiver: parallel arrows");
  }
  for (const auto& rel : Q.relations) {
    if (rel.empty()) throw std::domain_error("quiver: empty relation");
    int src = -1, tgt = -1;
    for (const PathTerm& t : rel) {
      if (t.coeff == Rat(0)) throw std::domain_error("quiver: zero coefficient");
      if (t.first < 0 || t.first >= na || t.second < 0 || t.second >= na)
        throw std::domain_error("quiver: relation arrow out of range");
      if (Q.arrows[t.first].tgt != Q.arrows[t.second].src)
        throw std::domain_error("quiver: relation path does not compose");
      int s = Q.arrows[t.first].src, e = Q.arrows[t.second].tgt;
      if (src == -1) {
        src = s;
        tgt = e;
      } else if (s != src || e != tgt) {
        throw std::domain_error("quiver: relation terms not parallel");
      }
    }
  }
}

std::vector<std::pair<int, int>> two_paths(const QuiverPresentation& Q) {
  std::vector<std::pair<int, int>> out;
  const int na = static_cast<int>(Q.arrows.size());
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      if (Q.arrows[a].tgt == Q.arrows[b].src) out.emplace_back(a, b);
  return out;
}

QMat relation_matrix(const QuiverPresentation& Q) {
  std::vector<std::pair<int, int>> paths = two_paths(Q);
  std::map<std::pair<int, int>, std::size_t> col;
  for (std::size_t j = 0; j < paths.size(); ++j) col[paths[j]] = j;
  QMat R(Q.relations.size(), paths.size());
  for (std::size_t i = 0; i < Q.relations.size(); ++i)
    for (const PathTerm& t : Q.relations[i]) {
      auto it = col.find({t.first, t.second});
      if (it == col.end()) throw std::domain_error("quiver: relation path not composable");
      R.at(i, it->second) = R.at(i, it->second) + t.coeff;
    }
  return R;
}

bool presentations_isomorphic(const QuiverPresentation& Q1,
                              const QuiverPresentation& Q2,
                              const std::vector<int>& vertex_bijection) {
  const int n1 = static_cast<int>(Q1.vertices.size());
  const int n2 = static_cast<int>(Q2.vertices.size());
  if (static_cast<int>(vertex_bijection.size()) != n1)
    throw std::domain_error("presentations_isomorphic: bijection not total");
  std::set<int> image;
  for (int v : vertex_bijection) {
    if (v < 0 || v >= n2) throw std::domain_error("presentations_isomorphic: image out of range");
    if (!image.insert(v).second)
      throw std::domain_error("presentations_isomorphic: bijection not injective");
  }
  if (n1 != n2) throw std::domain_error("presentations_isomorphic: vertex counts differ");

  if (Q1.orientation != Q2.orientation) return false;
  if (Q1.arrows.size() != Q2.arrows.size()) return false;

  // Arrow transport: each Q1 arrow must land on a Q2 arrow; counts being
  // equal and Q2 carrying no parallel arrows make the map a bijection.
  std::vector<int> arrow_map(Q1.arrows.size());
  for (std::size_t a = 0; a < Q1.arrows.size(); ++a) {
    int id = Q2.arrow_id(vertex_bijection[Q1.arrows[a].src], vertex_bijection[Q1.arrows[a].tgt]);
    if (id < 0) return false;
    arrow_map[a] = id;
  }

  std::vector<std::pair<int, int>> paths2 = two_paths(Q2);
  std::map<std::pair<int, int>, std::size_t> col;
  for (std::size_t j = 0; j < paths2.size(); ++j) col[paths2[j]] = j;

  QMat transported(Q1.relations.size(), paths2.size());
  for (std::size_t i = 0; i < Q1.relations.size(); ++i)
    for (const PathTerm& t : Q1.relations[i]) {
      auto it = col.find({arrow_map[t.first], arrow_map[t.second]});
      if (it == col.end()) return false;
      transported.at(i, it->second) = transported.at(i, it->second) + t.coeff;
    }

  return same_row_space(transported, relation_matrix(Q2));
}

}  // namespace gridhom
