#pragma once

#include <utility>
#include <vector>

#include "gridhom/matrix.hpp"

namespace gridhom {

// Whether the stored arrows present the algebra itself or its opposite.
// Every construction in this project writes arrows in the same direction
// (bead moves / value increments) and presents the opposite algebra; the
// flag keeps that convention explicit so comparisons cannot silently mix
// the two readings.
enum class Orientation { Algebra, Opposite };

// One arrow src -> tgt between vertex ids.  `move` records the generator
// the arrow came from (bead move value, or the incremented value for
// Auslander quivers); it is bookkeeping and not part of comparisons.
struct QuiverArrow {
  int src = 0;
  int tgt = 0;
  int move = 0;

  bool operator==(const QuiverArrow&) const = default;
};

// One scalar multiple of a length-2 path; `first` is the arrow applied
// first, so the term means coeff * (second after first).
struct PathTerm {
  Rat coeff;
  int first = 0;
  int second = 0;
};

// Finite quiver with integer-vector vertex labels and relations spanned by
// rational combinations of parallel length-2 paths.
struct QuiverPresentation {
  Orientation orientation = Orientation::Opposite;
  std::vector<std::vector<int>> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<PathTerm>> relations;

  // Index of the vertex with this label, or -1.
  int vertex_id(const std::vector<int>& label) const;
  // Index of the unique arrow src -> tgt, or -1.  The families built here
  // never carry parallel arrows; validate enforces that.
  int arrow_id(int src, int tgt) const;
};

// Endpoint ranges, no parallel arrows, every relation nonempty with
// nonzero coefficients and composable pairwise-parallel terms.  Throws
// std::domain_error on the first violation.
void validate(const QuiverPresentation& Q);

// All composable ordered pairs (first, second) of arrow ids -- the basis
// of the space of length-2 paths -- sorted by (first, second).
std::vector<std::pair<int, int>> two_paths(const QuiverPresentation& Q);

// Relations as rows over the two_paths(Q) basis.
QMat relation_matrix(const QuiverPresentation& Q);

// Does vertex_bijection (id in Q1 -> id in Q2) carry Q1 onto Q2?  True iff
// the orientations agree, arrows correspond one-to-one under the bijection,
// and the transported relation space of Q1 equals the relation space of Q2
// as a subspace of Q2's 2-path space (exact row-space comparison, so the
// two sides may present the relation ideal in different bases).  Throws
// std::domain_error unless the bijection is a bijection.
bool presentations_isomorphic(const QuiverPresentation& Q1,
                              const QuiverPresentation& Q2,
                              const std::vector<int>& vertex_bijection);

}  // namespace gridhom
