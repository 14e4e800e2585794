#pragma once

#include <vector>

#include "gridhom/abacus.hpp"
#include "gridhom/lattice.hpp"
#include "gridhom/quiver.hpp"

namespace gridhom {

// One indecomposable summand of the shift-corrected tilting object: the
// complex of alpha placed in homological shift kappa_alpha, the sum of the
// distinct block values of alpha.
struct TiltingSummand {
  Partition alpha;
  int shift = 0;
};

// All summands in lattice (lex) order, one per element of J_{m,n}.  With
// these shifts every nonzero hom between two summands lands in degree
// zero: hom_degree(a, b) == shift_a - shift_b.
std::vector<TiltingSummand> tilting_summands(int m, int n);

// Higher Auslander presentation A_s^d (opposite orientation).  Vertices
// are the strictly increasing sequences of length d+1 with values in
// [1, d+s], in lex order; the arrow with move label k replaces k by k+1
// whenever the result is again such a sequence.  Relations: for every
// vertex with two moves k, l defined, the difference of the two composite
// orders; for every vertex containing k and k+1 but not k+2 <= d+s, the
// zero path climbing k+1 then k.
QuiverPresentation higher_auslander(int s, int d);

// Quadratic dual: same vertices, every arrow reversed, and the relation
// space replaced by its orthogonal complement inside the span of length-2
// paths, where a path "a then b" pairs with its reversal "b then a".  The
// input must pass validate (throws std::domain_error otherwise); its
// relations are quadratic by construction.
QuiverPresentation quadratic_dual(const QuiverPresentation& Q);

// Endomorphism presentation of the tilting object: the commuting-variant
// bead-move quiver of J_{m,n}.  Re-checks arrow by arrow that the
// morphism has degree zero between the shifted summands, i.e. that kappa
// drops by one exactly on positive moves; throws std::logic_error if not.
QuiverPresentation end_tilting_presentation(int m, int n);

// Complement of a plain right configuration inside {-m+1, ..., n}, then
// shifted by +m: an increasing sequence of length n with values in
// [1, m+n], i.e. a vertex label of A_{m+1}^{n-1}.  Throws
// std::domain_error if the configuration holds a bead at -m.
std::vector<int> complement_shift(const Configuration& R);

// Is A_s^d isomorphic, as a presentation, to the quadratic dual of
// A_{d+2}^{s-2}?  Vertices are matched by complement inside [1, d+s].  The
// squares of one side commute and of the other anticommute, so the naive
// relation transport fails; each arrow is first rescaled by the unit that
// links the commuting and anticommuting generator choices of the bead
// quiver of J_{s-1, d+1}, whose vertices A_s^d shares after complement and
// shift.  Requires s >= 2 (throws std::invalid_argument).
bool complementary_dual_isomorphic(int s, int d);

}  // namespace gridhom
