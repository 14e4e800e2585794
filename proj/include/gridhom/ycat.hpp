#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gridhom/abacus.hpp"
#include "gridhom/complex.hpp"
#include "gridhom/lattice.hpp"
#include "gridhom/quiver.hpp"

namespace gridhom {

// Hom(P_a, P_b[p]) over the lattice category is at most one dimensional
// and concentrated in a single degree p.  When nonzero, `blocks` is the
// unique set of lowerable blocks of a whose joint decrement lands in
// [support_floor(b), b], and degree == |blocks|.
struct HomDegree {
  std::set<int> blocks;
  int degree = 0;
};

// The unique hom degree, or nullopt when every subset count differs from
// one.  Multiple hits always form an interval of the subset lattice
// (anything else throws std::logic_error).
std::optional<HomDegree> hom_degree(const GridLattice& L, const Partition& a,
                                    const Partition& b);

// P_alpha shifted by `shift` in the derived category.
struct ShiftedObject {
  Partition alpha;
  int shift = 0;
};

// Degree p with Hom(X, Y[p]) nonzero: hom degree of the underlying
// objects plus X.shift - Y.shift.
std::optional<int> shifted_hom_degree(const GridLattice& L, const ShiftedObject& X,
                                      const ShiftedObject& Y);

// Five independent tests for Hom(P_a, P_b) != 0 in degree zero:
//   oracle       resolution of a mapped into the interval module of b
//   floor_chain  f(a) <= f(b) <= a <= b
//   no_decrement a in [f(b), b] and no nonempty decrement stays inside
//   value_subset a in [f(b), b] and block values of a occur in b
//   interlacing  a <= b, values of a occur in b, and every nonzero block
//                of b overlaps the matching block of a
struct DegreeZeroFacts {
  bool oracle = false;
  bool floor_chain = false;
  bool no_decrement = false;
  bool value_subset = false;
  bool interlacing = false;

  bool all_equal() const {
    return oracle == floor_chain && oracle == no_decrement &&
           oracle == value_subset && oracle == interlacing;
  }
  bool value() const { return oracle; }
};

DegreeZeroFacts degree_zero_facts(const GridLattice& L, const Partition& a,
                                  const Partition& b);

// Normal form of a nonzero morphism P_a -> P_b[d]: first the joint block
// decrement `extension` (ascending 1-based block indices of a, d of them),
// then on gamma = decrement(a, extension) the multiplicity shift p_i is
// applied exponents[i-1] times for i = r, r-1, ..., 1.
struct Factorization {
  std::vector<int> extension;
  std::vector<int> exponents;
};

std::optional<Factorization> canonical_factorization(const GridLattice& L,
                                                     const Partition& a,
                                                     const Partition& b);

// Applies a factorization to `a` and returns the resulting partition;
// throws std::invalid_argument when a step is undefined.
Partition replay_factorization(const GridLattice& L, const Partition& a,
                               const Factorization& f);

// A composable word of single bead moves applied left to right from
// `start`; entry k moves bead k one column left.
struct MorphismWord {
  Configuration start;
  std::vector<int> moves;
};

// Result of straightening a word: sign 0 means the composite morphism is
// zero (some letter is missing from the start configuration); otherwise
// sign is +-1 and `moves` is the same letter set in canonical order.
struct ComposedWord {
  int sign = 0;
  std::vector<int> moves;
};

ComposedWord compose_word(const MorphismWord& w);

// Letters of the canonical word for the nonzero morphism P_a -> P_b[d]:
// letter k appears exactly when the bead count of a in [k, n] exceeds the
// one of b by one.  nullopt when the hom vanishes.
std::optional<std::vector<int>> canonical_letters(const GridLattice& L,
                                                  const Partition& a,
                                                  const Partition& b);

// A chain map between the canonical resolutions of two lattice elements.
struct ResolutionMap {
  std::size_t source = 0, target = 0;
  ModuleComplex src_complex, tgt_complex;
  ChainMap map;
};

// Lift of the degree-|blocks| extension P_alpha -> P_{decrement(alpha)}:
// the summand of the source resolution tagged I with I containing
// `blocks` maps identically onto the same-labelled target summand, with
// sign determined by the relative position of `blocks` inside I.
// Requires is_allowed(alpha, blocks).
ResolutionMap decrement_lift(const GridLattice& L, std::size_t alpha,
                             const std::set<int>& blocks);

// Lift of the single bead move k at alpha.  k > 0 lifts the decrement of
// the block with value k (degree one); k <= 0 lifts the degree-zero
// inclusion along the multiplicity shift (requires k >= -m+2).
ResolutionMap generator_lift(const GridLattice& L, std::size_t alpha, int k);

// Composite lift of a word of moves applied left to right.
ResolutionMap word_lift(const GridLattice& L, std::size_t alpha,
                        const std::vector<int>& moves);

// Chain-level identity x_l x_k = e x_k x_l at alpha, where e is -1 when
// both moves are positive and +1 otherwise: the difference of the two
// composite lifts must be null-homotopic while neither composite is.
bool square_relation_holds(const GridLattice& L, std::size_t alpha, int k, int l);

// Chain-level vanishing of the composite of moves k then k-1 at alpha
// (defined when k-2 carries no bead and k-1 >= -m+2).
bool zero_relation_holds(const GridLattice& L, std::size_t alpha, int k);

// Generator rescalings x_k = sign * u_k of the raw moves u_k:
//   Raw            all signs +1; squares with two positive moves
//                  anticommute, all others commute.
//   Commuting      sign (-1)^{sum of beads in [0, k]}; every square
//                  commutes.
//   Anticommuting  sign (-1)^{sum of beads <= k  +  sum of beads in
//                  [0, n]} for k <= 0 and +1 for k > 0; every square
//                  anticommutes.
enum class SignConvention { Raw, Commuting, Anticommuting };

int generator_sign(const Configuration& R, int k, SignConvention variant);

// Quiver presentation of the endomorphism algebra of the sum of all P_x
// (opposite orientation): vertices are the lattice elements labelled by
// their bead configurations, arrows the bead moves k >= -m+2, and the
// relations all square identities plus the two-step zero composites, with
// coefficients rescaled per the chosen convention.
QuiverPresentation bead_presentation(const GridLattice& L, SignConvention variant);

}  // namespace gridhom
