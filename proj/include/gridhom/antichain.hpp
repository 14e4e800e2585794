#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gridhom/complex.hpp"
#include "gridhom/lattice.hpp"

namespace gridhom {

// Antichain sitting below a chosen top element.  Members are element
// indices in strictly increasing (canonical) order; all resolution signs
// downstream depend on that order, so it is part of the data.
struct Antichain {
  std::size_t top = 0;
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }
};

// Throws std::domain_error unless members are sorted, distinct, pairwise
// incomparable, and all below top.
void validate(const GridLattice& L, const Antichain& C);

struct PropertyFlags {
  bool strong = false;
  bool inclusive = false;
  bool intersective = false;
  bool boolean_ = false;
};

// Exhaustive classification over all subset pairs (meets taken inside
// [bottom, top], with the empty meet equal to top):
//   inclusive:    meet(S) <= meet(S') implies S' is a subset of S
//   intersective: meet(S) v meet(S') = meet(S intersect S')
//   strong:       equal-size subsets have incomparable meets
//   boolean_:     inclusive and intersective
// The one-element antichain {top} passes the strong test vacuously but
// fails the literal inclusive quantifier (on S = {}, S' = {top}); since
// the two properties are equivalent everywhere else, the reported
// `inclusive` is patched to match `strong` on that single degenerate
// shape, while `boolean_` keeps the literal reading (the witness table of
// {top} is not injective, so it is genuinely not boolean).
PropertyFlags classify(const GridLattice& L, const Antichain& C);

// Table mask -> element index of meet(S), for all 2^|C| subsets (bit i of
// the mask selects members[i]).  Present iff the table is a bijection
// onto the sublattice generated by the members and top, turning unions
// into meets and intersections into joins; absent otherwise.
std::optional<std::vector<std::size_t>> boolean_witness(const GridLattice& L,
                                                        const Antichain& C);

// The maxima of {x <= I.hi : not (I.lo <= x)}, an antichain below I.hi
// whose module support is exactly [I.lo, I.hi].
Antichain interval_antichain(const GridLattice& L, const Interval& I);

// {x <= top : x is below no member}: the support of the quotient module
// the antichain cuts out of P_top.
std::vector<std::size_t> module_support(const GridLattice& L, const Antichain& C);

// Signed resolution: degree l holds one projective P_{meet(S)} per
// l-subset S (subsets ordered by ascending bitmask) and the boundary
// component P_{meet(S)} -> P_{meet(S \ {i})} carries (-1)^{#{j in S : j <=
// i}}.  Summand tags store the subset masks.  d*d = 0 is checked.
ModuleComplex build_resolution(const GridLattice& L, const Antichain& C);

// The antichain {single-block decrements of alpha}: one member per
// lowerable block of the compact form of alpha.  Boolean below alpha.
Antichain decrement_antichain(const GridLattice& L, std::size_t alpha);

// All antichains (including the empty one) among elements <= top.
std::vector<Antichain> enumerate_antichains(const GridLattice& L, std::size_t top);

}  // namespace gridhom
