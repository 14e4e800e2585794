#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gridhom/antichain.hpp"
#include "gridhom/complex.hpp"

namespace gridhom {

// Cochain complex of plain vector spaces: dims[k] is the dimension in
// cohomological degree lo + k and delta[k] maps degree lo+k to lo+k+1
// (delta has one entry per consecutive pair, so delta.size() + 1 ==
// dims.size() whenever dims is nonempty).
struct CochainOfSpaces {
  int lo = 0;
  std::vector<int> dims;
  std::vector<QMat> delta;
};

void validate(const CochainOfSpaces& K);

// Hom complex from a projective complex into the interval module of I:
// degree d gets one basis vector per degree-d summand whose label lies in
// I, and the coboundary copies the transposed boundary coefficients at
// positions where both endpoint labels lie in I.
CochainOfSpaces total_hom(const GridLattice& L, const ModuleComplex& C, const Interval& I);

// Exact cohomology dimensions per degree (only nonzero entries reported).
std::map<int, int> cohomology_dims(const CochainOfSpaces& K);

// Hom_{D}(C, I[p]) for p in [p_lo, p_hi]: cohomology of total_hom.
std::map<int, int> derived_hom(const GridLattice& L, const ModuleComplex& C,
                               const Interval& I, int p_lo, int p_hi);

// Combinatorial prediction of the derived hom for a boolean antichain:
// E = {S subset of C : meet(S) in I} is an interval of the subset lattice;
// the hom is nonzero (and then one dimensional) iff E is a singleton, in
// degree |S|.  Throws unless the antichain is boolean.
struct HomPrediction {
  unsigned subset_mask = 0;
  int degree = 0;
};
std::optional<HomPrediction> predicted_hom(const GridLattice& L, const Antichain& C,
                                           const Interval& I);

// dim of {chain maps C -> D[shift]} modulo null-homotopic ones, both
// solved as exact rational linear systems over the label-allowed entries.
int homotopy_hom_dim(const GridLattice& L, const ModuleComplex& C,
                     const ModuleComplex& D, int shift);

// Is f : C -> D[f.shift] chain homotopic to zero?  Validates f first.
bool is_null_homotopic(const GridLattice& L, const ModuleComplex& C,
                       const ModuleComplex& D, const ChainMap& f);

// Value-wise homology of an injective-labelled complex: evaluate at every
// lattice element y (the summand labelled x contributes a line iff x <= y)
// and take homology.  Result: degree -> list of (element, dim) with
// dim > 0.
std::map<int, std::vector<std::pair<std::size_t, int>>> injective_homology(
    const GridLattice& L, const ModuleComplex& C);

// Same evaluation for projective-labelled complexes (the summand labelled
// x contributes at y iff y <= x); used as a second route to supports.
std::map<int, std::vector<std::pair<std::size_t, int>>> projective_homology(
    const GridLattice& L, const ModuleComplex& C);

}  // namespace gridhom
