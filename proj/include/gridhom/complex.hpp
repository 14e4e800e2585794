#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gridhom/lattice.hpp"
#include "gridhom/matrix.hpp"

namespace gridhom {

// One indecomposable summand of a complex term.  `label` is a lattice
// element index; `tag` is free metadata (resolutions store the subset
// bitmask that produced the summand).
struct Summand {
  std::size_t label = 0;
  unsigned tag = 0;
  bool operator==(const Summand&) const = default;
};

// Whether labels name projective covers (support below the label) or
// injective hulls (support above).  Either way a nonzero map from the
// summand labelled x to the one labelled y exists iff x <= y, so the
// validation rules coincide; the flavor decides how homology is read.
enum class Flavor { Projective, Injective };

// Bounded complex of labelled projectives/injectives with exact rational
// boundary matrices.  terms[k] lives in homological degree lo + k, and
// bd[k] : terms[k] -> terms[k-1] (bd[0] is unused and kept empty).
struct ModuleComplex {
  Flavor flavor = Flavor::Projective;
  int lo = 0;
  std::vector<std::vector<Summand>> terms;
  std::vector<QMat> bd;

  bool empty() const { return terms.empty(); }
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool has_degree(int d) const { return d >= lo && d <= hi(); }
  std::size_t width(int d) const { return has_degree(d) ? terms[d - lo].size() : 0; }
  const std::vector<Summand>& term(int d) const;

  // Boundary leaving degree d (a width(d-1) x width(d) matrix; zero matrix
  // when either end is outside the support).
  QMat boundary_from(int d) const;
};

// Shape, support (entry source-label <= target-label), and d*d = 0.
void validate(const GridLattice& L, const ModuleComplex& C);

// P_x (or I_x) concentrated in degree 0.
ModuleComplex single_term_complex(std::size_t label, Flavor flavor = Flavor::Projective);

// Degree shift: (C[s])_d = C_{d-s}, boundaries scaled by (-1)^s.
ModuleComplex shift_complex(const ModuleComplex& C, int s);

// Stupid truncation: keep degrees >= i, drop the rest and the boundary
// leaving degree i.
ModuleComplex stupid_truncation(const ModuleComplex& C, int i);

// Degreewise map C -> D[shift]: comps[d] sends term(d) of C to term(d -
// shift) of D.  Missing keys mean zero components.
struct ChainMap {
  int shift = 0;
  std::map<int, QMat> comps;

  QMat component(const ModuleComplex& C, const ModuleComplex& D, int d) const;
};

// Shape + support + commutation f d = (-1)^shift d f (throws on failure).
void validate_chain_map(const GridLattice& L, const ModuleComplex& C,
                        const ModuleComplex& D, const ChainMap& f);

// Identity chain map C -> C.
ChainMap identity_chain_map(const ModuleComplex& C);

// f : C -> D[f.shift] followed by g : D -> E[g.shift], as plain degreewise
// composition g_{d - f.shift} f_d; the shifts add and no extra signs enter
// (the commutation factors multiply on their own).
ChainMap compose_chain_maps(const ModuleComplex& C, const ModuleComplex& D,
                            const ModuleComplex& E, const ChainMap& f,
                            const ChainMap& g);

// Pointwise sum of two maps C -> D with the same shift, and scalar multiple.
ChainMap add_chain_maps(const ModuleComplex& C, const ModuleComplex& D,
                        const ChainMap& f, const ChainMap& g);
ChainMap scale_chain_map(const ChainMap& f, const Rat& c);

// Cone of f : C -> D[s], with term C_{d-1} + D[s]_d in degree d and the
// usual block boundary (-d_C, f + d_{D[s]}).
ModuleComplex mapping_cone(const GridLattice& L, const ModuleComplex& C,
                           const ModuleComplex& D, const ChainMap& f);

// Serre/Nakayama shadow on the level of labelled complexes: every P_x is
// renamed I_x, the boundary matrices are kept verbatim.
ModuleComplex apply_nakayama(const ModuleComplex& C);

}  // namespace gridhom
