#include "gridhom/complex.hpp"

#include <stdexcept>

namespace gridhom {

namespace {
const std::vector<Summand> kNoSummands;
}

const std::vector<Summand>& ModuleComplex::term(int d) const {
  return has_degree(d) ? terms[d - lo] : kNoSummands;
}

QMat ModuleComplex::boundary_from(int d) const {
  if (has_degree(d) && d - lo >= 1) return bd[d - lo];
  return QMat(width(d - 1), width(d));
}

void validate(const GridLattice& L, const ModuleComplex& C) {
  if (C.terms.size() != C.bd.size())
    throw std::invalid_argument("complex: terms/boundaries length mismatch");
  for (const auto& t : C.terms)
    for (const Summand& s : t)
      if (s.label >= L.size()) throw std::invalid_argument("complex: label out of range");
  for (std::size_t k = 1; k < C.terms.size(); ++k) {
    const QMat& b = C.bd[k];
    if (b.rows() != C.terms[k - 1].size() || b.cols() != C.terms[k].size())
      throw std::invalid_argument("complex: boundary shape mismatch");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b.at(i, j) != 0 &&
            !L.leq_idx(C.terms[k][j].label, C.terms[k - 1][i].label))
          throw std::invalid_argument("complex: boundary entry without a hom to carry it");
  }
  for (std::size_t k = 2; k < C.terms.size(); ++k)
    if (!(C.bd[k - 1] * C.bd[k]).is_zero())
      throw std::invalid_argument("complex: d*d != 0");
}

ModuleComplex single_term_complex(std::size_t label, Flavor flavor) {
  ModuleComplex C;
  C.flavor = flavor;
  C.lo = 0;
  C.terms = {{Summand{label, 0}}};
  C.bd = {QMat()};
  return C;
}

ModuleComplex shift_complex(const ModuleComplex& C, int s) {
  ModuleComplex D = C;
  D.lo += s;
  if (s % 2 != 0)
    for (std::size_t k = 1; k < D.bd.size(); ++k) D.bd[k] = D.bd[k].scaled(Rat(-1));
  return D;
}

ModuleComplex stupid_truncation(const ModuleComplex& C, int i) {
  if (C.empty() || i <= C.lo) return C;
  ModuleComplex D;
  D.flavor = C.flavor;
  D.lo = i;
  if (i > C.hi()) {
    D.lo = C.lo;
    return D;  // zero complex
  }
  for (int d = i; d <= C.hi(); ++d) {
    D.terms.push_back(C.terms[d - C.lo]);
    D.bd.push_back(d == i ? QMat() : C.bd[d - C.lo]);
  }
  return D;
}

QMat ChainMap::component(const ModuleComplex& C, const ModuleComplex& D, int d) const {
  auto it = comps.find(d);
  if (it != comps.end()) return it->second;
  return QMat(D.width(d - shift), C.width(d));
}

void validate_chain_map(const GridLattice& L, const ModuleComplex& C,
                        const ModuleComplex& D, const ChainMap& f) {
  for (const auto& [d, mat] : f.comps)
    if (mat.rows() != D.width(d - f.shift) || mat.cols() != C.width(d))
      throw std::invalid_argument("chain map: component shape mismatch");
  Rat sign = (f.shift % 2 == 0) ? 1 : -1;
  for (const auto& [d, mat] : f.comps)
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j)
        if (mat.at(i, j) != 0 &&
            !L.leq_idx(C.term(d)[j].label, D.term(d - f.shift)[i].label))
          throw std::invalid_argument("chain map: entry without a hom to carry it");
  int lo = C.lo, hi = C.hi();
  for (int d = lo; d <= hi + 1; ++d) {
    // f_{d-1} d_d = (-1)^shift d_{d-shift} f_d on term(d) -> term(d-1-shift)
    QMat lhs = f.component(C, D, d - 1) * C.boundary_from(d);
    QMat rhs = (D.boundary_from(d - f.shift) * f.component(C, D, d)).scaled(sign);
    if (!(lhs - rhs).is_zero()) throw std::invalid_argument("chain map: does not commute");
  }
}

ChainMap identity_chain_map(const ModuleComplex& C) {
  ChainMap f;
  f.shift = 0;
  for (int d = C.lo; d <= C.hi(); ++d)
    if (C.width(d)) f.comps[d] = QMat::identity(C.width(d));
  return f;
}

ChainMap compose_chain_maps(const ModuleComplex& C, const ModuleComplex& D,
                            const ModuleComplex& E, const ChainMap& f,
                            const ChainMap& g) {
  ChainMap h;
  h.shift = f.shift + g.shift;
  for (int d = C.lo; d <= C.hi(); ++d) {
    if (C.width(d) == 0 || E.width(d - h.shift) == 0) continue;
    QMat comp = g.component(D, E, d - f.shift) * f.component(C, D, d);
    if (!comp.is_zero()) h.comps[d] = std::move(comp);
  }
  return h;
}

ChainMap add_chain_maps(const ModuleComplex& C, const ModuleComplex& D,
                        const ChainMap& f, const ChainMap& g) {
  if (f.shift != g.shift) throw std::invalid_argument("add_chain_maps: shift mismatch");
  ChainMap h;
  h.shift = f.shift;
  for (int d = C.lo; d <= C.hi(); ++d) {
    if (C.width(d) == 0 || D.width(d - h.shift) == 0) continue;
    QMat sum = f.component(C, D, d) + g.component(C, D, d);
    if (!sum.is_zero()) h.comps[d] = std::move(sum);
  }
  return h;
}

ChainMap scale_chain_map(const ChainMap& f, const Rat& c) {
  ChainMap h;
  h.shift = f.shift;
  if (c == Rat(0)) return h;
  for (const auto& [d, mat] : f.comps) h.comps[d] = mat.scaled(c);
  return h;
}

ModuleComplex mapping_cone(const GridLattice& L, const ModuleComplex& C,
                           const ModuleComplex& D, const ChainMap& f) {
  validate_chain_map(L, C, D, f);
  ModuleComplex Ds = shift_complex(D, f.shift);
  // cone_d = C_{d-1} + Ds_d with boundary (c, e) -> (-dc, f(c) + de)
  ModuleComplex K;
  K.flavor = C.flavor;
  if (C.empty() && Ds.empty()) return K;
  int lo = std::min(C.empty() ? Ds.lo : C.lo + 1, Ds.empty() ? C.lo + 1 : Ds.lo);
  int hi = std::max(C.empty() ? Ds.hi() : C.hi() + 1, Ds.empty() ? C.hi() + 1 : Ds.hi());
  K.lo = lo;
  for (int d = lo; d <= hi; ++d) {
    std::vector<Summand> t = C.term(d - 1);
    for (const Summand& s : Ds.term(d)) t.push_back(s);
    K.terms.push_back(t);
  }
  K.bd.assign(K.terms.size(), QMat());
  for (int d = lo + 1; d <= hi; ++d) {
    std::size_t cw = C.width(d - 1), dw = Ds.width(d);
    std::size_t crw = C.width(d - 2), drw = Ds.width(d - 1);
    QMat b(crw + drw, cw + dw);
    QMat bc = C.boundary_from(d - 1);
    for (std::size_t i = 0; i < crw; ++i)
      for (std::size_t j = 0; j < cw; ++j) b.at(i, j) = -bc.at(i, j);
    QMat fc = f.component(C, D, d - 1);  // C_{d-1} -> D_{d-1-shift} = Ds_{d-1}
    for (std::size_t i = 0; i < drw; ++i)
      for (std::size_t j = 0; j < cw; ++j) b.at(crw + i, j) = fc.at(i, j);
    QMat bds = Ds.boundary_from(d);
    for (std::size_t i = 0; i < drw; ++i)
      for (std::size_t j = 0; j < dw; ++j) b.at(crw + i, cw + j) = bds.at(i, j);
    K.bd[d - lo] = std::move(b);
  }
  validate(L, K);
  return K;
}

ModuleComplex apply_nakayama(const ModuleComplex& C) {
  if (C.flavor != Flavor::Projective)
    throw std::invalid_argument("apply_nakayama: expects a projective complex");
  ModuleComplex D = C;
  D.flavor = Flavor::Injective;
  return D;
}

}  // namespace gridhom
