#include "gridhom/homalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gridhom {

void validate(const CochainOfSpaces& K) {
  if (K.dims.empty()) {
    if (!K.delta.empty()) throw std::invalid_argument("cochain: stray coboundaries");
    return;
  }
  if (K.delta.size() + 1 != K.dims.size())
    throw std::invalid_argument("cochain: delta count mismatch");
  for (std::size_t k = 0; k < K.delta.size(); ++k)
    if (K.delta[k].rows() != static_cast<std::size_t>(K.dims[k + 1]) ||
        K.delta[k].cols() != static_cast<std::size_t>(K.dims[k]))
      throw std::invalid_argument("cochain: delta shape mismatch");
  for (std::size_t k = 0; k + 1 < K.delta.size(); ++k)
    if (!(K.delta[k + 1] * K.delta[k]).is_zero())
      throw std::invalid_argument("cochain: delta*delta != 0");
}

CochainOfSpaces total_hom(const GridLattice& L, const ModuleComplex& C, const Interval& I) {
  if (C.flavor != Flavor::Projective)
    throw std::invalid_argument("total_hom: expects a projective complex");
  std::size_t lo = L.index(I.lo), hi = L.index(I.hi);
  if (!L.leq_idx(lo, hi)) throw std::invalid_argument("total_hom: empty interval");
  auto in_I = [&](std::size_t x) { return L.leq_idx(lo, x) && L.leq_idx(x, hi); };

  CochainOfSpaces K;
  K.lo = C.lo;
  // kept[d - C.lo] = indices of degree-d summands with label in I
  std::vector<std::vector<std::size_t>> kept(C.terms.size());
  for (std::size_t k = 0; k < C.terms.size(); ++k) {
    for (std::size_t j = 0; j < C.terms[k].size(); ++j)
      if (in_I(C.terms[k][j].label)) kept[k].push_back(j);
    K.dims.push_back(static_cast<int>(kept[k].size()));
  }
  for (std::size_t k = 0; k + 1 < C.terms.size(); ++k) {
    // delta^{lo+k}: K^{lo+k} -> K^{lo+k+1} is the boundary C_{k+1} -> C_k
    // transposed and restricted to kept labels.
    const QMat& b = C.bd[k + 1];
    QMat dmat(kept[k + 1].size(), kept[k].size());
    for (std::size_t r = 0; r < kept[k + 1].size(); ++r)
      for (std::size_t c = 0; c < kept[k].size(); ++c)
        dmat.at(r, c) = b.at(kept[k][c], kept[k + 1][r]);
    K.delta.push_back(std::move(dmat));
  }
  if (K.dims.empty()) K.delta.clear();
  validate(K);
  return K;
}

std::map<int, int> cohomology_dims(const CochainOfSpaces& K) {
  std::map<int, int> H;
  for (std::size_t k = 0; k < K.dims.size(); ++k) {
    std::size_t dim = K.dims[k];
    std::size_t rank_out = (k < K.delta.size()) ? K.delta[k].rank() : 0;
    std::size_t rank_in = (k > 0) ? K.delta[k - 1].rank() : 0;
    int h = static_cast<int>(dim - rank_out - rank_in);
    if (h < 0) throw std::logic_error("cohomology: negative dimension");
    if (h > 0) H[K.lo + static_cast<int>(k)] = h;
  }
  return H;
}

std::map<int, int> derived_hom(const GridLattice& L, const ModuleComplex& C,
                               const Interval& I, int p_lo, int p_hi) {
  std::map<int, int> all = cohomology_dims(total_hom(L, C, I));
  std::map<int, int> out;
  for (auto [p, d] : all)
    if (p >= p_lo && p <= p_hi) out[p] = d;
  return out;
}

std::optional<HomPrediction> predicted_hom(const GridLattice& L, const Antichain& C,
                                           const Interval& I) {
  PropertyFlags F = classify(L, C);
  if (!F.boolean_)
    throw std::invalid_argument("predicted_hom: antichain is not boolean");
  std::size_t lo = L.index(I.lo), hi = L.index(I.hi);
  std::size_t r = C.members.size();
  // meets per subset, as in the resolution
  std::vector<std::size_t> mt(std::size_t{1} << r);
  mt[0] = C.top;
  for (unsigned mask = 1; mask < mt.size(); ++mask) {
    unsigned low = mask & (mask - 1);
    int bit = std::countr_zero(mask);
    mt[mask] = low == 0 ? C.members[bit]
                        : L.index(meet(L.at(mt[low]), L.at(C.members[bit])));
  }
  std::vector<unsigned> E;
  for (unsigned mask = 0; mask < mt.size(); ++mask)
    if (L.leq_idx(lo, mt[mask]) && L.leq_idx(mt[mask], hi)) E.push_back(mask);
  if (E.empty()) return std::nullopt;
  unsigned s_min = ~0u, s_max = 0;
  for (unsigned mask : E) {
    s_min &= mask;
    s_max |= mask;
  }
  // For boolean antichains E must be the full mask interval [s_min, s_max].
  if (E.size() != (std::size_t{1} << std::popcount(s_max & ~s_min)))
    throw std::logic_error("predicted_hom: E is not an interval");
  for (unsigned mask : E)
    if ((mask & s_min) != s_min || (mask & ~s_max) != 0)
      throw std::logic_error("predicted_hom: E is not an interval");
  if (E.size() != 1) return std::nullopt;
  return HomPrediction{E[0], std::popcount(E[0])};
}

namespace {

// Positions of the label-allowed entries of a degreewise map C -> D[s]
// with degree offset `off` (off = 0 for chain maps, +1 for homotopies).
struct EntryIndex {
  // one entry per unknown: (source degree d, row in D-term, col in C-term)
  std::vector<std::tuple<int, std::size_t, std::size_t>> entries;
  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> pos;

  void build(const GridLattice& L, const ModuleComplex& C, const ModuleComplex& D,
             int shift, int off) {
    for (int d = C.lo; d <= C.hi(); ++d) {
      int e = d - shift + off;
      if (!D.has_degree(e)) continue;
      for (std::size_t i = 0; i < D.width(e); ++i)
        for (std::size_t j = 0; j < C.width(d); ++j)
          if (L.leq_idx(C.term(d)[j].label, D.term(e)[i].label)) {
            pos[{d, i, j}] = entries.size();
            entries.emplace_back(d, i, j);
          }
    }
  }
};

}  // namespace

// Shared core: dimension of the chain-map solution space and rank of the
// homotopy operator; optionally also solve dh + hd = f for a given f.
static void homotopy_systems(const GridLattice& L, const ModuleComplex& C,
                             const ModuleComplex& D, int shift, int* chain_dim,
                             int* homotopy_rank, const ChainMap* f, bool* solvable) {
  Rat sign = (shift % 2 == 0) ? 1 : -1;
  EntryIndex F;  // chain-map unknowns
  F.build(L, C, D, shift, 0);
  EntryIndex H;  // homotopy unknowns
  H.build(L, C, D, shift, 1);

  if (chain_dim) {
    // commutation: f_{d-1} dC_d - sign * dD_{d-shift} f_d = 0
    std::vector<std::vector<Rat>> rows;
    for (int d = C.lo; d <= C.hi() + 1; ++d) {
      QMat bc = C.boundary_from(d);
      QMat bd_ = D.boundary_from(d - shift);
      std::size_t nr = D.width(d - 1 - shift), nc = C.width(d);
      for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
          std::vector<Rat> row(F.entries.size());
          bool nonzero = false;
          // f_{d-1}(i, k) * bc(k, j)
          for (std::size_t k = 0; k < C.width(d - 1); ++k)
            if (bc.at(k, j) != 0) {
              auto it = F.pos.find({d - 1, i, k});
              if (it != F.pos.end()) {
                row[it->second] += bc.at(k, j);
                nonzero = true;
              }
            }
          // -sign * bd_(i, k) * f_d(k, j)
          for (std::size_t k = 0; k < D.width(d - shift); ++k)
            if (bd_.at(i, k) != 0) {
              auto it = F.pos.find({d, k, j});
              if (it != F.pos.end()) {
                row[it->second] -= sign * bd_.at(i, k);
                nonzero = true;
              }
            }
          if (nonzero) rows.push_back(std::move(row));
        }
    }
    QMat A(rows.size(), F.entries.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < F.entries.size(); ++j) A.at(i, j) = rows[i][j];
    *chain_dim = static_cast<int>(F.entries.size() - A.rank());
  }

  // homotopy operator: h -> sign * dD_{d+1-shift} h_d + h_{d-1} dC_d,
  // expressed in the F coordinate system.
  QMat Op(F.entries.size(), H.entries.size());
  for (std::size_t col = 0; col < H.entries.size(); ++col) {
    auto [d, i, j] = H.entries[col];
    // term 1: contributes to f_d at (i', j) via dD(i', i), i' in D_{d-shift}
    QMat bd1 = D.boundary_from(d + 1 - shift);
    for (std::size_t i2 = 0; i2 < D.width(d - shift); ++i2)
      if (bd1.at(i2, i) != 0) {
        auto it = F.pos.find({d, i2, j});
        // composites of allowed entries are allowed (order transitivity)
        if (it == F.pos.end())
          throw std::logic_error("homotopy image outside allowed entries");
        Op.at(it->second, col) += sign * bd1.at(i2, i);
      }
    // term 2: h at source degree d contributes to f_{d+1} at (i, j') via dC(j, j')
    QMat bc = C.boundary_from(d + 1);
    for (std::size_t j2 = 0; j2 < C.width(d + 1); ++j2)
      if (bc.at(j, j2) != 0) {
        auto it = F.pos.find({d + 1, i, j2});
        if (it != F.pos.end()) Op.at(it->second, col) += bc.at(j, j2);
        else
          throw std::logic_error("homotopy image outside allowed entries");
      }
  }
  if (homotopy_rank) *homotopy_rank = static_cast<int>(Op.rank());
  if (f && solvable) {
    std::vector<Rat> rhs(F.entries.size());
    for (std::size_t k = 0; k < F.entries.size(); ++k) {
      auto [d, i, j] = F.entries[k];
      auto it = f->comps.find(d);
      rhs[k] = (it == f->comps.end()) ? Rat(0) : it->second.at(i, j);
    }
    *solvable = Op.solve(rhs).has_value();
  }
}

int homotopy_hom_dim(const GridLattice& L, const ModuleComplex& C,
                     const ModuleComplex& D, int shift) {
  validate(L, C);
  validate(L, D);
  int chain_dim = 0, h_rank = 0;
  homotopy_systems(L, C, D, shift, &chain_dim, &h_rank, nullptr, nullptr);
  if (chain_dim < h_rank) throw std::logic_error("homotopy rank exceeds chain-map space");
  return chain_dim - h_rank;
}

bool is_null_homotopic(const GridLattice& L, const ModuleComplex& C,
                       const ModuleComplex& D, const ChainMap& f) {
  validate_chain_map(L, C, D, f);
  // Entries of f at label-disallowed positions are rejected by validation,
  // so f is fully described by its coordinates in the allowed-entry basis.
  bool ok = false;
  homotopy_systems(L, C, D, f.shift, nullptr, nullptr, &f, &ok);
  return ok;
}

namespace {

std::map<int, std::vector<std::pair<std::size_t, int>>> evaluated_homology(
    const GridLattice& L, const ModuleComplex& C, bool at_or_above) {
  std::map<int, std::vector<std::pair<std::size_t, int>>> out;
  for (std::size_t y = 0; y < L.size(); ++y) {
    // columns kept at y, per degree
    std::vector<std::vector<std::size_t>> kept(C.terms.size());
    for (std::size_t k = 0; k < C.terms.size(); ++k)
      for (std::size_t j = 0; j < C.terms[k].size(); ++j) {
        std::size_t x = C.terms[k][j].label;
        bool present = at_or_above ? L.leq_idx(x, y) : L.leq_idx(y, x);
        if (present) kept[k].push_back(j);
      }
    for (std::size_t k = 0; k < C.terms.size(); ++k) {
      // H_d = ker(bd_k restricted) / im(bd_{k+1} restricted)
      std::size_t dim = kept[k].size();
      if (dim == 0) continue;
      std::size_t rank_out = 0, rank_in = 0;
      if (k >= 1) {
        QMat b(kept[k - 1].size(), kept[k].size());
        for (std::size_t i = 0; i < kept[k - 1].size(); ++i)
          for (std::size_t j = 0; j < kept[k].size(); ++j)
            b.at(i, j) = C.bd[k].at(kept[k - 1][i], kept[k][j]);
        rank_out = b.rank();
      }
      if (k + 1 < C.terms.size()) {
        QMat b(kept[k].size(), kept[k + 1].size());
        for (std::size_t i = 0; i < kept[k].size(); ++i)
          for (std::size_t j = 0; j < kept[k + 1].size(); ++j)
            b.at(i, j) = C.bd[k + 1].at(kept[k][i], kept[k + 1][j]);
        rank_in = b.rank();
      }
      int h = static_cast<int>(dim - rank_out - rank_in);
      if (h < 0) throw std::logic_error("evaluated homology: negative dimension");
      if (h > 0) out[C.lo + static_cast<int>(k)].push_back({y, h});
    }
  }
  return out;
}

}  // namespace

std::map<int, std::vector<std::pair<std::size_t, int>>> injective_homology(
    const GridLattice& L, const ModuleComplex& C) {
  if (C.flavor != Flavor::Injective)
    throw std::invalid_argument("injective_homology: expects an injective complex");
  return evaluated_homology(L, C, /*at_or_above=*/true);
}

std::map<int, std::vector<std::pair<std::size_t, int>>> projective_homology(
    const GridLattice& L, const ModuleComplex& C) {
  if (C.flavor != Flavor::Projective)
    throw std::invalid_argument("projective_homology: expects a projective complex");
  return evaluated_homology(L, C, /*at_or_above=*/false);
}

}  // namespace gridhom
