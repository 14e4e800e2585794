#include "gridhom/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridhom {

Int grid_lattice_cardinality(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative grid dimensions");
  Int r = 1;
  for (int i = 1; i <= m; ++i) {
    r *= n + i;
    r /= i;
  }
  return r;
}

GridLattice::GridLattice(int m, int n, std::uint64_t cap) : m_(m), n_(n) {
  if (m < 1 || n < 0) throw std::invalid_argument("GridLattice: need m >= 1, n >= 0");
  if (grid_lattice_cardinality(m, n) > cap)
    throw std::invalid_argument("GridLattice: element count exceeds cap");

  // Generate all non-decreasing sequences in lexicographic order directly.
  std::vector<int> cur(m, 0);
  while (true) {
    elems_.emplace_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[i];
  }
  // Lexicographic output order is guaranteed by the generation scheme, but
  // it is cheap to double check while building the index.
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i > 0 && !(elems_[i - 1] < elems_[i]))
      throw std::logic_error("GridLattice: enumeration is not lexicographic");
    index_[elems_[i].v] = i;
  }

  const std::size_t N = elems_.size();
  leq_.assign(N * N, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      leq_[a * N + b] = leq(elems_[a], elems_[b]) ? 1 : 0;
}

std::size_t GridLattice::index(const Partition& p) const {
  auto it = index_.find(p.v);
  if (it == index_.end())
    throw std::domain_error("GridLattice: element does not belong to this lattice");
  return it->second;
}

bool GridLattice::contains(const Partition& p) const {
  return index_.find(p.v) != index_.end();
}

ZMat GridLattice::zeta_matrix() const {
  const std::size_t N = elems_.size();
  ZMat Z(N, N);
  for (std::size_t y = 0; y < N; ++y)
    for (std::size_t x = 0; x < N; ++x)
      if (leq_idx(y, x)) Z.at(y, x) = 1;
  return Z;
}

std::vector<std::size_t> GridLattice::interval_elements(const Interval& I) const {
  const std::size_t lo = index(I.lo);
  const std::size_t hi = index(I.hi);
  if (!leq_idx(lo, hi)) throw std::invalid_argument("interval_elements: lo not below hi");
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < elems_.size(); ++x)
    if (leq_idx(lo, x) && leq_idx(x, hi)) out.push_back(x);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> GridLattice::covers() const {
  const std::size_t N = elems_.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t y = 0; y < N; ++y)
    for (std::size_t x = 0; x < N; ++x) {
      if (x == y || !leq_idx(y, x)) continue;
      bool is_cover = true;
      for (std::size_t z = 0; z < N && is_cover; ++z) {
        if (z == x || z == y) continue;
        if (leq_idx(y, z) && leq_idx(z, x)) is_cover = false;
      }
      if (is_cover) out.emplace_back(y, x);
    }
  return out;
}

int interval_hom_dim(const GridLattice& L, const Interval& I1, const Interval& I2) {
  const std::size_t lo1 = L.index(I1.lo), hi1 = L.index(I1.hi);
  const std::size_t lo2 = L.index(I2.lo), hi2 = L.index(I2.hi);
  if (!L.leq_idx(lo1, hi1) || !L.leq_idx(lo2, hi2))
    throw std::invalid_argument("interval_hom_dim: malformed interval");
  // A map of interval modules exists exactly when the target interval
  // hangs below the source one with overlap: lo1 <= lo2 <= hi1 <= hi2.
  return (L.leq_idx(lo1, lo2) && L.leq_idx(lo2, hi1) && L.leq_idx(hi1, hi2)) ? 1 : 0;
}

}  // namespace gridhom
