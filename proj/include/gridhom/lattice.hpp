#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gridhom/matrix.hpp"
#include "gridhom/partition.hpp"

namespace gridhom {

// Closed interval [lo, hi] of lattice elements; requires lo <= hi.
struct Interval {
  Partition lo, hi;
};

// The distributive lattice of order ideals of the m-by-n grid, enumerated
// once and indexed in lexicographic order.  All structural queries
// (comparability, meet, join, zeta matrix) are answered from this table.
class GridLattice {
 public:
  // Enumerates all binom(m+n, m) elements; refuses to build anything
  // larger than `cap` elements.
  GridLattice(int m, int n, std::uint64_t cap = 1000000);

  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t size() const { return elems_.size(); }

  const Partition& at(std::size_t i) const { return elems_[i]; }
  const std::vector<Partition>& elements() const { return elems_; }

  // Index of an element; throws std::domain_error if it does not belong.
  std::size_t index(const Partition& p) const;
  bool contains(const Partition& p) const;

  bool leq_idx(std::size_t a, std::size_t b) const { return leq_[a * elems_.size() + b]; }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elems_.size() - 1; }

  // Cartan/zeta matrix: at(y, x) == 1 iff y <= x.  Columns are the
  // support vectors of the indecomposable projectives of the incidence
  // algebra; upper unitriangular in the lexicographic indexing.
  ZMat zeta_matrix() const;

  // Indices of all elements in [I.lo, I.hi]; throws if I.lo > I.hi or
  // either endpoint is foreign.
  std::vector<std::size_t> interval_elements(const Interval& I) const;

  // Covering pairs (y, x) with y covered by x.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  int m_, n_;
  std::vector<Partition> elems_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<char> leq_;  // row-major comparability table
};

// Dimension of the hom space between the interval modules on I1 and I2
// over the incidence algebra: 1 when I1.lo <= I2.lo <= I1.hi <= I2.hi,
// else 0.
int interval_hom_dim(const GridLattice& L, const Interval& I1, const Interval& I2);

// Number of elements of the full lattice without building it (safe for
// sanity checks): binom(m+n, m).
Int grid_lattice_cardinality(int m, int n);

}  // namespace gridhom
