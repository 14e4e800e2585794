#pragma once

#include <set>
#include <string>
#include <vector>

#include "gridhom/partition.hpp"

namespace gridhom {

// Which side of a compact partition carries the padding block.
//  Right: padding is extra copies of n appended after the explicit blocks.
//  Left:  padding is extra copies of 0 prepended before them.
// A compact partition with extra == 0 is called plain; each plain
// partition has a representative on either side and both expand to the
// same value sequence.
enum class Side { Right, Left };

// Compact block form of a grid partition, plus an optional padding block.
// coeffs are strictly increasing values in [0, n]; mults are positive and
// sum(mults) + extra == m.
struct CompactPartition {
  int m = 0, n = 0;
  std::vector<int> coeffs;
  std::vector<int> mults;
  Side side = Side::Right;
  int extra = 0;

  bool operator==(const CompactPartition&) const = default;

  int blocks() const { return static_cast<int>(coeffs.size()); }
  bool plain() const { return extra == 0; }

  // Full non-decreasing value sequence of length m, padding included.
  Partition values() const;

  // 1-based indices of the blocks whose value can be lowered, i.e. the
  // blocks with nonzero value.  Always a contiguous tail {eps..r} where
  // eps is 2 when the first block holds value 0 and 1 otherwise.
  std::set<int> mutable_indices() const;

  // x_i = mults[0] + ... + mults[i-1] for 1-based i (position where block
  // i ends inside the explicit part; Left padding does not shift these).
  std::vector<int> ending_indices() const;

  std::string to_string() const;  // e.g. "(0,1^2,3|5^2)"
};

// Bead configuration: an m-subset of {-m, ..., n}, kept sorted.
struct Configuration {
  int m = 0, n = 0;
  std::vector<int> beads;

  bool operator==(const Configuration&) const = default;
  bool operator<(const Configuration& o) const { return beads < o.beads; }
  bool has(int b) const;
  std::string to_string() const;  // "{-4,0,2,3,7}"
};

void validate(const CompactPartition& p);
void validate(const Configuration& c);

// Compress a plain partition into block form with the requested padding side.
CompactPartition from_partition(const Partition& p, int n, Side side = Side::Right);

// Bead encodings.  The positive half of the configuration always carries
// the distinct block values; the negative half encodes the multiplicities,
// either through the blocks' ending positions (right encoding) or their
// starting positions (left encoding).  Each is a bijection between
// same-side compact partitions and configurations.
Configuration right_config(const CompactPartition& p);   // requires side Right
Configuration left_config(const CompactPartition& p);    // requires side Left
CompactPartition read_right(const Configuration& c);
CompactPartition read_left(const Configuration& c);

// Re-read the configuration of a right compact partition through the left
// encoding.  The plain partition of the result is the least element whose
// projective resolves to the same interval: [floor, p] is the support of
// the interval module attached to p.
CompactPartition reencode_left(const CompactPartition& p);
// Inverse of reencode_left.
CompactPartition reencode_right(const CompactPartition& p);

// Plain partition of reencode_left(p): the floor of p's support interval.
Partition support_floor(const Partition& p, int n);

// One step of the combinatorial Serre shadow: cyclically shift every bead
// one column to the left (wrapping -m to n) and read the result as a right
// compact partition.  Applying it m+n+1 times is the identity.
CompactPartition serre_step(const CompactPartition& p);

// Left enhancement of the Serre image; equals reencode_left(serre_step(p)).
CompactPartition serre_floor(const CompactPartition& p);

// Lower the value of every block listed in J (1-based block indices,
// subset of mutable_indices) by one; padding untouched; result compacted.
CompactPartition decrement(const CompactPartition& p, const std::set<int>& J);

// Move one unit of multiplicity from block i to block i+1.  Defined when
// 1 <= i <= r-1 and mults[i-1] > 1, and additionally in the degenerate
// shape i == 1, mults[0] == 1, coeffs[0] == 0, where the zero block is
// dropped entirely (all later blocks shift down one index).
CompactPartition shift_multiplicity(const CompactPartition& p, int i);
bool shift_multiplicity_defined(const CompactPartition& p, int i);

// Can all blocks in J be lowered at once while the resolution-theoretic
// extension stays nonzero?  J must avoid squeezing a block onto its left
// neighbour: for i in J with i-1 mutable and not in J, require
// coeffs[i-1] - coeffs[i-2] > 1.
bool is_allowed(const CompactPartition& p, const std::set<int>& J);

// Single bead moves on configurations: bead k slides one column left.
bool move_defined(const Configuration& c, int k);
Configuration move_bead(const Configuration& c, int k);
std::vector<int> movable_beads(const Configuration& c);

// Sign statistics on configurations.
// positive_weight_upto: sum of beads b with 0 <= b <= l.
// negative_weight_upto: sum of beads b with b <= k (use k <= 0).
int positive_weight_upto(const Configuration& c, int l);
int negative_weight_upto(const Configuration& c, int k);
// Sum of all distinct block values; for a plain partition this equals the
// sum of the nonnegative beads of its right configuration.
int coefficient_sum(const CompactPartition& p);

// Number of strictly positive beads (the count of lowerable blocks).
int positive_bead_count(const Configuration& c);

// Trace of m+n+1 Serre steps starting from p (side Right).  Entry i holds
// the configuration after i+1 steps and its positive bead count; the last
// configuration equals the starting one and the counts sum to m*n.
std::vector<std::pair<Configuration, int>> orbit_trace(const CompactPartition& p);

// Two-row text picture of an abacus: column numbers above, beads below,
// with the bar drawn between columns -1 and 0.
std::string abacus_art(const Configuration& c);

}  // namespace gridhom
