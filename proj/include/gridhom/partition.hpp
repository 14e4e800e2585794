#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gridhom {

// A point of the grid lattice: a non-decreasing sequence of m values in
// [0, n].  Equivalently the staircase profile of an order ideal of the
// m-by-n grid poset.  The componentwise order on these sequences is the
// inclusion order on ideals.
struct Partition {
  std::vector<int> v;

  Partition() = default;
  explicit Partition(std::vector<int> values) : v(std::move(values)) {}

  std::size_t size() const { return v.size(); }
  int operator[](std::size_t i) const { return v[i]; }

  bool operator==(const Partition&) const = default;
  // Lexicographic; this is the canonical element order used everywhere.
  auto operator<=>(const Partition& o) const { return v <=> o.v; }

  std::string to_string() const;  // "0,2,3"
};

// Componentwise comparisons; sizes must agree.
bool leq(const Partition& a, const Partition& b);
Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);

// Validation helper: non-decreasing, length m, values in [0, n].
bool is_valid_partition(const Partition& p, int m, int n);

Partition parse_partition(const std::string& csv);

}  // namespace gridhom
