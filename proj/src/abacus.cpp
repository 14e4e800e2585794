#include "gridhom/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gridhom {

void validate(const CompactPartition& p) {
  if (p.m < 1 || p.n < 0) throw std::invalid_argument("compact partition: bad m,n");
  if (p.coeffs.size() != p.mults.size())
    throw std::invalid_argument("compact partition: coeffs/mults length mismatch");
  int total = p.extra;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i] < 0 || p.coeffs[i] > p.n)
      throw std::invalid_argument("compact partition: coefficient out of range");
    if (i > 0 && p.coeffs[i] <= p.coeffs[i - 1])
      throw std::invalid_argument("compact partition: coefficients not increasing");
    if (p.mults[i] < 1) throw std::invalid_argument("compact partition: multiplicity < 1");
    total += p.mults[i];
  }
  if (p.extra < 0 || total != p.m)
    throw std::invalid_argument("compact partition: multiplicities do not sum to m");
  // Note: an explicit block may share its value with the padding block
  // ((3|3) and (3,3) are different compact partitions with equal values).
}

void validate(const Configuration& c) {
  if (c.m < 1 || c.n < 0) throw std::invalid_argument("configuration: bad m,n");
  if (static_cast<int>(c.beads.size()) != c.m)
    throw std::invalid_argument("configuration: wrong bead count");
  for (std::size_t i = 0; i < c.beads.size(); ++i) {
    if (c.beads[i] < -c.m || c.beads[i] > c.n)
      throw std::invalid_argument("configuration: bead out of range");
    if (i > 0 && c.beads[i] <= c.beads[i - 1])
      throw std::invalid_argument("configuration: beads not sorted distinct");
  }
}

Partition CompactPartition::values() const {
  Partition out;
  out.v.reserve(m);
  if (side == Side::Left)
    for (int k = 0; k < extra; ++k) out.v.push_back(0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (int k = 0; k < mults[i]; ++k) out.v.push_back(coeffs[i]);
  if (side == Side::Right)
    for (int k = 0; k < extra; ++k) out.v.push_back(n);
  return out;
}

std::set<int> CompactPartition::mutable_indices() const {
  std::set<int> s;
  for (int i = 1; i <= blocks(); ++i)
    if (coeffs[i - 1] > 0) s.insert(i);
  return s;
}

std::vector<int> CompactPartition::ending_indices() const {
  std::vector<int> x(coeffs.size());
  int acc = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    acc += mults[i];
    x[i] = acc;
  }
  return x;
}

std::string CompactPartition::to_string() const {
  std::ostringstream os;
  auto block = [&os](int c, int mu) {
    os << c;
    if (mu > 1) os << '^' << mu;
  };
  os << '(';
  if (side == Side::Left && extra > 0) {
    block(0, extra);
    os << '|';
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    block(coeffs[i], mults[i]);
  }
  if (side == Side::Right && extra > 0) {
    os << '|';
    block(n, extra);
  }
  os << ')';
  return os.str();
}

bool Configuration::has(int b) const {
  return std::binary_search(beads.begin(), beads.end(), b);
}

std::string Configuration::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < beads.size(); ++i) {
    if (i) os << ',';
    os << beads[i];
  }
  os << '}';
  return os.str();
}

CompactPartition from_partition(const Partition& p, int n, Side side) {
  CompactPartition out;
  out.m = static_cast<int>(p.v.size());
  out.n = n;
  out.side = side;
  out.extra = 0;
  if (!is_valid_partition(p, out.m, n))
    throw std::invalid_argument("from_partition: not a grid partition");
  for (int v : p.v) {
    if (!out.coeffs.empty() && out.coeffs.back() == v)
      ++out.mults.back();
    else {
      out.coeffs.push_back(v);
      out.mults.push_back(1);
    }
  }
  validate(out);
  return out;
}

Configuration right_config(const CompactPartition& p) {
  validate(p);
  if (p.side != Side::Right) throw std::invalid_argument("right_config: needs right padding side");
  Configuration c{p.m, p.n, {}};
  // Negative beads occupy -1..-m except the blocks' ending positions.
  std::vector<bool> removed(p.m + 1, false);
  for (int x : p.ending_indices()) removed[x] = true;
  for (int k = p.m; k >= 1; --k)
    if (!removed[k]) c.beads.push_back(-k);
  for (int v : p.coeffs) c.beads.push_back(v);
  std::sort(c.beads.begin(), c.beads.end());
  validate(c);
  return c;
}

Configuration left_config(const CompactPartition& p) {
  validate(p);
  if (p.side != Side::Left) throw std::invalid_argument("left_config: needs left padding side");
  Configuration c{p.m, p.n, {}};
  // Starting position of block i inside the full value sequence.
  std::vector<bool> removed(p.m + 1, false);
  int start = p.extra + 1;
  for (std::size_t i = 0; i < p.mults.size(); ++i) {
    removed[start] = true;
    start += p.mults[i];
  }
  for (int k = p.m; k >= 1; --k)
    if (!removed[k]) c.beads.push_back(-k);
  for (int v : p.coeffs) c.beads.push_back(v);
  std::sort(c.beads.begin(), c.beads.end());
  validate(c);
  return c;
}

namespace {

// Ascending positions in 1..m that carry no negative bead.
std::vector<int> negative_gaps(const Configuration& c) {
  std::vector<int> gaps;
  for (int k = 1; k <= c.m; ++k)
    if (!c.has(-k)) gaps.push_back(k);
  return gaps;
}

std::vector<int> positive_beads(const Configuration& c) {
  std::vector<int> pos;
  for (int b : c.beads)
    if (b >= 0) pos.push_back(b);
  return pos;
}

}  // namespace

CompactPartition read_right(const Configuration& c) {
  validate(c);
  CompactPartition p;
  p.m = c.m;
  p.n = c.n;
  p.side = Side::Right;
  p.coeffs = positive_beads(c);
  std::vector<int> ends = negative_gaps(c);
  if (ends.size() != p.coeffs.size())
    throw std::logic_error("read_right: gap/value count mismatch");
  int prev = 0;
  for (int x : ends) {
    p.mults.push_back(x - prev);
    prev = x;
  }
  p.extra = c.m - prev;
  validate(p);
  return p;
}

CompactPartition read_left(const Configuration& c) {
  validate(c);
  CompactPartition p;
  p.m = c.m;
  p.n = c.n;
  p.side = Side::Left;
  p.coeffs = positive_beads(c);
  std::vector<int> starts = negative_gaps(c);
  if (starts.size() != p.coeffs.size())
    throw std::logic_error("read_left: gap/value count mismatch");
  if (starts.empty()) {
    p.extra = c.m;
  } else {
    p.extra = starts.front() - 1;
    for (std::size_t i = 0; i + 1 < starts.size(); ++i)
      p.mults.push_back(starts[i + 1] - starts[i]);
    p.mults.push_back(c.m + 1 - starts.back());
  }
  validate(p);
  return p;
}

CompactPartition reencode_left(const CompactPartition& p) {
  return read_left(right_config(p));
}

CompactPartition reencode_right(const CompactPartition& p) {
  return read_right(left_config(p));
}

Partition support_floor(const Partition& p, int n) {
  return reencode_left(from_partition(p, n, Side::Right)).values();
}

CompactPartition serre_step(const CompactPartition& p) {
  Configuration c = right_config(p);
  for (int& b : c.beads) b = (b == -c.m) ? c.n : b - 1;
  std::sort(c.beads.begin(), c.beads.end());
  return read_right(c);
}

CompactPartition serre_floor(const CompactPartition& p) {
  return reencode_left(serre_step(p));
}

CompactPartition decrement(const CompactPartition& p, const std::set<int>& J) {
  validate(p);
  std::set<int> mut = p.mutable_indices();
  for (int i : J)
    if (!mut.count(i)) throw std::invalid_argument("decrement: index not lowerable");
  CompactPartition out = p;
  for (int i : J) --out.coeffs[i - 1];
  // Compact again: a lowered block may land on its left neighbour.
  std::vector<int> cs, ms;
  for (int i = 0; i < out.blocks(); ++i) {
    if (!cs.empty() && cs.back() == out.coeffs[i])
      ms.back() += out.mults[i];
    else {
      cs.push_back(out.coeffs[i]);
      ms.push_back(out.mults[i]);
    }
  }
  out.coeffs = std::move(cs);
  out.mults = std::move(ms);
  validate(out);
  return out;
}

bool shift_multiplicity_defined(const CompactPartition& p, int i) {
  int r = p.blocks();
  if (i >= 1 && i <= r - 1 && p.mults[i - 1] > 1) return true;
  if (i == 1 && r >= 1 && p.mults[0] == 1 && p.coeffs[0] == 0) return true;
  return false;
}

CompactPartition shift_multiplicity(const CompactPartition& p, int i) {
  validate(p);
  if (!shift_multiplicity_defined(p, i))
    throw std::invalid_argument("shift_multiplicity: undefined at this index");
  CompactPartition out = p;
  if (p.mults[i - 1] > 1 && i <= p.blocks() - 1) {
    --out.mults[i - 1];
    ++out.mults[i];
  } else {
    // Lone zero block merges into its right neighbour (later blocks slide
    // down one index); with no neighbour the unit joins the padding.
    out.coeffs.erase(out.coeffs.begin());
    out.mults.erase(out.mults.begin());
    if (!out.mults.empty())
      ++out.mults.front();
    else
      ++out.extra;
  }
  validate(out);
  return out;
}

bool is_allowed(const CompactPartition& p, const std::set<int>& J) {
  std::set<int> mut = p.mutable_indices();
  for (int i : J)
    if (!mut.count(i)) throw std::invalid_argument("is_allowed: index not lowerable");
  for (int i : J) {
    if (mut.count(i - 1) && !J.count(i - 1)) {
      if (p.coeffs[i - 1] - p.coeffs[i - 2] <= 1) return false;
    }
  }
  return true;
}

bool move_defined(const Configuration& c, int k) {
  return c.has(k) && k - 1 >= -c.m && !c.has(k - 1);
}

Configuration move_bead(const Configuration& c, int k) {
  validate(c);
  if (!move_defined(c, k)) throw std::invalid_argument("move_bead: move undefined");
  Configuration out = c;
  for (int& b : out.beads)
    if (b == k) b = k - 1;
  std::sort(out.beads.begin(), out.beads.end());
  validate(out);
  return out;
}

std::vector<int> movable_beads(const Configuration& c) {
  std::vector<int> out;
  for (int b : c.beads)
    if (move_defined(c, b)) out.push_back(b);
  return out;
}

int positive_weight_upto(const Configuration& c, int l) {
  int s = 0;
  for (int b : c.beads)
    if (b >= 0 && b <= l) s += b;
  return s;
}

int negative_weight_upto(const Configuration& c, int k) {
  int s = 0;
  for (int b : c.beads)
    if (b <= k) s += b;
  return s;
}

int coefficient_sum(const CompactPartition& p) {
  return std::accumulate(p.coeffs.begin(), p.coeffs.end(), 0);
}

int positive_bead_count(const Configuration& c) {
  int k = 0;
  for (int b : c.beads)
    if (b > 0) ++k;
  return k;
}

std::vector<std::pair<Configuration, int>> orbit_trace(const CompactPartition& p) {
  std::vector<std::pair<Configuration, int>> out;
  CompactPartition cur = p;
  for (int step = 0; step < p.m + p.n + 1; ++step) {
    cur = serre_step(cur);
    Configuration c = right_config(cur);
    out.emplace_back(c, positive_bead_count(c));
  }
  return out;
}

std::string abacus_art(const Configuration& c) {
  std::ostringstream top, bot;
  for (int col = -c.m; col <= c.n; ++col) {
    if (col == 0) {
      top << " |";
      bot << " |";
    }
    std::string label = std::to_string(col);
    top << ' ' << label;
    bot << ' ' << std::string(label.size() - 1, ' ') << (c.has(col) ? 'o' : '.');
  }
  return top.str() + "\n" + bot.str() + "\n";
}

}  // namespace gridhom
