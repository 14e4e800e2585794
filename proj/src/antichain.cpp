#include "gridhom/antichain.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "gridhom/abacus.hpp"

namespace gridhom {

void validate(const GridLattice& L, const Antichain& C) {
  if (C.top >= L.size()) throw std::domain_error("antichain: top out of range");
  for (std::size_t i = 0; i < C.members.size(); ++i) {
    std::size_t x = C.members[i];
    if (x >= L.size()) throw std::domain_error("antichain: member out of range");
    if (i > 0 && C.members[i - 1] >= x)
      throw std::domain_error("antichain: members not in canonical order");
    if (!L.leq_idx(x, C.top)) throw std::domain_error("antichain: member not below top");
    for (std::size_t j = 0; j < i; ++j)
      if (L.leq_idx(C.members[j], x) || L.leq_idx(x, C.members[j]))
        throw std::domain_error("antichain: members comparable");
  }
}

namespace {

// meet(S) for every subset mask, with meet of the empty set = top.
std::vector<std::size_t> subset_meets(const GridLattice& L, const Antichain& C) {
  std::size_t r = C.members.size();
  std::vector<std::size_t> mt(std::size_t{1} << r);
  mt[0] = C.top;
  for (unsigned mask = 1; mask < mt.size(); ++mask) {
    unsigned low = mask & (mask - 1);
    int bit = std::countr_zero(mask);
    if (low == 0)
      mt[mask] = C.members[bit];
    else
      mt[mask] = L.index(meet(L.at(mt[low]), L.at(C.members[bit])));
    if (!L.leq_idx(mt[mask], C.top))
      throw std::logic_error("antichain: meet escaped [bottom, top]");
  }
  return mt;
}

}  // namespace

PropertyFlags classify(const GridLattice& L, const Antichain& C) {
  validate(L, C);
  std::vector<std::size_t> mt = subset_meets(L, C);
  std::size_t nsub = mt.size();
  PropertyFlags F;
  bool literal_inclusive = true;
  F.strong = true;
  F.intersective = true;
  for (unsigned a = 0; a < nsub; ++a)
    for (unsigned b = 0; b < nsub; ++b) {
      bool le = L.leq_idx(mt[a], mt[b]);
      if (le && (a & b) != b) literal_inclusive = false;
      if (le && std::popcount(a) == std::popcount(b) && a != b) F.strong = false;
      std::size_t jn = L.index(join(L.at(mt[a]), L.at(mt[b])));
      if (jn != mt[a & b]) F.intersective = false;
    }
  bool top_singleton = C.members.size() == 1 && C.members[0] == C.top;
  F.inclusive = literal_inclusive || top_singleton;
  F.boolean_ = literal_inclusive && F.intersective;
  return F;
}

std::optional<std::vector<std::size_t>> boolean_witness(const GridLattice& L,
                                                        const Antichain& C) {
  validate(L, C);
  std::vector<std::size_t> mt = subset_meets(L, C);
  // closure of members + top under meet and join
  std::set<std::size_t> closure(C.members.begin(), C.members.end());
  closure.insert(C.top);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(closure.begin(), closure.end());
    for (std::size_t a : cur)
      for (std::size_t b : cur) {
        for (std::size_t c : {L.index(meet(L.at(a), L.at(b))),
                              L.index(join(L.at(a), L.at(b)))})
          if (closure.insert(c).second) grew = true;
      }
  }
  std::set<std::size_t> image(mt.begin(), mt.end());
  if (image.size() != mt.size()) return std::nullopt;  // not injective
  if (image != closure) return std::nullopt;           // not onto the sublattice
  for (unsigned a = 0; a < mt.size(); ++a)
    for (unsigned b = 0; b < mt.size(); ++b) {
      if (mt[a | b] != L.index(meet(L.at(mt[a]), L.at(mt[b])))) return std::nullopt;
      if (mt[a & b] != L.index(join(L.at(mt[a]), L.at(mt[b])))) return std::nullopt;
    }
  return mt;
}

Antichain interval_antichain(const GridLattice& L, const Interval& I) {
  std::size_t lo = L.index(I.lo), hi = L.index(I.hi);
  if (!L.leq_idx(lo, hi)) throw std::domain_error("interval_antichain: empty interval");
  std::vector<std::size_t> below;
  for (std::size_t x = 0; x < L.size(); ++x)
    if (L.leq_idx(x, hi) && !L.leq_idx(lo, x)) below.push_back(x);
  Antichain C;
  C.top = hi;
  for (std::size_t x : below) {
    bool maximal = true;
    for (std::size_t y : below)
      if (y != x && L.leq_idx(x, y)) maximal = false;
    if (maximal) C.members.push_back(x);
  }
  std::sort(C.members.begin(), C.members.end());
  validate(L, C);
  return C;
}

std::vector<std::size_t> module_support(const GridLattice& L, const Antichain& C) {
  validate(L, C);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < L.size(); ++x) {
    if (!L.leq_idx(x, C.top)) continue;
    bool dominated = false;
    for (std::size_t c : C.members)
      if (L.leq_idx(x, c)) dominated = true;
    if (!dominated) out.push_back(x);
  }
  return out;
}

ModuleComplex build_resolution(const GridLattice& L, const Antichain& C) {
  validate(L, C);
  std::vector<std::size_t> mt = subset_meets(L, C);
  std::size_t r = C.members.size();
  ModuleComplex R;
  R.flavor = Flavor::Projective;
  R.lo = 0;
  // degree l: all l-subsets in ascending mask order
  std::vector<std::vector<unsigned>> by_size(r + 1);
  for (unsigned mask = 0; mask < (1u << r); ++mask)
    by_size[std::popcount(mask)].push_back(mask);
  for (std::size_t l = 0; l <= r; ++l) {
    std::vector<Summand> t;
    for (unsigned mask : by_size[l]) t.push_back(Summand{mt[mask], mask});
    R.terms.push_back(t);
  }
  R.bd.assign(r + 1, QMat());
  for (std::size_t l = 1; l <= r; ++l) {
    QMat b(by_size[l - 1].size(), by_size[l].size());
    for (std::size_t j = 0; j < by_size[l].size(); ++j) {
      unsigned S = by_size[l][j];
      for (int i = 0; i < static_cast<int>(r); ++i) {
        if (!(S & (1u << i))) continue;
        unsigned T = S & ~(1u << i);
        std::size_t row =
            std::lower_bound(by_size[l - 1].begin(), by_size[l - 1].end(), T) -
            by_size[l - 1].begin();
        int below = std::popcount(S & ((2u << i) - 1));  // #{j in S : j <= i}
        b.at(row, j) = (below % 2 == 0) ? 1 : -1;
      }
    }
    R.bd[l] = std::move(b);
  }
  validate(L, R);  // includes d*d = 0 and the hom-support condition
  return R;
}

Antichain decrement_antichain(const GridLattice& L, std::size_t alpha) {
  CompactPartition a = from_partition(L.at(alpha), L.n(), Side::Right);
  Antichain C;
  C.top = alpha;
  for (int i : a.mutable_indices())
    C.members.push_back(L.index(decrement(a, {i}).values()));
  std::sort(C.members.begin(), C.members.end());
  validate(L, C);
  return C;
}

std::vector<Antichain> enumerate_antichains(const GridLattice& L, std::size_t top) {
  std::vector<std::size_t> pool;
  for (std::size_t x = 0; x < L.size(); ++x)
    if (L.leq_idx(x, top)) pool.push_back(x);
  std::vector<Antichain> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    Antichain C;
    C.top = top;
    C.members = cur;
    out.push_back(C);
    for (std::size_t k = start; k < pool.size(); ++k) {
      bool ok = true;
      for (std::size_t c : cur)
        if (L.leq_idx(c, pool[k]) || L.leq_idx(pool[k], c)) ok = false;
      if (!ok) continue;
      cur.push_back(pool[k]);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace gridhom
