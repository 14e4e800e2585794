#include "gridhom/ycat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gridhom/antichain.hpp"
#include "gridhom/homalg.hpp"

namespace gridhom {

namespace {

std::set<int> mask_to_blocks(unsigned mask, const std::vector<int>& mut) {
  std::set<int> J;
  for (std::size_t t = 0; t < mut.size(); ++t)
    if (mask >> t & 1u) J.insert(mut[t]);
  return J;
}

bool in_interval(const Partition& q, const Partition& lo, const Partition& hi) {
  return leq(lo, q) && leq(q, hi);
}

// Largest value in [-m, min(1, n)] missing from `letters`; the cyclic
// letter order starts there (-m is never a letter, so it always exists).
int base_letter(const std::set<int>& letters, int m, int n) {
  for (int z = std::min(1, n); z >= -m; --z)
    if (!letters.count(z)) return z;
  return -m;
}

int cyclic_pos(int z, int k_min, int m, int n) {
  return z >= k_min ? z - k_min : (n - k_min + 1) + (z + m);
}

int parity_sign(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

std::optional<HomDegree> hom_degree(const GridLattice& L, const Partition& a,
                                    const Partition& b) {
  if (!L.contains(a) || !L.contains(b))
    throw std::domain_error("hom_degree: foreign partition");
  CompactPartition ca = from_partition(a, L.n());
  Partition floor_b = support_floor(b, L.n());
  auto mutset = ca.mutable_indices();
  std::vector<int> mut(mutset.begin(), mutset.end());
  std::vector<unsigned> hits;
  for (unsigned mask = 0; mask < (1u << mut.size()); ++mask) {
    Partition q = decrement(ca, mask_to_blocks(mask, mut)).values();
    if (in_interval(q, floor_b, b)) hits.push_back(mask);
  }
  if (hits.size() == 1)
    return HomDegree{mask_to_blocks(hits[0], mut),
                     static_cast<int>(std::popcount(hits[0]))};
  if (hits.size() > 1) {
    unsigned lo = ~0u, hi = 0;
    for (unsigned h : hits) {
      lo &= h;
      hi |= h;
    }
    bool interval = hits.size() == (1ull << std::popcount(hi & ~lo));
    for (unsigned h : hits)
      if ((h & lo) != lo || (h & ~hi) != 0) interval = false;
    if (!interval) throw std::logic_error("hom_degree: hits are not a subset interval");
  }
  return std::nullopt;
}

std::optional<int> shifted_hom_degree(const GridLattice& L, const ShiftedObject& X,
                                      const ShiftedObject& Y) {
  auto hd = hom_degree(L, X.alpha, Y.alpha);
  if (!hd) return std::nullopt;
  return hd->degree + X.shift - Y.shift;
}

DegreeZeroFacts degree_zero_facts(const GridLattice& L, const Partition& a,
                                  const Partition& b) {
  DegreeZeroFacts F;
  Partition fa = support_floor(a, L.n());
  Partition fb = support_floor(b, L.n());
  std::size_t ia = L.index(a);
  auto dh = derived_hom(L, build_resolution(L, decrement_antichain(L, ia)),
                        Interval{fb, b}, 0, 0);
  F.oracle = dh.count(0) != 0 && dh.at(0) > 0;
  F.floor_chain = leq(fa, fb) && leq(fb, a) && leq(a, b);

  CompactPartition ca = from_partition(a, L.n());
  CompactPartition cb = from_partition(b, L.n());
  bool member = in_interval(a, fb, b);

  auto mutset = ca.mutable_indices();
  std::vector<int> mut(mutset.begin(), mutset.end());
  bool none = true;
  for (unsigned mask = 1; mask < (1u << mut.size()) && none; ++mask) {
    Partition q = decrement(ca, mask_to_blocks(mask, mut)).values();
    if (in_interval(q, fb, b)) none = false;
  }
  F.no_decrement = member && none;

  std::set<int> va, vb;
  for (int c : ca.coeffs)
    if (c > 0) va.insert(c);
  for (int c : cb.coeffs)
    if (c > 0) vb.insert(c);
  bool incl = std::includes(vb.begin(), vb.end(), va.begin(), va.end());
  F.value_subset = member && incl;

  // Every nonzero block j of b must overlap the block of a carrying the
  // same value: x_{i-1} < y_j <= x_i < y_{j+1}, with the fences x_0 = 0,
  // x_{r+1} = m, value n for the virtual block r+1, y_{s+1} = m+1.
  bool inter = leq(a, b) && incl;
  if (inter) {
    auto x = ca.ending_indices();
    auto y = cb.ending_indices();
    int r = ca.blocks(), s = cb.blocks();
    for (int j = 1; j <= s && inter; ++j) {
      int lj = cb.coeffs[j - 1];
      if (lj == 0) continue;
      int yj = y[j - 1];
      int yj1 = (j == s) ? L.m() + 1 : y[j];
      bool found = false;
      for (int i = 1; i <= r + 1 && !found; ++i) {
        int li = (i == r + 1) ? L.n() : ca.coeffs[i - 1];
        if (i <= r && li == 0) continue;
        if (li != lj) continue;
        int xi = (i == r + 1) ? L.m() : x[i - 1];
        int xi0 = (i == 1) ? 0 : x[i - 2];
        found = xi0 < yj && yj <= xi && xi < yj1;
      }
      inter = found;
    }
  }
  F.interlacing = inter;
  return F;
}

std::optional<Factorization> canonical_factorization(const GridLattice& L,
                                                     const Partition& a,
                                                     const Partition& b) {
  auto hd = hom_degree(L, a, b);
  if (!hd) return std::nullopt;
  Factorization F;
  F.extension.assign(hd->blocks.begin(), hd->blocks.end());
  CompactPartition g = decrement(from_partition(a, L.n()), hd->blocks);
  CompactPartition cb = from_partition(b, L.n());
  int r = g.blocks(), s = cb.blocks();
  if (r == 0) return F;
  auto x = g.ending_indices();
  auto y = cb.ending_indices();
  F.exponents.resize(r);
  for (int i = 1; i <= r; ++i) {
    int v = g.coeffs[i - 1];
    if (v == 0) {
      F.exponents[0] = (cb.coeffs[0] == 0) ? x[0] - y[0] : x[0];
    } else {
      int j = -1;
      for (int t = 1; t <= s; ++t)
        if (cb.coeffs[t - 1] == v) {
          j = t;
          break;
        }
      if (j < 0)
        throw std::logic_error("canonical_factorization: source value missing from target");
      F.exponents[i - 1] = x[i - 1] - y[j - 1];
    }
    if (F.exponents[i - 1] < 0)
      throw std::logic_error("canonical_factorization: negative exponent");
  }
  if (F.exponents[r - 1] != 0)
    throw std::logic_error("canonical_factorization: top block must not shift");
  return F;
}

Partition replay_factorization(const GridLattice& L, const Partition& a,
                               const Factorization& f) {
  CompactPartition cp = from_partition(a, L.n());
  std::set<int> J(f.extension.begin(), f.extension.end());
  auto mutset = cp.mutable_indices();
  for (int j : J)
    if (!mutset.count(j))
      throw std::invalid_argument("replay_factorization: block not lowerable");
  cp = decrement(cp, J);
  if (static_cast<int>(f.exponents.size()) != cp.blocks())
    throw std::invalid_argument("replay_factorization: one exponent per block required");
  for (int i = cp.blocks(); i >= 1; --i)
    for (int t = 0; t < f.exponents[i - 1]; ++t) {
      if (!shift_multiplicity_defined(cp, i))
        throw std::invalid_argument("replay_factorization: multiplicity shift undefined");
      cp = shift_multiplicity(cp, i);
    }
  return cp.values();
}

ComposedWord compose_word(const MorphismWord& w) {
  validate(w.start);
  if (w.moves.empty()) return ComposedWord{1, {}};
  Configuration R = w.start;
  for (int k : w.moves) {
    if (!move_defined(R, k))
      throw std::invalid_argument("compose_word: move undefined at its prefix");
    R = move_bead(R, k);
  }
  for (int k : w.moves)
    if (!w.start.has(k)) return ComposedWord{0, {}};
  std::set<int> letters(w.moves.begin(), w.moves.end());
  if (letters.size() != w.moves.size())
    throw std::logic_error("compose_word: repeated letter in a nonzero word");
  int m = w.start.m, n = w.start.n;
  int k_min = base_letter(letters, m, n);
  auto pos = [&](int z) { return cyclic_pos(z, k_min, m, n); };
  std::vector<int> canon(w.moves.begin(), w.moves.end());
  std::sort(canon.begin(), canon.end(), [&](int p, int q) { return pos(p) < pos(q); });
  long inv = 0;
  for (std::size_t i = 0; i < w.moves.size(); ++i)
    for (std::size_t j = i + 1; j < w.moves.size(); ++j)
      if (w.moves[i] > 0 && w.moves[j] > 0 && pos(w.moves[i]) > pos(w.moves[j])) ++inv;
  Configuration S = w.start;
  for (int k : canon) {
    if (!move_defined(S, k))
      throw std::logic_error("compose_word: canonical order not composable");
    S = move_bead(S, k);
  }
  if (!(S == R)) throw std::logic_error("compose_word: canonical end configuration differs");
  return ComposedWord{inv % 2 == 0 ? 1 : -1, std::move(canon)};
}

std::optional<std::vector<int>> canonical_letters(const GridLattice& L,
                                                  const Partition& a,
                                                  const Partition& b) {
  auto hd = hom_degree(L, a, b);
  if (!hd) return std::nullopt;
  Configuration Ra = right_config(from_partition(a, L.n()));
  Configuration Rb = right_config(from_partition(b, L.n()));
  int m = L.m(), n = L.n();
  auto tail = [](const Configuration& c, int k) {
    int t = 0;
    for (int x : c.beads)
      if (x >= k) ++t;
    return t;
  };
  std::vector<int> letters;
  for (int k = -m + 1; k <= n; ++k) {
    int d = tail(Ra, k) - tail(Rb, k);
    if (d < 0 || d > 1) throw std::logic_error("canonical_letters: bead flow not unit");
    if (d == 1) letters.push_back(k);
  }
  std::set<int> ls(letters.begin(), letters.end());
  int k_min = base_letter(ls, m, n);
  std::sort(letters.begin(), letters.end(), [&](int p, int q) {
    return cyclic_pos(p, k_min, m, n) < cyclic_pos(q, k_min, m, n);
  });
  Configuration R = Ra;
  for (int k : letters) {
    if (!move_defined(R, k))
      throw std::logic_error("canonical_letters: word not composable");
    R = move_bead(R, k);
  }
  if (!(R == Rb)) throw std::logic_error("canonical_letters: word misses the target");
  return letters;
}

ResolutionMap decrement_lift(const GridLattice& L, std::size_t alpha,
                             const std::set<int>& blocks) {
  CompactPartition ca = from_partition(L.at(alpha), L.n());
  auto mutset = ca.mutable_indices();
  for (int j : blocks)
    if (!mutset.count(j)) throw std::domain_error("decrement_lift: block not lowerable");
  if (!is_allowed(ca, blocks))
    throw std::domain_error("decrement_lift: extension vanishes for these blocks");
  std::vector<int> mut(mutset.begin(), mutset.end());
  unsigned jmask = 0;
  for (std::size_t t = 0; t < mut.size(); ++t)
    if (blocks.count(mut[t])) jmask |= 1u << t;
  std::size_t tgt = L.index(decrement(ca, blocks).values());
  ModuleComplex C = build_resolution(L, decrement_antichain(L, alpha));
  ModuleComplex D = build_resolution(L, decrement_antichain(L, tgt));
  int j = static_cast<int>(blocks.size());
  ChainMap f;
  f.shift = j;
  for (int d = C.lo; d <= C.hi(); ++d) {
    if (C.width(d) == 0 || D.width(d - j) == 0) continue;
    QMat comp(D.width(d - j), C.width(d));
    bool any = false;
    for (std::size_t col = 0; col < C.width(d); ++col) {
      const Summand& s = C.term(d)[col];
      unsigned I = s.tag;
      if ((I & jmask) != jmask) continue;
      const auto& tterm = D.term(d - j);
      int row = -1;
      for (std::size_t t = 0; t < tterm.size(); ++t)
        if (tterm[t].label == s.label) {
          if (row >= 0) throw std::logic_error("decrement_lift: duplicate target label");
          row = static_cast<int>(t);
        }
      if (row < 0) throw std::logic_error("decrement_lift: no target summand with the source label");
      long wsum = 1L * j * (d - j);
      for (std::size_t t = 0; t < mut.size(); ++t) {
        if (!(I >> t & 1u) || (jmask >> t & 1u)) continue;
        wsum += std::popcount(jmask & ((2u << t) - 1u));
      }
      comp.at(static_cast<std::size_t>(row), col) = wsum % 2 == 0 ? Rat(1) : Rat(-1);
      any = true;
    }
    if (any) f.comps[d] = std::move(comp);
  }
  validate_chain_map(L, C, D, f);
  return ResolutionMap{alpha, tgt, std::move(C), std::move(D), std::move(f)};
}

ResolutionMap generator_lift(const GridLattice& L, std::size_t alpha, int k) {
  CompactPartition ca = from_partition(L.at(alpha), L.n());
  Configuration R = right_config(ca);
  if (!move_defined(R, k)) throw std::domain_error("generator_lift: bead move undefined");
  if (k > 0) {
    for (int i = 1; i <= ca.blocks(); ++i)
      if (ca.coeffs[i - 1] == k) return decrement_lift(L, alpha, {i});
    throw std::logic_error("generator_lift: no block carries the moved value");
  }
  if (k < -L.m() + 2)
    throw std::domain_error("generator_lift: move leaves the plain window");
  std::size_t tgt = L.index(read_right(move_bead(R, k)).values());
  ModuleComplex C = build_resolution(L, decrement_antichain(L, alpha));
  ModuleComplex D = build_resolution(L, decrement_antichain(L, tgt));
  ChainMap f;
  f.shift = 0;
  for (int d = C.lo; d <= C.hi(); ++d) {
    if (C.width(d) == 0 || D.width(d) == 0) continue;
    QMat comp(D.width(d), C.width(d));
    bool any = false;
    for (std::size_t col = 0; col < C.width(d); ++col) {
      const Summand& s = C.term(d)[col];
      const auto& tterm = D.term(d);
      int row = -1;
      for (std::size_t t = 0; t < tterm.size(); ++t)
        if (L.leq_idx(s.label, tterm[t].label)) {
          if (row >= 0) throw std::logic_error("generator_lift: ambiguous target summand");
          row = static_cast<int>(t);
        }
      if (row < 0) throw std::logic_error("generator_lift: no target summand above the source");
      comp.at(static_cast<std::size_t>(row), col) = Rat(1);
      any = true;
    }
    if (any) f.comps[d] = std::move(comp);
  }
  validate_chain_map(L, C, D, f);
  return ResolutionMap{alpha, tgt, std::move(C), std::move(D), std::move(f)};
}

ResolutionMap word_lift(const GridLattice& L, std::size_t alpha,
                        const std::vector<int>& moves) {
  ModuleComplex C = build_resolution(L, decrement_antichain(L, alpha));
  ResolutionMap acc{alpha, alpha, C, C, identity_chain_map(C)};
  for (int k : moves) {
    ResolutionMap g = generator_lift(L, acc.target, k);
    ChainMap comp = compose_chain_maps(acc.src_complex, acc.tgt_complex,
                                       g.tgt_complex, acc.map, g.map);
    acc.target = g.target;
    acc.tgt_complex = std::move(g.tgt_complex);
    acc.map = std::move(comp);
  }
  return acc;
}

bool square_relation_holds(const GridLattice& L, std::size_t alpha, int k, int l) {
  ResolutionMap c1 = word_lift(L, alpha, {k, l});
  ResolutionMap c2 = word_lift(L, alpha, {l, k});
  if (c1.target != c2.target) throw std::logic_error("square_relation_holds: paths diverge");
  int eps = (k > 0 && l > 0) ? -1 : 1;
  ChainMap diff = add_chain_maps(c1.src_complex, c1.tgt_complex, c1.map,
                                 scale_chain_map(c2.map, Rat(-eps)));
  return is_null_homotopic(L, c1.src_complex, c1.tgt_complex, diff) &&
         !is_null_homotopic(L, c1.src_complex, c1.tgt_complex, c1.map);
}

bool zero_relation_holds(const GridLattice& L, std::size_t alpha, int k) {
  ResolutionMap c = word_lift(L, alpha, {k, k - 1});
  return is_null_homotopic(L, c.src_complex, c.tgt_complex, c.map);
}

int generator_sign(const Configuration& R, int k, SignConvention variant) {
  switch (variant) {
    case SignConvention::Raw:
      return 1;
    case SignConvention::Commuting:
      return parity_sign(positive_weight_upto(R, k));
    case SignConvention::Anticommuting:
      if (k > 0) return 1;
      return parity_sign(negative_weight_upto(R, k) + positive_weight_upto(R, R.n));
  }
  throw std::logic_error("generator_sign: unknown convention");
}

QuiverPresentation bead_presentation(const GridLattice& L, SignConvention variant) {
  QuiverPresentation Q;
  Q.orientation = Orientation::Opposite;
  int m = L.m();
  std::vector<Configuration> cfg(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    cfg[i] = right_config(from_partition(L.at(i), L.n()));
    Q.vertices.push_back(cfg[i].beads);
  }
  auto target_of = [&](const Configuration& R, int k) {
    return static_cast<int>(L.index(read_right(move_bead(R, k)).values()));
  };
  for (std::size_t i = 0; i < L.size(); ++i)
    for (int k : movable_beads(cfg[i]))
      if (k >= -m + 2)
        Q.arrows.push_back(QuiverArrow{static_cast<int>(i), target_of(cfg[i], k), k});
  for (std::size_t i = 0; i < L.size(); ++i) {
    const Configuration& R = cfg[i];
    std::vector<int> avail;
    for (int k : movable_beads(R))
      if (k >= -m + 2) avail.push_back(k);
    for (std::size_t p = 0; p < avail.size(); ++p)
      for (std::size_t q = p + 1; q < avail.size(); ++q) {
        int k = avail[p], l = avail[q];
        Configuration Rk = move_bead(R, k), Rl = move_bead(R, l);
        int vk = target_of(R, k), vl = target_of(R, l);
        int vkl = target_of(Rk, l);
        int eps_u = (k > 0 && l > 0) ? -1 : 1;
        int s = generator_sign(R, k, variant) * generator_sign(Rk, l, variant) *
                generator_sign(R, l, variant) * generator_sign(Rl, k, variant);
        int eps_c = eps_u * s;
        Q.relations.push_back(
            {PathTerm{Rat(1), Q.arrow_id(static_cast<int>(i), vk), Q.arrow_id(vk, vkl)},
             PathTerm{Rat(-eps_c), Q.arrow_id(static_cast<int>(i), vl), Q.arrow_id(vl, vkl)}});
      }
    for (int k : movable_beads(R)) {
      if (k - 1 < -m + 2 || R.has(k - 2)) continue;
      Configuration Rk = move_bead(R, k);
      int vk = target_of(R, k), vkk = target_of(Rk, k - 1);
      Q.relations.push_back(
          {PathTerm{Rat(1), Q.arrow_id(static_cast<int>(i), vk), Q.arrow_id(vk, vkk)}});
    }
  }
  validate(Q);
  return Q;
}

}  // namespace gridhom
