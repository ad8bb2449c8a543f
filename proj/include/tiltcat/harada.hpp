#pragma once

// Discrete side of the classification of basic tilting modules over a left
// Harada algebra of type (n_1, ..., n_m): the pd-1 indecomposables, the
// object bijection with coordinates over the triangular factor algebra, the
// Ext-vanishing criteria, and enumeration through tuples of triangulations.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tiltcat/combinatorics.hpp"

namespace tiltcat::harada {

using comb::BigInt;
using comb::Coordinate;

/// (n_1, ..., n_m): block i has n_i primitive idempotents e_{i1}..e_{in_i}.
class HaradaType {
 public:
  explicit HaradaType(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("HaradaType needs at least one block");
    for (int n : blocks_)
      if (n < 1) throw std::invalid_argument("HaradaType block sizes must be positive");
  }

  const std::vector<int>& blocks() const { return blocks_; }
  int m() const { return static_cast<int>(blocks_.size()); }
  /// n_i for 1-based block index i.
  int size(int block) const {
    if (block < 1 || block > m()) throw std::invalid_argument("block index out of range: " + std::to_string(block));
    return blocks_[static_cast<std::size_t>(block - 1)];
  }
  /// Sum of the n_i: the number of simple modules, and of summands of a
  /// basic tilting module.
  int total() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

  bool operator==(const HaradaType&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
    return s + ")";
  }

 private:
  std::vector<int> blocks_;
};

/// Indecomposable module of projective dimension at most one: the projective
/// P_{ij} = J^{j-1}(e_{i1}R), or the quotient S_i[k,l] = P_{ik}/P_{il}.
struct Indec {
  enum class Kind { projective = 0, quotient = 1 };

  int block = 1;
  Kind kind = Kind::projective;
  int first = 1;   // j for projectives, k for quotients
  int second = 0;  // l for quotients, 0 for projectives

  static Indec projective(int block, int j) { return {block, Kind::projective, j, 0}; }
  static Indec quotient(int block, int k, int l) { return {block, Kind::quotient, k, l}; }

  bool is_projective() const { return kind == Kind::projective; }

  auto operator<=>(const Indec&) const = default;

  std::string str() const {
    if (is_projective()) return "P" + std::to_string(block) + "," + std::to_string(first);
    return "S" + std::to_string(block) + "[" + std::to_string(first) + "," + std::to_string(second) + "]";
  }
};

inline void validate(const HaradaType& h, const Indec& x) {
  if (x.block < 1 || x.block > h.m()) throw std::invalid_argument("summand " + x.str() + ": block out of range");
  const int n = h.size(x.block);
  if (x.is_projective()) {
    if (x.first < 1 || x.first > n || x.second != 0)
      throw std::invalid_argument("summand " + x.str() + ": row index out of range");
  } else if (!(1 <= x.first && x.first < x.second && x.second <= n)) {
    throw std::invalid_argument("summand " + x.str() + ": needs 1 <= k < l <= n_i");
  }
}

/// Direct sum of indecomposables, kept sorted by (block, kind, indices).
struct HaradaModule {
  HaradaType type;
  std::vector<Indec> summands;

  HaradaModule(HaradaType t, std::vector<Indec> s) : type(std::move(t)), summands(std::move(s)) {
    for (const auto& x : summands) validate(type, x);
    std::sort(summands.begin(), summands.end());
  }

  bool operator==(const HaradaModule&) const = default;
};

/// The projectives P_{ij} for all i, j.
inline std::vector<Indec> projective_indecomposables(const HaradaType& h) {
  std::vector<Indec> out;
  for (int i = 1; i <= h.m(); ++i)
    for (int j = 1; j <= h.size(i); ++j) out.push_back(Indec::projective(i, j));
  return out;
}

/// S_i[k,l] for 1 <= k < l <= n_i: the indecomposables of projective
/// dimension exactly one.
inline std::vector<Indec> pd1_indecomposables(const HaradaType& h) {
  std::vector<Indec> out;
  for (int i = 1; i <= h.m(); ++i)
    for (int k = 1; k <= h.size(i); ++k)
      for (int l = k + 1; l <= h.size(i); ++l) out.push_back(Indec::quotient(i, k, l));
  return out;
}

/// Every indecomposable of projective dimension at most one, sorted.
inline std::vector<Indec> all_indecomposables(const HaradaType& h) {
  auto out = projective_indecomposables(h);
  auto q = pd1_indecomposables(h);
  out.insert(out.end(), q.begin(), q.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct BlockCoordinate {
  int block;
  Coordinate coord;
  auto operator<=>(const BlockCoordinate&) const = default;
};

/// Image under - (x)_R R/I: P_{ij} |-> (j, n_i+2), S_i[k,l] |-> (k, l+1).
inline BlockCoordinate f_object(const HaradaType& h, const Indec& x) {
  validate(h, x);
  const int n = h.size(x.block);
  if (x.is_projective()) return {x.block, Coordinate(n, x.first, n + 2)};
  return {x.block, Coordinate(n, x.first, x.second + 1)};
}

/// Inverse of f_object.
inline Indec f_preimage(const HaradaType& h, int block, const Coordinate& c) {
  const int n = h.size(block);
  if (c.n() != n) throw std::invalid_argument("coordinate " + c.str() + " is not for n_i=" + std::to_string(n));
  if (c.b() == n + 2) return Indec::projective(block, c.a());
  return Indec::quotient(block, c.a(), c.b() - 1);
}

/// Ext^1_R(x, y) = 0, decided combinatorially:
///  - different blocks: always zero;
///  - x projective: zero;
///  - x = S_i[k,l], y = P_{ij}: zero iff j <= k or l < j;
///  - both quotients in block i: computed over T_{n_i}(K) on the images.
inline bool ext1_vanishes(const HaradaType& h, const Indec& x, const Indec& y) {
  validate(h, x);
  validate(h, y);
  if (x.block != y.block) return true;
  if (x.is_projective()) return true;
  if (y.is_projective()) {
    const int j = y.first, k = x.first, l = x.second;
    return j <= k || l < j;
  }
  return comb::ext1_dim(f_object(h, x).coord, f_object(h, y).coord) == 0;
}

/// Outcome of a tilting check; on rejection names the failing condition.
struct TiltingVerdict {
  enum class Reason { none, repeated_summand, summand_count, ext_nonvanishing };
  Reason reason = Reason::none;
  std::optional<std::pair<Indec, Indec>> pair;  // failing ordered pair / repeated summand

  bool accepted() const { return reason == Reason::none; }

  std::string message() const {
    switch (reason) {
      case Reason::none: return "tilting";
      case Reason::repeated_summand: return "repeated summand " + pair->first.str();
      case Reason::summand_count: return "summand count";
      case Reason::ext_nonvanishing:
        return "Ext^1(" + pair->first.str() + ", " + pair->second.str() + ") != 0";
    }
    return "?";
  }
};

/// Basic tilting test: pairwise distinct summands, sum(n_i) of them, and
/// Ext^1 vanishing for every ordered pair (the coexact sequence condition
/// then holds automatically).
inline TiltingVerdict check_tilting(const HaradaModule& mod) {
  for (const auto& x : mod.summands) validate(mod.type, x);
  auto s = mod.summands;
  std::sort(s.begin(), s.end());
  if (auto it = std::adjacent_find(s.begin(), s.end()); it != s.end())
    return {TiltingVerdict::Reason::repeated_summand, std::pair{*it, *it}};
  if (static_cast<int>(s.size()) != mod.type.total()) return {TiltingVerdict::Reason::summand_count, std::nullopt};
  for (const auto& x : s)
    for (const auto& y : s)
      if (!ext1_vanishes(mod.type, x, y)) return {TiltingVerdict::Reason::ext_nonvanishing, std::pair{x, y}};
  return {};
}

inline bool is_tilting(const HaradaModule& mod) { return check_tilting(mod).accepted(); }

/// Product of the per-block Catalan numbers.
inline BigInt count_tilting(const HaradaType& h) {
  BigInt c = 1;
  for (int n : h.blocks()) c *= comb::catalan(n);
  return c;
}

/// Per block, the summands of F^{-1}(phi(T)) for each triangulation T, in
/// triangulation order.
inline std::vector<std::vector<std::vector<Indec>>> block_tilting_summands(const HaradaType& h) {
  std::vector<std::vector<std::vector<Indec>>> per_block;
  for (int i = 1; i <= h.m(); ++i) {
    std::vector<std::vector<Indec>> options;
    for (const auto& t : comb::cached_triangulations(h.size(i))) {
      std::vector<Indec> s;
      const auto tilting = comb::phi(t);
      for (const auto& c : tilting.summands()) s.push_back(f_preimage(h, i, c));
      std::sort(s.begin(), s.end());
      options.push_back(std::move(s));
    }
    per_block.push_back(std::move(options));
  }
  return per_block;
}

/// Calls visit(summands) for every basic tilting module, in order: tuples of
/// triangulations with block 1 most significant. Summands arrive sorted. A
/// visitor returning bool stops the walk by returning false.
template <class Visitor>
void for_each_tilting(const HaradaType& h, Visitor&& visit) {
  const auto per_block = block_tilting_summands(h);
  const std::size_t m = per_block.size();
  std::vector<std::size_t> idx(m, 0);
  std::vector<Indec> summands;
  summands.reserve(static_cast<std::size_t>(h.total()));
  while (true) {
    summands.clear();
    for (std::size_t b = 0; b < m; ++b) {
      const auto& s = per_block[b][idx[b]];
      summands.insert(summands.end(), s.begin(), s.end());
    }
    const auto& view = static_cast<const std::vector<Indec>&>(summands);
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const std::vector<Indec>&>, bool>) {
      if (!visit(view)) return;
    } else {
      visit(view);
    }
    std::size_t b = m;
    while (b > 0) {
      --b;
      if (++idx[b] < per_block[b].size()) break;
      idx[b] = 0;
      if (b == 0) return;
    }
  }
}

/// All basic tilting modules, as F^{-1} of tuples of triangulations.
inline std::vector<HaradaModule> enumerate_tilting(const HaradaType& h, std::size_t limit = 0) {
  std::vector<HaradaModule> out;
  for_each_tilting(h, [&](const std::vector<Indec>& s) {
    out.emplace_back(h, s);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

/// Metadata of the factor algebra R/I, a product of upper triangular
/// algebras T_{n_1} x ... x T_{n_m}.
struct RBarDescription {
  struct Block {
    int size;
    std::vector<std::pair<int, int>> idempotents;  // (i, j) labels of e_{ij} summing to e_i
  };
  std::vector<Block> blocks;
  int simple_count = 0;
  int dimension = 0;  // sum n_i (n_i + 1) / 2
};

inline RBarDescription rbar_description(const HaradaType& h) {
  RBarDescription d;
  for (int i = 1; i <= h.m(); ++i) {
    RBarDescription::Block b{h.size(i), {}};
    for (int j = 1; j <= b.size; ++j) b.idempotents.emplace_back(i, j);
    d.simple_count += b.size;
    d.dimension += b.size * (b.size + 1) / 2;
    d.blocks.push_back(std::move(b));
  }
  return d;
}

}  // namespace tiltcat::harada
