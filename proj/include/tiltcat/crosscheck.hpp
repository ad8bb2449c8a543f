#pragma once

// Agreement checks between the combinatorial rules and the linear-algebra
// engine.

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tiltcat/combinatorics.hpp"
#include "tiltcat/engine/harada_algebra.hpp"
#include "tiltcat/harada.hpp"

namespace tiltcat::check {

/// Hom and Ext^1 dimensions between all interval modules over T_n(F_p),
/// computed by the engine. Modules are built as radical truncations
/// P_a / P_a J^{b-a-1} of the row projectives with their defining
/// presentations, without going through the coordinate rules.
struct FactorOracle {
  int n = 0;
  std::vector<comb::Coordinate> coords;
  std::vector<std::vector<std::size_t>> hom;
  std::vector<std::vector<std::size_t>> ext;
};

inline FactorOracle factor_oracle(int n, std::uint32_t p) {
  const auto alg = engine::upper_triangular_algebra(n, p);
  FactorOracle o{n, comb::all_coordinates(n), {}, {}};
  std::vector<engine::Presentation> pres;
  for (const auto& c : o.coords) {
    const engine::Submodule top = engine::grid_projective(alg, 1, c.a());
    pres.push_back(engine::present_quotient(top.module, engine::radical_power(top.module, c.length())));
  }
  const std::size_t k = o.coords.size();
  o.hom.assign(k, std::vector<std::size_t>(k, 0));
  o.ext.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      o.hom[x][y] = engine::hom_space(pres[x].cokernel, pres[y].cokernel).size();
      o.ext[x][y] = engine::ext1(pres[x], pres[y].cokernel).dim;
    }
  return o;
}

struct Mismatch {
  std::string what;
};

/// Compares an oracle table with hom_dim / ext1_dim; returns disagreements.
inline std::vector<Mismatch> compare_factor_rules(const FactorOracle& o) {
  std::vector<Mismatch> out;
  for (std::size_t x = 0; x < o.coords.size(); ++x)
    for (std::size_t y = 0; y < o.coords.size(); ++y) {
      const auto& cx = o.coords[x];
      const auto& cy = o.coords[y];
      if (static_cast<std::size_t>(comb::hom_dim(cx, cy)) != o.hom[x][y])
        out.push_back({"hom " + cx.str() + "," + cy.str() + ": rule " + std::to_string(comb::hom_dim(cx, cy)) +
                       " engine " + std::to_string(o.hom[x][y])});
      if (static_cast<std::size_t>(comb::ext1_dim(cx, cy)) != o.ext[x][y])
        out.push_back({"ext " + cx.str() + "," + cy.str() + ": rule " + std::to_string(comb::ext1_dim(cx, cy)) +
                       " engine " + std::to_string(o.ext[x][y])});
    }
  return out;
}

/// All subsets of `items` of size `size` whose members are pairwise
/// compatible (compatible(i, j) is consulted for i == j too).
inline std::vector<std::vector<std::size_t>> compatible_subsets(
    std::size_t count, std::size_t size, const std::function<bool(std::size_t, std::size_t)>& compatible) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < count; ++i) {
      if (!compatible(i, i)) continue;
      bool ok = true;
      for (auto j : cur) ok = ok && compatible(i, j) && compatible(j, i);
      if (!ok) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Full comparison over a grid-labelled algebra: Harada axioms, engine Ext^1
/// against ext1_vanishes on all pairs of pd <= 1 indecomposables, engine
/// tilting sets against enumerate_tilting, F-compatibility, pd-1
/// certification and the ideal/factor structure.
struct HaradaCrosscheck {
  harada::HaradaType type{{1}};
  engine::HaradaReport harada;
  std::vector<CheckLine> lines;
  std::size_t engine_tilting_count = 0;
  std::size_t predicted_tilting_count = 0;

  bool passed() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

inline HaradaCrosscheck harada_crosscheck(const engine::AlgebraPtr& alg, engine::IsoOptions iso = {}) {
  HaradaCrosscheck r;
  r.harada = engine::verify_harada(alg, iso);
  {
    std::string detail;
    for (const auto& c : r.harada.checks)
      if (c.status != engine::HaradaCheck::Status::pass) detail += c.condition + " (" + c.detail + ") ";
    r.lines.push_back({"harada axioms", r.harada.accepted(), detail});
  }
  r.type = engine::grid_type(*alg);
  const auto& h = r.type;
  const auto indecs = harada::all_indecomposables(h);
  const std::size_t k = indecs.size();

  std::vector<engine::Presentation> pres;
  for (const auto& x : indecs) pres.push_back(engine::presentation_of(alg, x));

  // (a) Ext^1 criteria
  std::vector<std::vector<bool>> vanish(k, std::vector<bool>(k, false));
  std::size_t ext_bad = 0;
  std::string ext_detail;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      vanish[x][y] = engine::ext1(pres[x], pres[y].cokernel).dim == 0;
      if (vanish[x][y] != harada::ext1_vanishes(h, indecs[x], indecs[y])) {
        ++ext_bad;
        ext_detail += indecs[x].str() + "/" + indecs[y].str() + " ";
      }
    }
  r.lines.push_back({"ext criteria", ext_bad == 0,
                     std::to_string(k * k) + " pairs, " + std::to_string(ext_bad) + " disagreements " + ext_detail});

  // (b) tilting sets
  const auto subsets = compatible_subsets(k, static_cast<std::size_t>(h.total()),
                                          [&](std::size_t i, std::size_t j) { return bool(vanish[i][j]); });
  std::set<std::vector<harada::Indec>> engine_sets;
  for (const auto& s : subsets) {
    std::vector<harada::Indec> mod;
    for (auto i : s) mod.push_back(indecs[i]);
    std::sort(mod.begin(), mod.end());
    engine_sets.insert(std::move(mod));
  }
  std::set<std::vector<harada::Indec>> predicted;
  for (const auto& m : harada::enumerate_tilting(h)) predicted.insert(m.summands);
  r.engine_tilting_count = engine_sets.size();
  r.predicted_tilting_count = predicted.size();
  r.lines.push_back({"tilting sets", engine_sets == predicted,
                     "engine " + std::to_string(engine_sets.size()) + ", predicted " +
                         std::to_string(predicted.size())});

  // (c) F-compatibility
  const auto ideal = engine::ideal_I(alg);
  std::size_t f_bad = 0;
  std::string f_detail;
  for (std::size_t x = 0; x < k; ++x) {
    const auto image = engine::tensor_with_factor(pres[x].cokernel, ideal);
    const auto target = harada::f_object(h, indecs[x]);
    const auto res = engine::isomorphic(image, engine::interval_module(alg, target.block, target.coord), iso);
    if (res != engine::IsoResult::isomorphic) {
      ++f_bad;
      f_detail += indecs[x].str() + ":" + engine::to_string(res) + " ";
    }
  }
  r.lines.push_back({"F-compatibility", f_bad == 0,
                     std::to_string(k) + " objects, " + std::to_string(f_bad) + " failures " + f_detail});

  // pd-1 certification: projective first syzygy and simple top
  std::size_t pd_bad = 0;
  for (std::size_t x = 0; x < k; ++x) {
    if (indecs[x].is_projective()) continue;
    const auto& p = pres[x];
    const auto& q = indecs[x];
    // the syzygy P_{il} = J^{l-1}(e_{i1}A) must be isomorphic to e_{il}A
    const auto expect_p1 = engine::projective_at(alg, alg->grid_idempotent(q.block, q.second)).module;
    const bool ok = engine::has_simple_top(p.cokernel) && p.p1.dim() > 0 &&
                    engine::isomorphic(p.p1, expect_p1, iso) == engine::IsoResult::isomorphic;
    if (!ok) ++pd_bad;
  }
  r.lines.push_back({"pd1 certification", pd_bad == 0, std::to_string(pd_bad) + " failures"});

  // ideal I and the triangular factor
  const bool two_sided = engine::is_two_sided_ideal(*alg, ideal);
  const auto desc = harada::rbar_description(h);
  const std::size_t qdim = alg->dim() - ideal.rows();
  bool table_ok = true;
  std::vector<std::pair<std::pair<int, int>, engine::RightModule>> pbar;
  for (int i = 1; i <= h.m(); ++i)
    for (int j = 1; j <= h.size(i); ++j)
      pbar.push_back({{i, j}, engine::tensor_with_factor(engine::grid_projective(alg, i, j).module, ideal)});
  for (const auto& [a, ma] : pbar)
    for (const auto& [b, mb] : pbar) {
      const std::size_t want = (a.first == b.first && a.second >= b.second) ? 1 : 0;
      if (engine::hom_space(ma, mb).size() != want) table_ok = false;
    }
  r.lines.push_back({"ideal/factor", two_sided && qdim == static_cast<std::size_t>(desc.dimension) && table_ok,
                     "two-sided " + std::string(two_sided ? "yes" : "no") + ", dim A/I " + std::to_string(qdim) +
                         " (expected " + std::to_string(desc.dimension) + "), hom table " +
                         (table_ok ? "ok" : "mismatch")});
  return r;
}

}  // namespace tiltcat::check
