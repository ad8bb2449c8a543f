#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tiltcat/engine/module.hpp"
#include "tiltcat/errors.hpp"

namespace tiltcat::engine {

/// Short exact sequence 0 -> P1 -> P0 -> M -> 0 with P0 projective.
/// `inclusion` is dim P1 x dim P0, `projection` is dim P0 x dim M.
struct Presentation {
  RightModule p1;
  RightModule p0;
  Matrix inclusion;
  Matrix projection;
  RightModule cokernel;
};

/// Checks exactness of a presentation: both maps are module maps, the
/// composite vanishes, the first map is injective, the second surjective and
/// dimensions add up.
inline void validate(const Presentation& pr) {
  auto fail = [](const std::string& why) { throw std::invalid_argument("invalid presentation: " + why); };
  if (!pr.p1.same_parent(pr.p0) || !pr.p0.same_parent(pr.cokernel)) fail("modules over different algebras");
  if (pr.p1.dim() > 0 && !is_module_map(pr.p1, pr.p0, pr.inclusion)) fail("inclusion is not a module map");
  if (!is_module_map(pr.p0, pr.cokernel, pr.projection)) fail("projection is not a module map");
  if (pr.p1.dim() > 0 && !(pr.inclusion * pr.projection).is_zero()) fail("composite is not zero");
  if (pr.p1.dim() > 0 && rank(pr.inclusion) != pr.p1.dim()) fail("first map is not injective");
  if (pr.cokernel.dim() > 0 && rank(pr.projection) != pr.cokernel.dim()) fail("second map is not surjective");
  if (pr.p0.dim() != pr.p1.dim() + pr.cokernel.dim()) fail("not exact in the middle");
}

/// Presentation of P0 / (span of the rows of `sub`) with the given P0.
inline Presentation present_quotient(const RightModule& p0, const Matrix& sub) {
  Submodule k = submodule(p0, sub);
  Quotient q = quotient(p0, k.inclusion);
  return {std::move(k.module), p0, std::move(k.inclusion), std::move(q.projection), std::move(q.module)};
}

struct Ext1Result {
  std::size_t dim = 0;
  /// Elements of Hom(P1, N) representing a basis of Ext^1(M, N).
  std::vector<Matrix> cocycles;
};

/// Ext^1(M, N) = coker(Hom(P0, N) -> Hom(P1, N)) for 0 -> P1 -> P0 -> M -> 0
/// with P0 projective.
inline Ext1Result ext1(const Presentation& pr, const RightModule& n) {
  validate(pr);
  if (!pr.p0.same_parent(n)) throw std::invalid_argument("ext1: modules over different algebras");
  Ext1Result res;
  if (pr.p1.dim() == 0 || n.dim() == 0) return res;
  const auto hom1 = hom_space(pr.p1, n);
  if (hom1.empty()) return res;
  const std::size_t width = pr.p1.dim() * n.dim();
  EchelonBasis image(n.field(), width);
  for (const auto& g : hom_space(pr.p0, n)) image.insert(flatten({pr.inclusion * g}, n.field(), width).row(0));
  for (const auto& h : hom1) {
    if (image.insert(flatten({h}, n.field(), width).row(0))) res.cocycles.push_back(h);
  }
  res.dim = res.cocycles.size();
  return res;
}

/// 0 -> rad(eA) -> eA -> S -> 0 for the simple at a designated idempotent.
inline Presentation simple_presentation(const AlgebraPtr& alg, std::size_t idempotent_basis) {
  const Submodule p = projective_at(alg, idempotent_basis);
  return present_quotient(p.module, radical_of(p.module));
}

/// M is injective iff Ext^1(S, M) = 0 for every simple S.
inline bool is_injective(const RightModule& m) {
  for (const auto& e : m.algebra().idempotents())
    if (ext1(simple_presentation(m.parent(), e.basis), m).dim != 0) return false;
  return true;
}

}  // namespace tiltcat::engine
