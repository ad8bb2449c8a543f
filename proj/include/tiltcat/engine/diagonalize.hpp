#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tiltcat/engine/harada_algebra.hpp"
#include "tiltcat/errors.hpp"

namespace tiltcat::engine {

/// Direct sum of grid projectives P_{ij}, one label (i,j) per summand.
struct ProjectiveSum {
  std::vector<GridLabel> labels;
  std::vector<RightModule> summands;
  DirectSum sum;

  std::size_t offset(std::size_t s) const { return sum.offsets[s]; }
  std::size_t dim(std::size_t s) const { return summands[s].dim(); }
};

inline ProjectiveSum projective_sum(const AlgebraPtr& alg, std::vector<GridLabel> labels) {
  if (labels.empty()) throw std::invalid_argument("projective_sum: no summands");
  std::vector<RightModule> parts;
  for (const auto& l : labels) parts.push_back(grid_projective(alg, l.block, l.row).module);
  DirectSum ds = direct_sum(parts);
  return {std::move(labels), std::move(parts), std::move(ds)};
}

/// Result of diagonalizing a monomorphism f : Q -> Q' between sums of
/// indecomposable projectives. With vectors as rows, phi^{-1} * f * psi
/// equals `diagonal`; component (s, t) of `diagonal` vanishes unless
/// t == matching[s], and every matched component is injective.
struct MonoDiagonalization {
  Matrix phi;
  Matrix phi_inverse;
  Matrix psi;
  Matrix diagonal;
  std::vector<std::size_t> matching;
};

namespace detail {

/// Solves X * right = target for X in the span of `basis`.
inline std::optional<Matrix> factor_through(const std::vector<Matrix>& basis, const Matrix& right,
                                            const Matrix& target) {
  const auto& field = target.field();
  const std::size_t width = target.rows() * target.cols();
  if (basis.empty()) return target.is_zero() ? std::optional<Matrix>(Matrix(field, target.rows(), right.rows()))
                                             : std::nullopt;
  std::vector<Matrix> images;
  for (const auto& b : basis) images.push_back(b * right);
  auto coeff = solve_left(flatten(images, field, width), flatten({target}, field, width));
  if (!coeff) return std::nullopt;
  return combine(basis, coeff->row(0), field, basis.front().rows(), basis.front().cols());
}

/// Solves left * X = target for X in the span of `basis`.
inline std::optional<Matrix> factor_after(const std::vector<Matrix>& basis, const Matrix& left,
                                          const Matrix& target) {
  const auto& field = target.field();
  const std::size_t width = target.rows() * target.cols();
  if (basis.empty()) return target.is_zero() ? std::optional<Matrix>(Matrix(field, left.cols(), target.cols()))
                                             : std::nullopt;
  std::vector<Matrix> images;
  for (const auto& b : basis) images.push_back(left * b);
  auto coeff = solve_left(flatten(images, field, width), flatten({target}, field, width));
  if (!coeff) return std::nullopt;
  return combine(basis, coeff->row(0), field, basis.front().rows(), basis.front().cols());
}

}  // namespace detail

/// Constructive diagonalization of a monomorphism between sums of
/// indecomposable projectives over a left Harada algebra.
///
/// Source summands are processed longest first (ties by index). For summand
/// s, components landing in already matched targets t' are cleared by a
/// source automorphism, factoring them as h followed by the injective
/// diagonal component at t'. Among the remaining components an injective one
/// into a target of minimal length is chosen (ties by index) and every other
/// remaining component is factored through it and cleared by a target
/// automorphism.
///
/// Throws precondition_error if f is not an injective module map and
/// internal_error if a factorization that must exist cannot be found.
inline MonoDiagonalization diagonalize_mono(const ProjectiveSum& source, const ProjectiveSum& target,
                                            const Matrix& f) {
  const auto& q = source.sum.module;
  const auto& qp = target.sum.module;
  const auto& field = q.field();
  if (!q.same_parent(qp)) throw std::invalid_argument("diagonalize_mono: sums over different algebras");
  if (!is_module_map(q, qp, f)) throw precondition_error("diagonalize_mono: f is not a module map");
  if (rank(f) != q.dim()) throw precondition_error("diagonalize_mono: f is not injective");

  const std::size_t k = source.summands.size();
  const std::size_t l = target.summands.size();
  Matrix cur = f;
  Matrix phi = Matrix::identity(field, q.dim());
  Matrix phi_inv = Matrix::identity(field, q.dim());
  Matrix psi = Matrix::identity(field, qp.dim());

  auto comp = [&](std::size_t s, std::size_t t) {
    return cur.block(source.offset(s), target.offset(t), source.dim(s), target.dim(t));
  };

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return source.dim(a) > source.dim(b); });

  std::vector<std::size_t> matching(k, l);
  std::vector<bool> used(l, false);
  std::vector<std::size_t> done;
  for (std::size_t s : order) {
    // Clear components into targets already matched to longer sources.
    for (std::size_t sp : done) {
      const std::size_t tp = matching[sp];
      const Matrix g = comp(s, tp);
      if (g.is_zero()) continue;
      const auto h = detail::factor_through(hom_space(source.summands[s], source.summands[sp]), comp(sp, tp), g);
      if (!h) throw internal_error("diagonalize_mono: component does not factor through a diagonal mono");
      Matrix e = Matrix::identity(field, q.dim());
      Matrix e_inv = Matrix::identity(field, q.dim());
      e.set_block(source.offset(s), source.offset(sp), h->scaled(field.neg(1)));
      e_inv.set_block(source.offset(s), source.offset(sp), *h);
      cur = e * cur;
      phi_inv = e * phi_inv;
      phi = phi * e_inv;
    }
    // Pick an injective component into a shortest unmatched target.
    std::size_t pick = l;
    for (std::size_t t = 0; t < l; ++t) {
      if (used[t]) continue;
      if (rank(comp(s, t)) != source.dim(s)) continue;
      if (pick == l || target.dim(t) < target.dim(pick)) pick = t;
    }
    if (pick == l) throw internal_error("diagonalize_mono: no injective component remains");
    const Matrix g1 = comp(s, pick);
    Matrix gop = Matrix::identity(field, qp.dim());
    for (std::size_t t = 0; t < l; ++t) {
      if (used[t] || t == pick) continue;
      const Matrix g = comp(s, t);
      if (g.is_zero()) continue;
      const auto h = detail::factor_after(hom_space(target.summands[pick], target.summands[t]), g1, g);
      if (!h) throw internal_error("diagonalize_mono: component does not factor through the chosen mono");
      gop.set_block(target.offset(pick), target.offset(t), h->scaled(field.neg(1)));
    }
    cur = cur * gop;
    psi = psi * gop;
    matching[s] = pick;
    used[pick] = true;
    done.push_back(s);
  }
  return {std::move(phi), std::move(phi_inv), std::move(psi), std::move(cur), std::move(matching)};
}

/// Checks the output contract of diagonalize_mono against the input map.
inline bool is_valid_diagonalization(const ProjectiveSum& source, const ProjectiveSum& target, const Matrix& f,
                                     const MonoDiagonalization& d) {
  const auto& q = source.sum.module;
  const auto& qp = target.sum.module;
  if (!(d.phi * d.phi_inverse == Matrix::identity(q.field(), q.dim()))) return false;
  if (!is_module_map(q, q, d.phi) || !is_module_map(qp, qp, d.psi)) return false;
  if (rank(d.psi) != qp.dim()) return false;
  if (!(d.phi_inverse * f * d.psi == d.diagonal)) return false;
  std::vector<bool> hit(target.summands.size(), false);
  for (std::size_t s = 0; s < source.summands.size(); ++s) {
    const std::size_t m = d.matching[s];
    if (m >= target.summands.size() || hit[m]) return false;
    hit[m] = true;
    for (std::size_t t = 0; t < target.summands.size(); ++t) {
      const Matrix c = d.diagonal.block(source.offset(s), target.offset(t), source.dim(s), target.dim(t));
      if (t == m ? rank(c) != source.dim(s) : !c.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace tiltcat::engine
