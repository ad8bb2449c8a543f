#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tiltcat/engine/algebra.hpp"
#include "tiltcat/engine/matrix.hpp"

namespace tiltcat::engine {

/// Finite-dimensional right module: one action matrix per algebra basis
/// element, acting on row vectors (v . b_i = v * action(i)).
class RightModule {
 public:
  /// Builds a module from raw action matrices and checks the module axioms
  /// against every pair of basis elements.
  static RightModule validated(AlgebraPtr parent, std::size_t dim, std::vector<Matrix> action) {
    RightModule m(std::move(parent), dim, std::move(action));
    m.check_axioms();
    return m;
  }

  /// Construction without the axiom check; used by engine routines whose
  /// output is a module by construction.
  static RightModule trusted(AlgebraPtr parent, std::size_t dim, std::vector<Matrix> action) {
    return RightModule(std::move(parent), dim, std::move(action));
  }

  static RightModule zero(AlgebraPtr parent) {
    std::vector<Matrix> action(parent->dim(), Matrix(parent->field(), 0, 0));
    return RightModule(std::move(parent), 0, std::move(action));
  }

  const AlgebraPtr& parent() const { return parent_; }
  const FDAlgebra& algebra() const { return *parent_; }
  const PrimeField& field() const { return parent_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t basis_index) const { return action_.at(basis_index); }

  /// Action matrix of an arbitrary algebra element given by coordinates.
  Matrix act(std::span<const Elem> element) const {
    Matrix out(field(), dim_, dim_);
    for (std::size_t i = 0; i < element.size(); ++i) out.add_scaled(action_[i], element[i]);
    return out;
  }

  /// Entry k is dim(M e_k) for the k-th designated idempotent.
  std::vector<std::size_t> dimension_vector() const {
    std::vector<std::size_t> out;
    for (const auto& e : algebra().idempotents()) out.push_back(rank(action_[e.basis]));
    return out;
  }

  bool same_parent(const RightModule& o) const {
    return parent_ == o.parent_ || *parent_ == *o.parent_;
  }

 private:
  RightModule(AlgebraPtr parent, std::size_t dim, std::vector<Matrix> action)
      : parent_(std::move(parent)), dim_(dim), action_(std::move(action)) {
    if (!parent_) throw std::invalid_argument("module without parent algebra");
    if (action_.size() != parent_->dim()) throw std::invalid_argument("action count differs from algebra dimension");
    for (const auto& a : action_)
      if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("action matrix has wrong shape");
  }

  void check_axioms() const {
    const auto& alg = algebra();
    const std::size_t n = alg.dim();
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Matrix lhs = action_[j] * action_[k];
        Matrix rhs(field(), dim_, dim_);
        for (std::size_t t = 0; t < n; ++t) rhs.add_scaled(action_[t], alg.right_mult(k)(j, t));
        if (!(lhs == rhs)) throw std::invalid_argument("action does not respect the structure constants");
      }
    }
    if (!(act(alg.unit()) == Matrix::identity(field(), dim_)))
      throw std::invalid_argument("unit does not act as the identity");
  }

  AlgebraPtr parent_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

/// A_A with basis the algebra basis.
inline RightModule regular_module(const AlgebraPtr& alg) {
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < alg->dim(); ++j) action.push_back(alg->right_mult(j));
  return RightModule::trusted(alg, alg->dim(), std::move(action));
}

/// Module homomorphism M -> N stored as a dim M x dim N matrix.
struct ModuleMap {
  std::shared_ptr<const RightModule> source;
  std::shared_ptr<const RightModule> target;
  Matrix matrix;
};

inline bool is_module_map(const RightModule& m, const RightModule& n, const Matrix& f) {
  if (f.rows() != m.dim() || f.cols() != n.dim()) return false;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    if (!(m.action(i) * f == f * n.action(i))) return false;
  return true;
}

inline ModuleMap make_map(const RightModule& m, const RightModule& n, Matrix f) {
  if (!m.same_parent(n)) throw std::invalid_argument("modules over different algebras");
  if (!is_module_map(m, n, f)) throw std::invalid_argument("matrix does not intertwine the actions");
  return {std::make_shared<const RightModule>(m), std::make_shared<const RightModule>(n), std::move(f)};
}

/// Basis of Hom(M, N): all matrices F with A_g^M F = F A_g^N for every
/// algebra generator g.
inline std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n) {
  if (!m.same_parent(n)) throw std::invalid_argument("hom_space: modules over different algebras");
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  const auto& field = m.field();
  std::vector<Matrix> out;
  if (dm == 0 || dn == 0) return out;
  const std::size_t vars = dm * dn;
  EchelonBasis eqs(field, vars);
  std::vector<Elem> row(vars);
  for (auto g : m.algebra().generators()) {
    const Matrix& a = m.action(g);
    const Matrix& b = n.action(g);
    // (A F - F B)[r][c] = sum_k A[r][k] F[k][c] - sum_k F[r][k] B[k][c]
    for (std::size_t r = 0; r < dm; ++r) {
      for (std::size_t c = 0; c < dn; ++c) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t k = 0; k < dm; ++k)
          if (a(r, k)) row[k * dn + c] = field.add(row[k * dn + c], a(r, k));
        for (std::size_t k = 0; k < dn; ++k)
          if (b(k, c)) row[r * dn + k] = field.sub(row[r * dn + k], b(k, c));
        eqs.insert(row);
        if (eqs.rank() == vars) return out;
      }
    }
  }
  const Matrix null = eqs.nullspace();
  for (std::size_t s = 0; s < null.rows(); ++s) {
    Matrix f(field, dm, dn);
    for (std::size_t v = 0; v < vars; ++v) f(v / dn, v % dn) = null(s, v);
    out.push_back(std::move(f));
  }
  return out;
}

/// Flattens matrices of a common shape into the rows of one matrix.
inline Matrix flatten(const std::vector<Matrix>& maps, PrimeField field, std::size_t width) {
  Matrix out(field, maps.size(), width);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::size_t k = 0;
    for (std::size_t r = 0; r < maps[i].rows(); ++r)
      for (std::size_t c = 0; c < maps[i].cols(); ++c) out(i, k++) = maps[i](r, c);
  }
  return out;
}

/// Combination sum_t coeff[t] * basis[t].
inline Matrix combine(const std::vector<Matrix>& basis, std::span<const Elem> coeff, PrimeField field,
                      std::size_t rows, std::size_t cols) {
  Matrix out(field, rows, cols);
  for (std::size_t t = 0; t < basis.size(); ++t) out.add_scaled(basis[t], coeff[t]);
  return out;
}

/// Submodule of M spanned by the rows of `span` (coordinates in M). The
/// result carries a basis in echelon form; `inclusion` maps it into M.
struct Submodule {
  RightModule module;
  Matrix inclusion;
};

/// Smallest submodule containing the rows of `gens`.
inline Matrix generated_subspace(const RightModule& m, const Matrix& gens) {
  EchelonBasis span(m.field(), m.dim());
  std::vector<std::vector<Elem>> frontier;
  for (std::size_t r = 0; r < gens.rows(); ++r) {
    if (span.insert(gens.row(r))) frontier.emplace_back(gens.row(r).begin(), gens.row(r).end());
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& v : frontier) {
      Matrix vm(m.field(), 1, m.dim());
      std::copy(v.begin(), v.end(), vm.row(0).begin());
      for (auto g : m.algebra().generators()) {
        Matrix w = vm * m.action(g);
        if (span.insert(w.row(0))) next.emplace_back(w.row(0).begin(), w.row(0).end());
      }
    }
    frontier = std::move(next);
  }
  return span.basis();
}

/// Restricts the action of M to the span of the rows of `basis`, which must
/// be linearly independent and closed under the action.
inline Submodule submodule(const RightModule& m, const Matrix& basis) {
  const Matrix b = row_space(basis);
  if (b.rows() != basis.rows()) throw std::invalid_argument("submodule basis is not independent");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    auto x = b.rows() == 0 ? std::optional<Matrix>(Matrix(m.field(), 0, 0)) : solve_left(b, b * m.action(i));
    if (!x) throw std::invalid_argument("subspace is not a submodule");
    action.push_back(std::move(*x));
  }
  return {RightModule::trusted(m.parent(), b.rows(), std::move(action)), b};
}

/// M / N for N spanned by rows of `sub`; `projection` maps M onto the
/// quotient. The quotient basis is the images of the standard basis vectors
/// of M at the non-pivot columns of the echelon form of N.
struct Quotient {
  RightModule module;
  Matrix projection;
};

inline Quotient quotient(const RightModule& m, const Matrix& sub) {
  const auto& field = m.field();
  EchelonBasis n(field, m.dim());
  for (std::size_t r = 0; r < sub.rows(); ++r) n.insert(sub.row(r));
  // N must be a submodule.
  for (std::size_t r = 0; r < sub.rows(); ++r) {
    Matrix v(field, 1, m.dim());
    std::copy(sub.row(r).begin(), sub.row(r).end(), v.row(0).begin());
    for (auto g : m.algebra().generators())
      if (!n.contains((v * m.action(g)).row(0))) throw std::invalid_argument("quotient by a non-submodule");
  }
  std::vector<bool> pivot(m.dim(), false);
  for (auto p : n.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!pivot[c]) keep.push_back(c);
  const std::size_t q = keep.size();
  Matrix proj(field, m.dim(), q);
  for (std::size_t k = 0; k < m.dim(); ++k) {
    std::vector<Elem> v(m.dim(), 0);
    v[k] = 1;
    n.reduce(v);
    for (std::size_t t = 0; t < q; ++t) proj(k, t) = v[keep[t]];
  }
  const Matrix lift = Matrix::identity(field, m.dim()).select_rows(keep);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) action.push_back(lift * m.action(i) * proj);
  return {RightModule::trusted(m.parent(), q, std::move(action)), std::move(proj)};
}

/// M J, as a basis of rows in M's coordinates.
inline Matrix radical_of(const RightModule& m) {
  EchelonBasis span(m.field(), m.dim());
  for (auto r : m.algebra().radical()) {
    const Matrix& a = m.action(r);
    for (std::size_t i = 0; i < a.rows(); ++i) span.insert(a.row(i));
  }
  return span.basis();
}

/// M J^k as rows in M's coordinates (k = 0 gives M).
inline Matrix radical_power(const RightModule& m, int k) {
  Matrix current = Matrix::identity(m.field(), m.dim());
  for (int step = 0; step < k && current.rows() > 0; ++step) {
    EchelonBasis span(m.field(), m.dim());
    for (auto r : m.algebra().radical()) {
      const Matrix img = current * m.action(r);
      for (std::size_t i = 0; i < img.rows(); ++i) span.insert(img.row(i));
    }
    current = span.basis();
  }
  return current;
}

inline std::size_t top_dimension(const RightModule& m) { return m.dim() - radical_of(m).rows(); }

/// dim(M / M J) == 1; such a module is indecomposable.
inline bool has_simple_top(const RightModule& m) { return top_dimension(m) == 1; }

/// e A for the idempotent with the given basis index, as a submodule of A_A.
inline Submodule projective_at(const AlgebraPtr& alg, std::size_t idempotent_basis) {
  const RightModule reg = regular_module(alg);
  Matrix gens(alg->field(), 1, alg->dim());
  gens(0, idempotent_basis) = 1;
  return submodule(reg, generated_subspace(reg, gens));
}

/// Simple top of e A.
inline RightModule simple_at(const AlgebraPtr& alg, std::size_t idempotent_basis) {
  const Submodule p = projective_at(alg, idempotent_basis);
  return quotient(p.module, radical_of(p.module)).module;
}

struct DirectSum {
  RightModule module;
  std::vector<std::size_t> offsets;  // start of each summand in the sum's basis
};

inline DirectSum direct_sum(const std::vector<RightModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no modules");
  const auto& alg = parts.front().parent();
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!p.same_parent(parts.front())) throw std::invalid_argument("direct_sum over different algebras");
    offsets.push_back(total);
    total += p.dim();
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(i));
    action.push_back(block_diagonal(blocks, alg->field()));
  }
  return {RightModule::trusted(alg, total, std::move(action)), std::move(offsets)};
}

enum class IsoResult { isomorphic, not_isomorphic, undetermined };

inline const char* to_string(IsoResult r) {
  switch (r) {
    case IsoResult::isomorphic: return "isomorphic";
    case IsoResult::not_isomorphic: return "not isomorphic";
    case IsoResult::undetermined: return "undetermined";
  }
  return "?";
}

struct IsoOptions {
  std::uint64_t seed = 0x5eed;
  int draws = 64;
};

/// Randomized isomorphism test: draws random elements of Hom(M, N) and
/// reports isomorphic as soon as one is invertible. Different dimensions,
/// dimension vectors or an empty Hom space prove non-isomorphism; failing
/// every draw otherwise reports undetermined.
inline IsoResult isomorphic(const RightModule& m, const RightModule& n, IsoOptions opt = {}) {
  if (!m.same_parent(n)) throw std::invalid_argument("isomorphic: modules over different algebras");
  if (m.dim() != n.dim()) return IsoResult::not_isomorphic;
  if (m.dim() == 0) return IsoResult::isomorphic;
  if (m.dimension_vector() != n.dimension_vector()) return IsoResult::not_isomorphic;
  const auto basis = hom_space(m, n);
  if (basis.empty()) return IsoResult::not_isomorphic;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Elem> dist(0, m.field().modulus() - 1);
  std::vector<Elem> coeff(basis.size());
  for (int d = 0; d < opt.draws; ++d) {
    for (auto& c : coeff) c = dist(rng);
    if (rank(combine(basis, coeff, m.field(), m.dim(), n.dim())) == m.dim()) return IsoResult::isomorphic;
  }
  return IsoResult::undetermined;
}

}  // namespace tiltcat::engine
