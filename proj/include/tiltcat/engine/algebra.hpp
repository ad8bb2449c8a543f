#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tiltcat/engine/matrix.hpp"
#include "tiltcat/errors.hpp"

namespace tiltcat::engine {

/// Position of a primitive idempotent in the Harada arrangement:
/// row `row` of block `block`, both 1-based.
struct GridLabel {
  int block = 0;
  int row = 0;
  auto operator<=>(const GridLabel&) const = default;
};

/// A designated primitive idempotent; it is always a basis element.
struct Idempotent {
  std::size_t basis = 0;
  std::optional<GridLabel> label;
};

/// Sparse structure constant: b_left * b_right contributes coeff * b_out.
struct StructureConstant {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t out = 0;
  long long coeff = 0;
};

/// Finite-dimensional associative algebra over F_p given by structure
/// constants in a fixed basis.
///
/// Invariants checked at construction: associativity and unit laws on all
/// basis triples, the designated idempotents are orthogonal idempotents
/// summing to the unit, and the designated radical basis spans a nilpotent
/// two-sided ideal whose quotient has dimension equal to the number of
/// idempotents (so the algebra is basic and split).
class FDAlgebra {
 public:
  FDAlgebra(PrimeField field, std::size_t dim, const std::vector<StructureConstant>& sc,
            std::vector<Elem> unit, std::vector<Idempotent> idempotents,
            std::vector<std::size_t> radical, std::vector<std::string> labels = {})
      : field_(field),
        dim_(dim),
        unit_(std::move(unit)),
        idempotents_(std::move(idempotents)),
        radical_(std::move(radical)),
        labels_(std::move(labels)) {
    if (dim_ == 0) throw construction_rejected("algebra dimension must be positive");
    if (unit_.size() != dim_) throw construction_rejected("unit vector has wrong length");
    for (auto& u : unit_) u = field_.reduce(u);
    if (labels_.empty())
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    if (labels_.size() != dim_) throw construction_rejected("label count differs from dimension");
    right_mult_.assign(dim_, Matrix(field_, dim_, dim_));
    for (const auto& c : sc) {
      if (c.left >= dim_ || c.right >= dim_ || c.out >= dim_)
        throw construction_rejected("structure constant index out of range");
      auto& e = right_mult_[c.right](c.left, c.out);
      e = field_.add(e, field_.reduce(c.coeff));
    }
    validate();
    compute_generators();
  }

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Elem>& unit() const { return unit_; }
  const std::vector<Idempotent>& idempotents() const { return idempotents_; }
  const std::vector<std::size_t>& radical() const { return radical_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Matrix of right multiplication by basis element j on the regular module:
  /// row i holds the coordinates of b_i * b_j.
  const Matrix& right_mult(std::size_t j) const { return right_mult_.at(j); }

  /// Indices of basis elements generating the algebra: the idempotents plus
  /// radical elements spanning J / J^2.
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::vector<Elem> basis_vector(std::size_t i) const {
    std::vector<Elem> v(dim_, 0);
    v.at(i) = 1;
    return v;
  }

  std::vector<Elem> multiply(std::span<const Elem> x, std::span<const Elem> y) const {
    std::vector<Elem> out(dim_, 0);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const auto& rm = right_mult_[j];
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        const Elem s = field_.mul(x[i], y[j]);
        for (std::size_t k = 0; k < dim_; ++k)
          if (rm(i, k)) out[k] = field_.add(out[k], field_.mul(s, rm(i, k)));
      }
    }
    return out;
  }

  /// Nonzero structure constants as sparse triples.
  std::vector<StructureConstant> structure_constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (auto c = right_mult_[j](i, k)) out.push_back({i, j, k, static_cast<long long>(c)});
    return out;
  }

  bool has_grid() const {
    return !idempotents_.empty() &&
           std::all_of(idempotents_.begin(), idempotents_.end(),
                       [](const Idempotent& e) { return e.label.has_value(); });
  }

  /// Basis index of the idempotent labelled (block,row).
  std::size_t grid_idempotent(int block, int row) const {
    for (const auto& e : idempotents_)
      if (e.label && e.label->block == block && e.label->row == row) return e.basis;
    throw std::invalid_argument("no idempotent labelled (" + std::to_string(block) + "," +
                                std::to_string(row) + ")");
  }

  /// Row counts per block, read off the grid labels. Throws when labels are
  /// missing or do not form contiguous rows 1..n_i in blocks 1..m.
  std::vector<int> grid_shape() const {
    if (!has_grid()) throw std::invalid_argument("algebra has no grid labels");
    std::map<int, std::set<int>> rows;
    for (const auto& e : idempotents_) {
      if (!rows[e.label->block].insert(e.label->row).second)
        throw std::invalid_argument("duplicate grid label");
    }
    std::vector<int> shape;
    int expect_block = 1;
    for (const auto& [b, rs] : rows) {
      if (b != expect_block++) throw std::invalid_argument("grid blocks are not 1..m");
      int expect_row = 1;
      for (int r : rs)
        if (r != expect_row++) throw std::invalid_argument("grid rows are not 1..n_i");
      shape.push_back(static_cast<int>(rs.size()));
    }
    return shape;
  }

  bool operator==(const FDAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && unit_ == o.unit_ && radical_ == o.radical_ &&
           right_mult_ == o.right_mult_;
  }

 private:
  void validate() const {
    // Associativity: R_j R_k = sum_t c(j,k,t) R_t.
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        Matrix lhs = right_mult_[j] * right_mult_[k];
        Matrix rhs(field_, dim_, dim_);
        for (std::size_t t = 0; t < dim_; ++t) rhs.add_scaled(right_mult_[t], right_mult_[k](j, t));
        if (!(lhs == rhs))
          throw construction_rejected("structure constants are not associative at (" +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto bi = basis_vector(i);
      if (multiply(unit_, bi) != bi || multiply(bi, unit_) != bi)
        throw construction_rejected("unit law fails for basis element " + std::to_string(i));
    }
    if (idempotents_.empty()) throw construction_rejected("no idempotents designated");
    std::vector<Elem> sum(dim_, 0);
    for (const auto& a : idempotents_) {
      if (a.basis >= dim_) throw construction_rejected("idempotent index out of range");
      const auto ea = basis_vector(a.basis);
      for (const auto& b : idempotents_) {
        const auto prod = multiply(ea, basis_vector(b.basis));
        const auto want = a.basis == b.basis ? ea : std::vector<Elem>(dim_, 0);
        if (prod != want) throw construction_rejected("idempotents are not orthogonal idempotents");
      }
      sum[a.basis] = field_.add(sum[a.basis], 1);
    }
    if (sum != unit_) throw construction_rejected("idempotents do not sum to the unit");

    std::set<std::size_t> rad(radical_.begin(), radical_.end());
    if (rad.size() != radical_.size()) throw construction_rejected("repeated radical index");
    for (auto r : radical_)
      if (r >= dim_) throw construction_rejected("radical index out of range");
    for (const auto& e : idempotents_)
      if (rad.count(e.basis)) throw construction_rejected("idempotent lies in the radical");
    if (dim_ - radical_.size() != idempotents_.size())
      throw construction_rejected("radical quotient dimension differs from idempotent count");
    auto in_rad = [&](const std::vector<Elem>& v) {
      for (std::size_t k = 0; k < dim_; ++k)
        if (v[k] && !rad.count(k)) return false;
      return true;
    };
    for (auto r : radical_) {
      const auto br = basis_vector(r);
      for (std::size_t i = 0; i < dim_; ++i) {
        const auto bi = basis_vector(i);
        if (!in_rad(multiply(bi, br)) || !in_rad(multiply(br, bi)))
          throw construction_rejected("radical span is not a two-sided ideal");
      }
    }
    // Nilpotency: J^k = 0 for some k <= dim.
    std::vector<std::vector<Elem>> power;
    for (auto r : radical_) power.push_back(basis_vector(r));
    for (std::size_t step = 0; step <= dim_ && !power.empty(); ++step) {
      EchelonBasis next(field_, dim_);
      for (const auto& x : power)
        for (auto r : radical_) next.insert(multiply(x, basis_vector(r)));
      power.clear();
      const Matrix b = next.basis();
      for (std::size_t i = 0; i < b.rows(); ++i) power.emplace_back(b.row(i).begin(), b.row(i).end());
    }
    if (!power.empty()) throw construction_rejected("radical span is not nilpotent");
  }

  void compute_generators() {
    for (const auto& e : idempotents_) generators_.push_back(e.basis);
    EchelonBasis span(field_, dim_);
    for (auto r : radical_)
      for (auto s : radical_) span.insert(multiply(basis_vector(r), basis_vector(s)));
    for (auto r : radical_)
      if (span.insert(basis_vector(r))) generators_.push_back(r);
  }

  PrimeField field_;
  std::size_t dim_;
  std::vector<Elem> unit_;
  std::vector<Idempotent> idempotents_;
  std::vector<std::size_t> radical_;
  std::vector<std::string> labels_;
  std::vector<Matrix> right_mult_;
  std::vector<std::size_t> generators_;
};

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

/// T_n(F_p): basis E_ab (a <= b) in lexicographic order, idempotents E_jj
/// labelled as rows 1..n of a single block.
inline AlgebraPtr upper_triangular_algebra(int n, std::uint32_t p = 101) {
  if (n < 1) throw std::invalid_argument("upper_triangular_algebra: n must be positive");
  PrimeField field(p);
  std::map<std::pair<int, int>, std::size_t> index;
  std::vector<std::string> labels;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      index[{a, b}] = labels.size();
      labels.push_back("E" + std::to_string(a) + "," + std::to_string(b));
    }
  std::vector<StructureConstant> sc;
  for (const auto& [ab, i] : index)
    for (const auto& [cd, j] : index)
      if (ab.second == cd.first) sc.push_back({i, j, index.at({ab.first, cd.second}), 1});
  std::vector<Elem> unit(labels.size(), 0);
  std::vector<Idempotent> idem;
  std::vector<std::size_t> rad;
  for (const auto& [ab, i] : index) {
    if (ab.first == ab.second) {
      unit[i] = 1;
      idem.push_back({i, GridLabel{1, ab.first}});
    } else {
      rad.push_back(i);
    }
  }
  return std::make_shared<const FDAlgebra>(field, labels.size(), sc, unit, idem, rad, labels);
}

/// Path algebra of the cyclic quiver 0 -> 1 -> ... -> m-1 -> 0 modulo all
/// paths of length `loewy`. Basis element (v, len) is the path of length len
/// starting at v; index len*m + v. For m = 1 this is F_p[x]/(x^loewy).
/// Idempotent at vertex v carries the label (v+1, 1).
inline AlgebraPtr nakayama_qf(int m, int loewy, std::uint32_t p = 101) {
  if (m < 1 || loewy < 1) throw std::invalid_argument("nakayama_qf: m and loewy length must be positive");
  PrimeField field(p);
  const auto idx = [m](int v, int len) { return static_cast<std::size_t>(len * m + v); };
  const std::size_t dim = static_cast<std::size_t>(m) * static_cast<std::size_t>(loewy);
  std::vector<StructureConstant> sc;
  std::vector<std::string> labels(dim);
  for (int len = 0; len < loewy; ++len)
    for (int v = 0; v < m; ++v) {
      labels[idx(v, len)] = len == 0 ? "e" + std::to_string(v)
                                     : "p" + std::to_string(v) + "^" + std::to_string(len);
      for (int len2 = 0; len + len2 < loewy; ++len2) {
        const int w = (v + len) % m;
        sc.push_back({idx(v, len), idx(w, len2), idx(v, len + len2), 1});
      }
    }
  std::vector<Elem> unit(dim, 0);
  std::vector<Idempotent> idem;
  std::vector<std::size_t> rad;
  for (int v = 0; v < m; ++v) {
    unit[idx(v, 0)] = 1;
    idem.push_back({idx(v, 0), GridLabel{v + 1, 1}});
  }
  for (std::size_t i = static_cast<std::size_t>(m); i < dim; ++i) rad.push_back(i);
  return std::make_shared<const FDAlgebra>(field, dim, sc, unit, idem, rad, labels);
}

}  // namespace tiltcat::engine
