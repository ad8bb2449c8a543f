#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tiltcat/engine/prime_field.hpp"

namespace tiltcat::engine {

/// Dense matrix over a prime field, row-major.
///
/// Vectors are rows throughout the engine: a linear map V -> W with
/// dim V = r and dim W = c is an r x c matrix acting by v |-> v * M, so
/// composition "first f then g" is the product F * G.
class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix from integer rows, reducing each entry mod p.
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows,
                          std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
    }
    return m;
  }

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
      throw std::out_of_range("matrix block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      std::copy_n(row(idx[i]).begin(), cols_, m.row(i).begin());
    return m;
  }

  void append_row(std::span<const Elem> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    const auto& f = a.field_;
    const std::uint64_t p = f.modulus();
    Matrix out(f, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t x = a(r, k);
        if (x == 0) continue;
        const Elem* brow = b.data_.data() + k * b.cols_;
        for (std::size_t c = 0; c < b.cols_; ++c) acc[c] = (acc[c] + x * brow[c]) % p;
      }
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) = static_cast<Elem>(acc[c]);
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return out;
  }

  Matrix scaled(Elem s) const {
    Matrix out = *this;
    for (auto& e : out.data_) e = field_.mul(e, s);
    return out;
  }

  /// this += s * other
  void add_scaled(const Matrix& other, Elem s) {
    check_same_shape(other);
    if (s == 0) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] = field_.add(data_[i], field_.mul(other.data_[i], s));
  }

  static Matrix random(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(field, rows, cols);
    std::uniform_int_distribution<Elem> dist(0, field.modulus() - 1);
    for (auto& e : m.data_) e = dist(rng);
    return m;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << '[';
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
      os << "]\n";
    }
    return os;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  PrimeField field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Incrementally maintained reduced row echelon basis of a row space.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t width) : field_(field), width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis in place; returns true if v ends up zero.
  bool reduce(std::vector<Elem>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (c == 0) continue;
      const auto& row = rows_[i];
      for (std::size_t k = pivots_[i]; k < width_; ++k)
        if (row[k]) v[k] = field_.sub(v[k], field_.mul(c, row[k]));
    }
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
  }

  bool contains(std::span<const Elem> v) const {
    std::vector<Elem> w(v.begin(), v.end());
    return reduce(w);
  }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(std::span<const Elem> v) {
    if (v.size() != width_) throw std::invalid_argument("echelon width mismatch");
    std::vector<Elem> w(v.begin(), v.end());
    if (reduce(w)) return false;
    std::size_t piv = 0;
    while (w[piv] == 0) ++piv;
    const Elem inv = field_.inv(w[piv]);
    for (auto& e : w) e = field_.mul(e, inv);
    // keep fully reduced: eliminate the new pivot from existing rows
    for (auto& row : rows_) {
      const Elem c = row[piv];
      if (c == 0) continue;
      for (std::size_t k = piv; k < width_; ++k)
        if (w[k]) row[k] = field_.sub(row[k], field_.mul(c, w[k]));
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
    return true;
  }

  Matrix basis() const {
    Matrix m(field_, rows_.size(), width_);
    for (std::size_t i = 0; i < rows_.size(); ++i) std::copy(rows_[i].begin(), rows_[i].end(), m.row(i).begin());
    return m;
  }

  /// Basis of {x : x . r = 0 for every basis row r}, i.e. the right nullspace
  /// of the matrix whose rows are this basis. Returned as rows.
  Matrix nullspace() const {
    std::vector<bool> is_pivot(width_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    Matrix out(field_, width_ - rows_.size(), width_);
    std::size_t k = 0;
    for (std::size_t free = 0; free < width_; ++free) {
      if (is_pivot[free]) continue;
      out(k, free) = 1;
      for (std::size_t i = 0; i < rows_.size(); ++i) out(k, pivots_[i]) = field_.neg(rows_[i][free]);
      ++k;
    }
    return out;
  }

 private:
  PrimeField field_;
  std::size_t width_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const Matrix& m) {
  EchelonBasis e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

/// Reduced row echelon basis of the row space of m.
inline Matrix row_space(const Matrix& m) {
  EchelonBasis e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.basis();
}

/// Basis (as rows) of {x column vector : m x = 0}.
inline Matrix nullspace(const Matrix& m) {
  EchelonBasis e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.nullspace();
}

/// Basis (as rows) of {y : y m = 0}.
inline Matrix left_kernel(const Matrix& m) { return nullspace(m.transpose()); }

/// Solves x * a = b for a row vector (or stacked rows) x. Returns nullopt when
/// some row of b is outside the row space of a.
inline std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("solve_left: column mismatch");
  const auto& f = a.field();
  const std::size_t n = a.rows();
  const std::size_t w = a.cols();
  // Eliminate on [a | I] to track combinations of the rows of a.
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(w + n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), rows[r].begin());
    rows[r][w + r] = 1;
  }
  std::vector<std::size_t> piv_col;
  std::vector<std::size_t> piv_row;
  std::size_t next = 0;
  for (std::size_t c = 0; c < w && next < n; ++c) {
    std::size_t r = next;
    while (r < n && rows[r][c] == 0) ++r;
    if (r == n) continue;
    std::swap(rows[r], rows[next]);
    const Elem inv = f.inv(rows[next][c]);
    for (auto& e : rows[next]) e = f.mul(e, inv);
    for (std::size_t o = 0; o < n; ++o) {
      if (o == next || rows[o][c] == 0) continue;
      const Elem s = rows[o][c];
      for (std::size_t k = 0; k < w + n; ++k)
        if (rows[next][k]) rows[o][k] = f.sub(rows[o][k], f.mul(s, rows[next][k]));
    }
    piv_col.push_back(c);
    piv_row.push_back(next);
    ++next;
  }
  Matrix x(f, b.rows(), n);
  for (std::size_t br = 0; br < b.rows(); ++br) {
    std::vector<Elem> rem(b.row(br).begin(), b.row(br).end());
    std::vector<Elem> comb(n, 0);
    for (std::size_t i = 0; i < piv_col.size(); ++i) {
      const Elem c = rem[piv_col[i]];
      if (c == 0) continue;
      const auto& row = rows[piv_row[i]];
      for (std::size_t k = 0; k < w; ++k)
        if (row[k]) rem[k] = f.sub(rem[k], f.mul(c, row[k]));
      for (std::size_t k = 0; k < n; ++k)
        if (row[w + k]) comb[k] = f.add(comb[k], f.mul(c, row[w + k]));
    }
    if (std::any_of(rem.begin(), rem.end(), [](Elem e) { return e != 0; })) return std::nullopt;
    std::copy(comb.begin(), comb.end(), x.row(br).begin());
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_left(m, Matrix::identity(m.field(), m.rows()));
}

/// Stacks matrices with equal column counts vertically.
inline Matrix vstack(const std::vector<Matrix>& parts, PrimeField field, std::size_t cols) {
  Matrix out(field, 0, cols);
  for (const auto& p : parts) {
    if (p.cols() != cols && p.rows() != 0) throw std::invalid_argument("vstack column mismatch");
    for (std::size_t r = 0; r < p.rows(); ++r) out.append_row(p.row(r));
  }
  return out;
}

/// Block-diagonal matrix.
inline Matrix block_diagonal(const std::vector<Matrix>& blocks, PrimeField field) {
  std::size_t nr = 0;
  std::size_t nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  Matrix out(field, nr, nc);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace tiltcat::engine
