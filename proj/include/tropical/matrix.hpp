#pragma once

/**
 * @file matrix.hpp
 * @brief Dense vectors and matrices over the completed max-plus semiring.
 *
 * Besides the semiring operations this header provides the residuation
 * bracket <x|y> (the greatest scalar l with l x <= y) and the Hilbert
 * projective metric built from it.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropical/errors.hpp"
#include "tropical/scalar.hpp"

namespace tropical {

enum class Orientation : std::uint8_t { Row, Column };

inline std::string_view to_string(Orientation o) noexcept { return o == Orientation::Row ? "row" : "col"; }

inline Orientation parse_orientation(std::string_view s) {
  if (s == "row") return Orientation::Row;
  if (s == "col" || s == "column") return Orientation::Column;
  throw ParseError("unknown orientation '" + std::string(s) + "' (expected row or col)");
}

class Vector {
 public:
  Vector(std::vector<Scalar> entries, Orientation orientation = Orientation::Column)
      : entries_(std::move(entries)), orientation_(orientation) {
    if (entries_.empty()) throw ShapeError("vector must have at least one entry");
  }
  Vector(std::initializer_list<Scalar> entries, Orientation orientation = Orientation::Column)
      : Vector(std::vector<Scalar>(entries), orientation) {}

  /// The zero vector (all -inf) of dimension `dim`.
  static Vector zero(std::size_t dim, Orientation orientation = Orientation::Column) {
    return Vector(std::vector<Scalar>(dim), orientation);
  }

  std::size_t dim() const noexcept { return entries_.size(); }
  Orientation orientation() const noexcept { return orientation_; }

  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  Vector transposed() const {
    return Vector(entries_, orientation_ == Orientation::Row ? Orientation::Column : Orientation::Row);
  }
  Vector as(Orientation o) const { return Vector(entries_, o); }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_neg_inf(); });
  }

  Domain domain() const {
    Domain d = Domain::FT;
    for (const auto& s : entries_) d = join(d, domain_of(s));
    return d;
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
  Orientation orientation_;
};

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
  }

  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  /// The tropical identity: 0 on the diagonal, -inf elsewhere.
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(0);
    return m;
  }

  static Matrix from_rows(std::span<const Vector> rows) {
    if (rows.empty()) throw ShapeError("no rows");
    Matrix m(rows.size(), rows[0].dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].dim() != m.cols_) throw ShapeError("rows of unequal length");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(std::span<const Vector> cols) {
    if (cols.empty()) throw ShapeError("no columns");
    Matrix m(cols[0].dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].dim() != m.rows_) throw ShapeError("columns of unequal length");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  /// A vector viewed as a 1 x n or n x 1 matrix according to its orientation.
  static Matrix from_vector(const Vector& v) {
    return v.orientation() == Orientation::Row ? from_rows(std::span(&v, 1)) : from_columns(std::span(&v, 1));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_), Orientation::Row);
  }
  Vector col(std::size_t j) const {
    std::vector<Scalar> e;
    e.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) e.push_back((*this)(i, j));
    return Vector(std::move(e), Orientation::Column);
  }
  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  std::vector<Vector> column_vectors() const {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
  }

  /// A 1 x n or n x 1 matrix as a vector; anything else is a shape error.
  Vector to_vector() const {
    if (rows_ == 1) return row(0);
    if (cols_ == 1) return col(0);
    throw ShapeError("expected a 1 x n or n x 1 matrix, got " + std::to_string(rows_) + " x " + std::to_string(cols_));
  }

  Domain domain() const {
    Domain d = Domain::FT;
    for (const auto& s : data_) d = join(d, domain_of(s));
    return d;
  }

  std::span<const Scalar> entries() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Matrix() = default;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

namespace detail {

inline std::string shape_str(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

inline void require_same_dim(const Vector& x, const Vector& y, const char* op) {
  if (x.dim() != y.dim()) {
    throw ShapeError(std::string(op) + ": dimension mismatch (" + std::to_string(x.dim()) + " vs " +
                     std::to_string(y.dim()) + ")");
  }
}

inline void require_same_shape(const Vector& x, const Vector& y, const char* op) {
  require_same_dim(x, y, op);
  if (x.orientation() != y.orientation()) throw ShapeError(std::string(op) + ": orientation mismatch");
}

}  // namespace detail

/// Max-plus matrix product.
inline Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mul: cannot multiply " + detail::shape_str(a) + " by " + detail::shape_str(b));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, otimes(a(i, k), b(k, j)));
      c(i, j) = std::move(acc);
    }
  }
  return c;
}

/// Matrix times column vector.
inline Vector mul(const Matrix& a, const Vector& x) {
  if (x.orientation() != Orientation::Column) throw ShapeError("mul: expected a column vector on the right");
  return mul(a, Matrix::from_vector(x)).col(0);
}

/// Row vector times matrix.
inline Vector mul(const Vector& x, const Matrix& a) {
  if (x.orientation() != Orientation::Row) throw ShapeError("mul: expected a row vector on the left");
  return mul(Matrix::from_vector(x), a).row(0);
}

/// Row vector times column vector: the scalar (+)_i z_i (x) x_i.
inline Scalar dot(const Vector& z, const Vector& x) {
  detail::require_same_dim(z, x, "dot");
  Scalar acc;
  for (std::size_t i = 0; i < z.dim(); ++i) acc = oplus(acc, otimes(z[i], x[i]));
  return acc;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline Vector scale(const Scalar& lambda, const Vector& x) {
  std::vector<Scalar> e;
  e.reserve(x.dim());
  for (const auto& xi : x) e.push_back(otimes(lambda, xi));
  return Vector(std::move(e), x.orientation());
}

inline Vector oplus(const Vector& x, const Vector& y) {
  detail::require_same_shape(x, y, "oplus");
  std::vector<Scalar> e;
  e.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) e.push_back(oplus(x[i], y[i]));
  return Vector(std::move(e), x.orientation());
}

inline Matrix oplus(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("oplus: matrix shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = oplus(a(i, j), b(i, j));
  return c;
}

/// Componentwise order.
inline bool leq(const Vector& x, const Vector& y) {
  detail::require_same_shape(x, y, "leq");
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (!(x[i] <= y[i])) return false;
  return true;
}

/// Componentwise negation.
inline Vector neg(const Vector& x) {
  std::vector<Scalar> e;
  e.reserve(x.dim());
  for (const auto& xi : x) e.push_back(neg(xi));
  return Vector(std::move(e), x.orientation());
}

/// <x|y> = -((+)_i x_i (x) (-y_i)), the largest l with l x <= y.
/// Orientation is ignored so rows and columns can be compared directly.
inline Scalar bracket(const Vector& x, const Vector& y) {
  detail::require_same_dim(x, y, "bracket");
  Scalar acc;
  for (std::size_t i = 0; i < x.dim(); ++i) acc = oplus(acc, otimes(x[i], neg(y[i])));
  return neg(acc);
}

/// The finite l with y = l x, if one exists.
inline std::optional<Scalar> finite_ratio(const Vector& x, const Vector& y) {
  detail::require_same_dim(x, y, "finite_ratio");
  std::optional<mpq_class> ratio;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].kind() != y[i].kind()) return std::nullopt;
    if (!x[i].is_finite()) continue;
    mpq_class d = y[i].value() - x[i].value();
    if (ratio && cmp(*ratio, d) != 0) return std::nullopt;
    ratio = std::move(d);
  }
  return ratio ? Scalar(*ratio) : Scalar(0);
}

/// Hilbert projective metric: 0 for finite multiples, else -(<x|y> (x) <y|x>).
/// The result is a nonnegative rational or +inf.
inline Scalar hilbert(const Vector& x, const Vector& y) {
  detail::require_same_dim(x, y, "hilbert");
  if (finite_ratio(x, y)) return Scalar(0);
  Scalar d = neg(otimes(bracket(x, y), bracket(y, x)));
  if (d < Scalar(0)) throw InternalError("hilbert: negative distance " + to_string(d));
  return d;
}

/// Scales x so that its largest finite entry is 0. Vectors with no finite
/// entry, or with a +inf entry, are returned unchanged.
inline Vector proj_normalize(const Vector& x) {
  std::optional<Scalar> top;
  for (const auto& xi : x) {
    if (xi.is_pos_inf()) return x;
    if (xi.is_finite() && (!top || *top < xi)) top = xi;
  }
  if (!top) return x;
  return scale(neg(*top), x);
}

}  // namespace tropical
