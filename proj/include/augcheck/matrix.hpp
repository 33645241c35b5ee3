#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "augcheck/field.hpp"

namespace augcheck {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldTag& f, size_t n);
Vector unit_vector(const FieldTag& f, size_t n, size_t i);
bool is_zero_vector(const Vector& v);

/// Dense row-major matrix over a computable field.  Immutable in spirit:
/// operations return fresh matrices.
class Matrix {
 public:
  Matrix(const FieldTag& f, size_t rows, size_t cols);  // zero matrix
  static Matrix identity(const FieldTag& f, size_t n);
  static Matrix from_int_rows(const FieldTag& f, const std::vector<std::vector<long>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldTag& field() const { return field_; }

  const Scalar& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  void set(size_t r, size_t c, Scalar v);

  Matrix multiply(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix subtract(const Matrix& o) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;  // M * v
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Canonical textual key, used for deduplication and determinism checks.
  std::string key() const;

 private:
  FieldTag field_;
  size_t rows_, cols_;
  std::vector<Scalar> e_;
};

/// A subspace kept as a fully reduced row-echelon basis (pivot columns
/// strictly increasing, pivot entries 1, pivots eliminated from every other
/// row).  The basis is therefore canonical for the subspace.
class RowSpace {
 public:
  RowSpace(const FieldTag& f, size_t ambient_dim);

  /// Reduces v against the basis; inserts the residue if nonzero.
  /// Returns true if the dimension grew.
  bool insert(Vector v);
  bool contains(Vector v) const;

  size_t dim() const { return rows_.size(); }
  size_t ambient_dim() const { return ambient_; }
  const std::vector<Vector>& basis() const { return rows_; }

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_ && a.pivots_ == b.pivots_;
  }

 private:
  Vector reduce(Vector v) const;

  FieldTag field_;
  size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace augcheck
