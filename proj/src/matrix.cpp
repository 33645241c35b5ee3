#include "augcheck/matrix.hpp"

#include <algorithm>

namespace augcheck {

Vector zero_vector(const FieldTag& f, size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const FieldTag& f, size_t n, size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const FieldTag& f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {
  if (!f.computable()) fail(Errc::FieldNotComputable, "no matrices over " + f.name());
}

Matrix Matrix::identity(const FieldTag& f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_int_rows(const FieldTag& f, const std::vector<std::vector<long>>& rows) {
  size_t r = rows.size();
  size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(f, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(Errc::DimensionMismatch, "ragged matrix rows");
    for (size_t j = 0; j < c; ++j) m.set(i, j, Scalar::from_int(f, rows[i][j]));
  }
  return m;
}

void Matrix::set(size_t r, size_t c, Scalar v) {
  if (v.field() != field_) fail(Errc::DimensionMismatch, "entry field mismatch");
  e_[r * cols_ + c] = std::move(v);
}

Matrix Matrix::multiply(const Matrix& o) const {
  if (field_ != o.field_ || cols_ != o.rows_) fail(Errc::DimensionMismatch, "matrix product shape");
  Matrix out(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.set(i, j, out.at(i, j) + a * b);
      }
    }
  return out;
}

Matrix Matrix::add(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::DimensionMismatch, "matrix sum shape");
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix Matrix::subtract(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::DimensionMismatch, "matrix difference shape");
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "matrix-vector shape");
  Vector out = zero_vector(field_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      out[i] = out[i] + a * v[j];
    }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string Matrix::key() const {
  std::string k = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (const Scalar& s : e_) {
    k += s.str();
    k += ',';
  }
  return k;
}

RowSpace::RowSpace(const FieldTag& f, size_t ambient_dim) : field_(f), ambient_(ambient_dim) {}

Vector RowSpace::reduce(Vector v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];  // copy: the loop below overwrites v[pivot]
    if (c.is_zero()) continue;
    for (size_t j = 0; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) v[j] = v[j] - c * rows_[i][j];
  }
  return v;
}

bool RowSpace::insert(Vector v) {
  if (v.size() != ambient_) fail(Errc::DimensionMismatch, "row space ambient dim");
  v = reduce(std::move(v));
  size_t pivot = ambient_;
  for (size_t j = 0; j < ambient_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot == ambient_) return false;
  Scalar lead = v[pivot];
  for (size_t j = pivot; j < ambient_; ++j)
    if (!v[j].is_zero()) v[j] = v[j] / lead;
  // eliminate the new pivot from existing rows, then insert sorted
  for (auto& row : rows_) {
    const Scalar c = row[pivot];  // copy: the loop below overwrites row[pivot]
    if (c.is_zero()) continue;
    for (size_t j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) row[j] = row[j] - c * v[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

bool RowSpace::contains(Vector v) const { return is_zero_vector(reduce(std::move(v))); }

}  // namespace augcheck
