#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "repcomp/field.hpp"

namespace repcomp {

// Dense matrix over a field F, row-major. Zero-by-n and n-by-zero matrices
// are legal everywhere; they show up for 0-dimensional representations.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() : field_(F_default()), rows_(0), cols_(0) {}
  Matrix(F field, size_t rows, size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(F field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(F field, std::initializer_list<std::initializer_list<long>> rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged rows");
      size_t j = 0;
      for (long v : row) m.at(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  const F& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Elem& at(size_t r, size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const Elem& at(size_t r, size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const Elem& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!field_.eq(data_[i], o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-() const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.neg(data_[i]);
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (field_.is_zero(a)) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
      }
    return r;
  }

  Matrix scaled(const Elem& c) const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(data_[i], c);
    return r;
  }

  Matrix transpose() const {
    Matrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    Matrix r(field_, rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] >= rows_) throw std::out_of_range("row index out of range");
      for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw std::out_of_range("column index out of range");
        r.at(i, j) = at(rows[i], cols[j]);
      }
    }
    return r;
  }

  // block at (r0, c0) of the given shape
  Matrix block(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
    assert(r0 + nrows <= rows_ && c0 + ncols <= cols_);
    Matrix r(field_, nrows, ncols);
    for (size_t i = 0; i < nrows; ++i)
      for (size_t j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
  }

  void set_block(size_t r0, size_t c0, const Matrix& b) {
    assert(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_);
    for (size_t i = 0; i < b.rows_; ++i)
      for (size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
  }

  static Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    assert(a.rows_ == b.rows_ && c.rows_ == d.rows_);
    assert(a.cols_ == c.cols_ && b.cols_ == d.cols_);
    Matrix r(a.field_, a.rows_ + c.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    r.set_block(a.rows_, 0, c);
    r.set_block(a.rows_, a.cols_, d);
    return r;
  }

  static Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, a.cols_, b);
    return r;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_);
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
  }

  std::vector<Elem> row(size_t r) const {
    std::vector<Elem> v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
  }
  std::vector<Elem> col(size_t c) const {
    std::vector<Elem> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
  }

  static Matrix col_vector(F field, const std::vector<Elem>& v) {
    Matrix m(field, v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + field_.to_string(at(i, j));
    }
    return s + "]";
  }

 private:
  static F F_default() {
    if constexpr (F::is_prime_field) return F(2);
    else return F();
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  F field_;
  size_t rows_, cols_;
  std::vector<Elem> data_;
};

}  // namespace repcomp
