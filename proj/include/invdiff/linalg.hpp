#pragma once

#include "invdiff/scalars.hpp"

#include <cstddef>
#include <vector>

namespace invdiff {

using Vector = std::vector<GaussRational>;

/// Dense row-major matrix over Q(i), sized for desk-scale systems.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const Vector& row);
  Vector flatten() const { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRational> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(Matrix m);

/// Incrementally maintained span; `add` reports whether the vector enlarged it.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return dim_; }

 private:
  Vector reduce(Vector v) const;

  std::size_t dim_;
  // Echelon rows with leading 1 at pivots_[k].
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace invdiff
