#include "invdiff/linalg.hpp"

#include <stdexcept>

namespace invdiff {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussRational(1);
  return m;
}

void Matrix::append_row(const Vector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    const GaussRational inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussRational f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> nullspace(Matrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = GaussRational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector SpanBuilder::reduce(Vector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto p = pivots_[k];
    if (v[p].is_zero()) continue;
    const GaussRational f = v[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
    }
  }
  return v;
}

bool SpanBuilder::contains(const Vector& v) const {
  const Vector r = reduce(v);
  for (const auto& x : r) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool SpanBuilder::add(const Vector& v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder::add: dimension mismatch");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const GaussRational inv = r[p].inverse();
  for (std::size_t j = p; j < dim_; ++j) r[j] *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const GaussRational f = row[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!r[j].is_zero()) row[j] -= f * r[j];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace invdiff
