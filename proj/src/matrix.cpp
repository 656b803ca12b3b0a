#include "gradedq/matrix.hpp"

namespace gradedq {

Matrix Matrix::identity(int n, int nvars) {
  Matrix m(n, n, nvars);
  for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction::constant(nvars, 1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("Matrix: shape mismatch");
  Matrix r(rows_, o.cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      RationalFunction acc(nvars_);
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix: shape mismatch");
  Matrix r(rows_, cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix: shape mismatch");
  Matrix r(rows_, cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RationalFunction Matrix::det() const {
  if (rows_ != cols_) throw Error("Matrix::det: not square");
  int n = rows_;
  if (n == 0) return RationalFunction::constant(nvars_, 1);
  if (n == 1) return at(0, 0);
  // Cofactor expansion along the first row; sizes here stay small.
  RationalFunction acc(nvars_);
  for (int j = 0; j < n; ++j) {
    if (at(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1, nvars_);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = at(r, c);
      }
    }
    RationalFunction term = at(0, j) * minor.det();
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error("Matrix::inverse: not square");
  int n = rows_;
  RationalFunction d = det();
  if (d.is_zero()) throw Error("Matrix::inverse: singular matrix");
  Matrix adj(n, n, nvars_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix minor(n - 1, n - 1, nvars_);
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = at(r, c);
        }
        ++rr;
      }
      RationalFunction cof = minor.det();
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = cof;  // adjugate is the transposed cofactor matrix
    }
  Matrix inv(n, n, nvars_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = adj.at(i, j) / d;
  return inv;
}

}  // namespace gradedq
