#pragma once

#include <vector>

#include "gradedq/rational_function.hpp"

namespace gradedq {

/// Dense matrix of rational functions; exact inverse via adjugate.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), nvars_(0) {}
  Matrix(int rows, int cols, int nvars)
      : rows_(rows), cols_(cols), nvars_(nvars),
        a_(static_cast<std::size_t>(rows * cols), RationalFunction(nvars)) {}

  static Matrix identity(int n, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }

  RationalFunction& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const RationalFunction& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i * cols_ + j)];
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  RationalFunction det() const;
  /// Exact inverse; throws when det == 0.
  Matrix inverse() const;

 private:
  int rows_, cols_, nvars_;
  std::vector<RationalFunction> a_;
};

}  // namespace gradedq
