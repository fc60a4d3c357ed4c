#pragma once

#include "gfcech/scalar.hpp"

#include <optional>
#include <vector>

namespace gfcech {

/* Dense exact matrix over the coefficient field, row-major. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, int rows, int cols);
  static Matrix identity(Field f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }
  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix hcat(const Matrix& o) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

int rank(const Matrix& m);
/* Columns form a basis of the kernel, from the reduced row echelon form with
   free variables set to one in column order. */
Matrix kernel_basis(const Matrix& m);
/* dim of the image of X in coker of the column span of Y: rank[X|Y] - rank Y. */
int rank_modulo(const Matrix& x, const Matrix& y);
/* One solution of A z = b (free variables zero), or nullopt. */
std::optional<std::vector<Scalar>> solve_linear(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace gfcech
