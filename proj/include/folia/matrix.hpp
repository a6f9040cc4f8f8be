#pragma once

#include <cstddef>
#include <vector>

#include "folia/rational.hpp"

namespace folia {

/// Dense matrix over exact rationals. Dimensions are fixed at construction;
/// entries are mutable only through set() so that shape invariants hold.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix from_rows(const std::vector<VecR>& rows);
  static Matrix column(const VecR& v);
  /// Diagonal matrix from a vector of entries.
  static Matrix diag(const VecR& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Rat& v) { data_[i * cols_ + j] = v; }

  VecR row(std::size_t i) const;
  VecR col(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rat& c) const;
  VecR apply(const VecR& v) const;

  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;
  Rat trace() const;
  /// Frobenius inner product tr(A^T B).
  Rat frob(const Matrix& o) const;

  /// Row-major flattening, used to coordinate-ize spans of matrices.
  VecR flatten() const { return data_; }
  static Matrix unflatten(const VecR& v, std::size_t rows, std::size_t cols);

 private:
  std::size_t rows_, cols_;
  VecR data_;
};

}  // namespace folia
