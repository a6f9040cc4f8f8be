#pragma once

#include <optional>
#include <vector>

#include "folia/matrix.hpp"

namespace folia {

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
/// Row space is preserved; rank = number of pivots.
RrefResult rref(const Matrix& m);

/// Independent spanning set of {v : Mv = 0}; size = cols - rank.
std::vector<VecR> kernel_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Inverse of a square nonsingular matrix. Throws InvalidParams if singular.
Matrix inverse(const Matrix& m);

/// Solve Ax = b; empty when inconsistent.
std::optional<VecR> solve(const Matrix& a, const VecR& b);

/// Kronecker product with block layout (A⊗B)[i*p+r, j*q+c] = A[i,j]·B[r,c],
/// matching the copy-major basis ordering used by the diagonal models.
Matrix kron(const Matrix& a, const Matrix& b);

/// Cayley transform (I-S)^{-1}(I+S) of a skew matrix: exactly orthogonal,
/// handy for generating rational conjugators in round-trip tests.
Matrix cayley_orthogonal(const Matrix& skew);

/// Orthogonal projector onto the column span of basis vectors.
Matrix projector_onto_span(const std::vector<VecR>& basis);

/// Incremental exact row-space tracker: feeds vectors one at a time and
/// reports whether each enlarged the span.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}

  /// Returns true iff v was independent of the current span (and was added).
  bool add(const VecR& v);
  /// Reduce v against the tracked rows; zero vector iff v lies in the span.
  VecR reduce(const VecR& v) const;
  bool contains(const VecR& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  /// Reduced rows spanning the same space as everything added so far.
  const std::vector<VecR>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<VecR> rows_;            // reduced, each with leading 1
  std::vector<std::size_t> pivots_;
};

}  // namespace folia
