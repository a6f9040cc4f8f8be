#pragma once

#include <vector>

#include "folia/matrix.hpp"

namespace folia {

/// Floating-point context. Every float comparison in the library goes
/// through one of these; the default width is 1e-9.
struct Tolerance {
  double tol = 1e-9;
};

struct EigenCluster {
  double value = 0;                       // cluster representative (mean)
  std::vector<std::vector<double>> basis; // orthonormal eigenvectors
};

/// Eigensplit of a symmetric matrix in float mode. Eigenvalues whose gap
/// exceeds tol are distinct clusters; throws ClusterAmbiguity when two
/// clusters are separated by more than tol but less than 10*tol.
std::vector<EigenCluster> symmetric_eigensplit(const Matrix& a, double tol);

/// Same splitting on a raw double matrix (row-major, n x n).
std::vector<EigenCluster> symmetric_eigensplit(const std::vector<double>& a,
                                               std::size_t n, double tol);

}  // namespace folia
