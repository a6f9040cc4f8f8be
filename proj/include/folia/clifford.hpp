#pragma once

#include <vector>

#include "folia/matrix.hpp"

namespace folia {

/// Clifford system P_0..P_m on R^{2l}: symmetric matrices satisfying
/// (P_i P_j + P_j P_i)/2 = delta_ij I exactly.
struct CliffordSystem {
  std::size_t m = 0;  // generator count minus one
  std::size_t l = 0;  // half-dimension
  std::vector<Matrix> P;

  std::size_t ambient_dim() const { return 2 * l; }
};

/// q pairwise-anticommuting skew complex structures with entries in
/// {0,+-1}, on a module of the minimal dimension. Built from the
/// Cayley-Dickson left multiplications up to q = 7, one doubling for q = 8,
/// and the period-8 tensor step beyond.
std::vector<Matrix> anticommuting_complex_structures(std::size_t q);

/// Dimension of the module carrying anticommuting_complex_structures(m-1);
/// the irreducible real Clifford module dimension delta(m). Derived from
/// the construction, not a lookup table.
std::size_t clifford_irreducible_dim(std::size_t m);

/// The block-form Clifford system C_{m,k} on R^{2l}, l = k * delta(m):
/// P_0 = diag(I,-I), P_1 = offdiag(I,I), P_i = [[0,E_i],[-E_i,0]].
CliffordSystem build_clifford(std::size_t m, std::size_t k);

/// Exact check of all (m+1)(m+2)/2 relations.
bool verify_relations(const CliffordSystem& c);

/// The four families whose Clifford foliation has disconnected leaves:
/// C_{1,1}, C_{1,2}, C_{3,1}, C_{7,1}.
bool has_disconnected_leaves(const CliffordSystem& c);

/// psi(x) = (|x|^2, <P_0 x, x>, ..., <P_m x, x>) in R^{m+2}.
VecR psi(const CliffordSystem& c, const VecR& x);

/// Image characterization: y_1 >= 0 and y_1^2 - y_2^2 - ... - y_{m+2}^2 >= 0
/// when m < l, with equality instead when m = l. tol = 0 gives the exact
/// test on rational input.
bool image_membership(const CliffordSystem& c, const VecR& y, double tol);

/// A preimage of a valid image point, from the slice-subspace
/// parameterization; float output, residual at machine scale.
std::vector<double> slice_point(const CliffordSystem& c, const VecR& y, double tol);

/// Exact kernel basis of the Jacobian of psi at x (rows 2x, 2P_i x):
/// spans the leaf tangent space at regular points.
std::vector<VecR> leaf_tangent(const CliffordSystem& c, const VecR& x);

}  // namespace folia
