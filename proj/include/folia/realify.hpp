#pragma once

#include <cstddef>
#include <vector>

#include "folia/matrix.hpp"

namespace folia {

/// Ground field of a Hermitian factor. Realification conventions live here
/// and nowhere else: an element of K is a real coefficient vector over the
/// unit basis (1), (1,i), or (1,i,j,k), and left multiplication realifies as
/// the d x d matrix returned by left_mult_matrix (C: [[a,-b],[b,a]]).
enum class Field { R, C, H };

std::size_t field_dim(Field f);
const char* field_name(Field f);

VecR field_conj(Field f, const VecR& a);
VecR field_mul(Field f, const VecR& a, const VecR& b);

/// Real matrix of x -> a*x on K as R^d.
Matrix left_mult_matrix(Field f, const VecR& a);

/// Descriptor of a Hermitian basis element of H_n(K): for i == j the unit
/// is 0 (real diagonal); for i < j there is one element per unit of K,
/// A_ij = e_unit and A_ji its conjugate.
struct HermBasisElem {
  std::size_t i = 0, j = 0;
  std::size_t unit = 0;
};

std::vector<HermBasisElem> hermitian_basis(Field f, std::size_t n);

/// Dimension of H_n(K) over R: n(n+1)/2, n^2, n(2n-1).
std::size_t hermitian_dim(Field f, std::size_t n);

/// Ambient symmetric matrix of the invariant quadratic form attached to a
/// Hermitian basis element for the diagonal model on n copies of K^k.
/// Coordinates are copy-major: x[(i*k + c)*d + u] is unit u of component c
/// of copy i. For (i,j,u) with i<j the form is Re(e_u * h(v_i, v_j)) with
/// h(v,w) = sum_c conj(v_c) w_c; for i==j it is |v_i|^2.
Matrix diag_form_matrix(Field f, std::size_t k, std::size_t n, const HermBasisElem& e);

/// Ambient matrix of a general Hermitian matrix A given by coefficients in
/// the hermitian_basis ordering.
Matrix diag_form_of_coeffs(Field f, std::size_t k, std::size_t n, const VecR& coeffs);

/// Realified basis of the Lie algebra so(k) | u(k) | sp(k) acting diagonally
/// on n copies of K^k (skew ambient matrices).
std::vector<Matrix> diag_lie_basis(Field f, std::size_t k, std::size_t n);

/// Realified diagonal action of a K-linear map Q on the copies index:
/// for Q in O(n)/U(n)/Sp(n) given over K as an n x n array of coefficient
/// vectors, returns the ambient (dkn) x (dkn) matrix.
Matrix diag_copy_action(Field f, std::size_t k, std::size_t n,
                        const std::vector<std::vector<VecR>>& q);

}  // namespace folia
