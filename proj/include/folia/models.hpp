#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "folia/clifford.hpp"
#include "folia/graded.hpp"
#include "folia/polynomial.hpp"
#include "folia/realify.hpp"

namespace folia {

/// Coordinate frame of a Hermitian H_n(K) factor inside a model, in the
/// hermitian_basis ordering at a coordinate offset. Lets the symmetry
/// module realize abstract Hermitian matrices as ambient forms exactly.
struct HermFrame {
  Field field = Field::R;
  std::size_t k = 0, n = 0;
  std::size_t offset = 0;
};

struct CliffFrame {
  std::shared_ptr<const CliffordSystem> system;
  std::size_t offset = 0;
};

/// A foliation presented by a separating generator set plus a leaf-tangent
/// oracle. The oracle spans the tangent space of the connected leaf at the
/// sample point; finite leaf-preserving maps beyond the identity component
/// (the O(k) reflection of the real diagonal models) are carried separately
/// as exact orthogonal matrices.
struct FoliationModel {
  std::size_t dim = 0;
  std::vector<Polynomial> generators;
  std::function<std::vector<VecR>(const VecR&)> oracle;

  /// Skew matrices X whose fields x -> Xx span the oracle at every point;
  /// set for the homogeneous models, where it enables symbolic (sample-free)
  /// basic-space computation. Empty when the oracle is point-dependent.
  std::vector<Matrix> lie_basis;
  bool oracle_is_linear = false;

  /// Exact orthogonal leaf-preserving generators of the disconnected part.
  std::vector<Matrix> discrete_maps;

  /// Coordinate index groups forming an orthogonal decomposition into
  /// invariant subspaces (copies for diagonal models, the P_0 eigenspace
  /// halves for Clifford models); basic polynomials split along it.
  std::vector<std::vector<std::size_t>> grading_blocks;

  /// Exact signed-permutation foliated involutions permuting the grading
  /// blocks (P_1 for Clifford models): pullback identifies the basic spaces
  /// of mirrored multidegree blocks, which basic_space exploits.
  std::vector<Matrix> block_swaps;

  std::string provenance = "custom";
  bool disconnected_warning = false;

  std::vector<HermFrame> herm_frames;
  std::vector<CliffFrame> cliff_frames;
};

/// O(k) | U(k) | Sp(k) acting diagonally on n copies of K^k, realified in
/// copy-major order. Generators are the Hermitian quadratic forms; the
/// oracle is the realified Lie algebra action, plus one reflection
/// generator for K = R (O(k) is disconnected).
FoliationModel diagonal_model(Field f, std::size_t k, std::size_t n);

/// Same generators as diagonal_model(R,k,n) but the connected SO(k)
/// sub-action: no reflection, so the degree-k determinant invariants are
/// basic and the generation-in-degree-two checks are expected to fail for
/// n >= k.
FoliationModel so_model(std::size_t k, std::size_t n);

FoliationModel clifford_model(const CliffordSystem& c);

FoliationModel product_model(const FoliationModel& a, const FoliationModel& b);

/// Composed foliation: generators |x|^2 and rho_i(<P_0 x,x>,...,<P_m x,x>)
/// for the F_0 generators rho_i on R^{m+1}; the oracle is the kernel of the
/// Jacobian of the full generator list.
FoliationModel composed_model(const CliffordSystem& c, const std::vector<Polynomial>& f0);

/// Point foliation: every polynomial is basic; generators are the
/// coordinates and the oracle is empty.
FoliationModel trivial_model(std::size_t dim);

/// User-supplied generators and oracle; |x|^2 is adjoined when it is not in
/// the degree-two span of the generators. No grading is assumed.
FoliationModel custom_model(std::size_t dim, std::vector<Polynomial> generators,
                            std::function<std::vector<VecR>(const VecR&)> oracle);

/// The leaf-to-leaf scaling map r_lambda = id_W + lambda id_{W^perp}.
/// W must be invariant, which is checked by membership of d(.,W)^2 in the
/// provided degree-2 basic space; throws NotInvariant otherwise.
/// lambda = 0 degenerates to the orthogonal projection onto W.
Matrix scale_map(const FoliationModel& m, const std::vector<VecR>& w, const Rat& lambda,
                 const GradedSubspace& basic2);

}  // namespace folia
