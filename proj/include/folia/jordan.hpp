#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folia/matrix.hpp"
#include "folia/polynomial.hpp"
#include "folia/rng.hpp"

namespace folia {

/// (AB + BA)/2. Throws DimensionMismatch / NonSymmetric.
Matrix jordan_product(const Matrix& a, const Matrix& b);

/// A Jordan subalgebra of Sym^2(V), closed under the Jordan product and
/// containing I, with exact structure constants over its basis. The basis
/// keeps the seed matrices as a prefix (I first), which downstream frame
/// extraction relies on; no canonicalization is applied.
class JordanAlgebra {
 public:
  /// Smallest Jordan subalgebra containing the seed and I. Terminates since
  /// dim Sym^2(V) is finite.
  static JordanAlgebra close(const std::vector<Matrix>& seed);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }

  bool contains(const Matrix& a) const;
  /// Coordinates in the basis; throws Error when a is outside the span.
  VecR coordinates(const Matrix& a) const;
  Matrix from_coordinates(const VecR& c) const;

  /// Coordinates of basis_i • basis_j.
  const VecR& structure(std::size_t i, std::size_t j) const;

  /// Matrix of w -> z • w on basis coordinates, z given in coordinates.
  Matrix left_mult_operator(const VecR& z) const;

 private:
  JordanAlgebra() = default;
  void finalize_structure();

  std::size_t ambient_ = 0;
  std::vector<Matrix> basis_;
  std::vector<std::vector<VecR>> structure_;  // upper triangle i <= j

  // reduced flattened rows with expression in basis indices
  std::vector<VecR> red_rows_;
  std::vector<std::size_t> red_pivots_;
  std::vector<VecR> red_combos_;
  bool reduce_track(VecR& flat, VecR& combo) const;
  bool add_row(const Matrix& a);
};

/// Sum of squares of basis elements vanishes only trivially; checked as
/// positive definiteness of the trace form, exactly.
bool formally_real(const JordanAlgebra& j);

/// Basis of {z in J : L_z L_a = L_a L_z for all a}, from the exact linear
/// system in the structure constants.
std::vector<Matrix> center(const JordanAlgebra& j);

enum class FactorType { RealHermitian, ComplexHermitian, QuaternionHermitian, SpinFactor };

std::string factor_type_name(FactorType t);

struct SimpleFactor {
  Matrix projector;             // central idempotent, exact
  FactorType type = FactorType::RealHermitian;
  int param = 0;                // n for H_n(K), m+1 for a spin factor
  int multiplicity = 0;
  std::size_t subspace_dim = 0; // dim V_i = trace of the projector
  int jordan_rank = 0;
  std::vector<Matrix> ideal_basis;
  std::string note;             // rank-2 classical coincidences
};

/// Split J into simple ideals: the commuting central basis is eigensplit in
/// float mode, the resulting projectors are rounded to rationals
/// (denominator <= 10^6) and re-verified exactly, then each ideal is
/// classified by rank and dimension.
std::vector<SimpleFactor> decompose(const JordanAlgebra& j, double tol = 1e-9,
                                    std::uint64_t seed = 12345);

struct SimpleClassification {
  FactorType type;
  int param;
  int rank;
  std::string note;
};

/// Rank = minimal-polynomial degree of a generic element (5 samples must
/// agree), then the Jordan-von-Neumann-Wigner table on (rank, dim).
SimpleClassification classify_simple(const std::vector<Matrix>& ideal_basis,
                                     const Matrix& unit, Rng& rng);

/// d(x, W)^2: the quadratic form of the projector onto the orthogonal
/// complement of W. Idempotent under the Jordan product.
Polynomial idempotent_from_subspace(const std::vector<VecR>& w, std::size_t ambient);

/// Kernel of Hess(f)/2 = f^{-1}(0). Throws NotIdempotent.
std::vector<VecR> subspace_from_idempotent(const Polynomial& f);

struct EigenPart {
  Rat value;
  std::vector<VecR> subspace;  // exact basis
};

/// Eigenspaces of Hess(f)/2 for f in the span of J, reported as invariant
/// subspaces; f is re-assembled as a combination of the projector forms and
/// checked exactly (the spectra arising here are rational).
std::vector<EigenPart> eigenspace_split(const Polynomial& f, const JordanAlgebra& j,
                                        double tol);

}  // namespace folia
