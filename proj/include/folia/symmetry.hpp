#pragma once

#include "folia/basic_space.hpp"
#include "folia/homsolver.hpp"
#include "folia/jordan.hpp"
#include "folia/models.hpp"

namespace folia {

/// A Clifford frame of a spin factor: exact orthogonal symmetric matrices
/// P_0..P_m supported on the factor, pairwise anticommuting there, with
/// P_a^2 equal to the factor projector.
struct SpinFrame {
  Matrix unit;
  std::vector<Matrix> p;
};

/// Extract a rational Clifford frame for a spin factor from a list of
/// candidate symmetric matrices: vector parts of their projections into the
/// ideal are orthogonalized under the spin bilinear form and normalized
/// when the norm is a perfect square. Throws UnsupportedType if no full
/// rational frame emerges.
SpinFrame harvest_spin_frame(const std::vector<Matrix>& candidates,
                             const SimpleFactor& f);

/// Candidate list for a factor of a model's classification: provenance
/// Clifford frames first, then generator Hessians, then the algebra basis.
std::vector<Matrix> spin_frame_candidates(const FoliationModel& m, const F2Result& r,
                                          const SimpleFactor& f);

/// Per-factor generating sets of orthogonal Hessians, as ambient orthogonal
/// involutions (identity outside the factor). Spin factors contribute their
/// Clifford frame; Hermitian factors contribute realified reflections
/// I - 2e over a spanning set of rank-one idempotents, located through the
/// model's coordinate frames.
std::vector<Matrix> orthogonal_hessians(const F2Result& r, const FoliationModel& m);

/// Every generator and `words` random words of length <= 6 pass
/// is_foliated(m, m, ., onto) exactly.
bool verify_foliated_symmetries(const FoliationModel& m, const std::vector<Matrix>& gens,
                                std::size_t words = 50, std::uint64_t seed = 12345,
                                const BasicOptions& opt = {});

struct ModuliFactorReport {
  std::string factor_type;
  std::vector<std::size_t> dims;            // allowed invariant-subspace dimensions
  std::vector<std::string> components;      // matching component labels
};

/// Allowed invariant-subspace dimensions and moduli components per factor;
/// the full moduli space is the product over factors.
std::vector<ModuliFactorReport> moduli_report(const std::vector<SimpleFactor>& factors);

/// A foliated linear isometry g with g(U) = W, for invariant subspaces U, W
/// of equal dimension inside the same factor. Constructive for spin factors
/// (a word of at most two frame generators) and real Hermitian factors
/// (a chain of rational reflections acting on the copies); complex and
/// quaternionic factors are verification-only and raise UnsupportedType.
Matrix transitivity_witness(const FoliationModel& m, const F2Result& r,
                            const std::vector<VecR>& u, const std::vector<VecR>& w,
                            const BasicOptions& opt = {});

/// Rational point on the unit sphere S^{n-1} via stereographic projection
/// of a random small rational vector.
VecR rational_sphere_point(Rng& rng, std::size_t n);

/// The +1 eigenspace of sum_a v_a P_a inside the factor, as an exact basis.
std::vector<VecR> spin_eigenspace(const SpinFrame& frame, const VecR& v);

}  // namespace folia
