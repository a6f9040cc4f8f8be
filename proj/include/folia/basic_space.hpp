#pragma once

#include <cstdint>

#include "folia/graded.hpp"
#include "folia/jordan.hpp"
#include "folia/models.hpp"

namespace folia {

struct BasicOptions {
  std::uint64_t seed = 12345;
  double tol = 1e-9;
  /// samples per grading block before NonConvergence
  std::size_t sample_cap = 4000;
  /// block dimension above which the modular rank certificate replaces the
  /// exact kernel (the result is still exact; only the dimension bound is
  /// certified mod p)
  std::size_t modp_threshold = 120;
  int degree_cap = 6;
  std::size_t ambient_cap = 32;
};

struct BasicSpace {
  int degree = 0;
  GradedSubspace space;
  std::size_t samples_used = 0;
  /// true when at least one block was resolved through the rank
  /// certificate instead of an exact kernel
  bool certified = false;
};

/// The degree-d basic polynomials of the model: the kernel of the linear
/// system <grad f(x_s), t> = 0 over samples and oracle directions, split
/// along the model's grading blocks, together with the exact invariance
/// rows of the discrete leaf-preserving maps. Models with a linear oracle
/// (Lie-algebra action) are handled symbolically with no sampling.
BasicSpace basic_space(const FoliationModel& m, int d, const BasicOptions& opt = {});

struct F2Result {
  GradedSubspace basic2;
  JordanAlgebra algebra;
  std::vector<SimpleFactor> factors;
};

/// Hessians of the degree-2 basic space, closed (already closed or it is a
/// bug), decomposed and classified.
F2Result f2(const FoliationModel& m, const BasicOptions& opt = {});

struct FftRow {
  int degree = 0;
  std::size_t generated = 0;
  std::size_t basic = 0;
  bool equal = false;
};

/// Per-degree comparison of the span generated by the model's generators
/// against the full basic space.
std::vector<FftRow> fft_check(const FoliationModel& m, int dmax,
                              const BasicOptions& opt = {});

/// Exact average (1/|G|) sum over the group generated by the given
/// orthogonal matrices; throws GroupTooLarge past the cap.
Polynomial reynolds(const std::vector<Matrix>& group_generators, const Polynomial& f,
                    std::size_t order_cap = 20000);

/// Basis of the degree-1 basic space; nonzero dimension means a trivial
/// factor splits off.
std::vector<Polynomial> trivial_factors(const FoliationModel& m,
                                        const BasicOptions& opt = {});

struct InvariantSpanResult {
  std::vector<VecR> basis;
  bool verified = false;
};

/// Span of sampled leaf points, with the invariance verdict obtained by
/// testing d(.,W)^2 for membership in the degree-2 basic space.
InvariantSpanResult invariant_span(const FoliationModel& m,
                                   const std::vector<VecR>& points,
                                   const BasicOptions& opt = {});

}  // namespace folia
