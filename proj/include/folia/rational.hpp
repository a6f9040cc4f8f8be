#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace folia {

/// Exact rational scalar. All structural linear algebra (ranks, kernels,
/// closures) runs on these; floating point only enters through the
/// tolerance-guarded eigensplit, and conversions are always explicit.
using Rat = mpq_class;

using VecR = std::vector<Rat>;

/// Parse "p/q" or "p". Throws InputError on malformed input.
Rat rat_from_string(const std::string& s);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string rat_to_string(const Rat& q);

/// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double x);

double rat_to_double(const Rat& q);

/// Nearest rational to x with denominator <= max_den (continued fractions).
Rat rationalize(double x, std::uint64_t max_den);

/// If q is the square of a rational, store the nonnegative root and return
/// true; otherwise return false.
bool rat_sqrt_exact(const Rat& q, Rat& root);

Rat dot(const VecR& a, const VecR& b);

}  // namespace folia
