#pragma once

#include <cstddef>
#include <vector>

namespace folia {

/// Rank of an integer matrix over F_p, entries held exactly in doubles.
/// Used as a one-sided certificate: rank over F_p never exceeds the rank
/// over Q, so rank_p >= k proves rank_Q >= k.
///
/// p must be below 2^21 so that a*b + c stays within the 2^53 exact-integer
/// range of a double during the blocked elimination.
class ModPRank {
 public:
  explicit ModPRank(std::size_t cols, double p = 1048573.0);

  /// Append one row (arbitrary signed integers, reduced internally).
  void add_row(const std::vector<long long>& row);
  std::size_t rows() const { return nrows_; }

  /// Eliminate everything currently stored and return the rank.
  std::size_t rank();

 private:
  std::size_t cols_;
  double p_;
  std::size_t nrows_ = 0;
  std::vector<double> data_;  // row-major
};

}  // namespace folia
