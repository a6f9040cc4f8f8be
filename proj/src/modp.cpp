#include "folia/modp.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "folia/error.hpp"

namespace folia {

namespace {

inline double reduce(double a, double p, double invp) {
  double q = std::floor(a * invp);
  double r = a - q * p;
  if (r < 0) r += p;
  if (r >= p) r -= p;
  return r;
}

double pow_mod(double b, long long e, double p, double invp) {
  double r = 1;
  while (e) {
    if (e & 1) r = reduce(r * b, p, invp);
    b = reduce(b * b, p, invp);
    e >>= 1;
  }
  return r;
}

}  // namespace

ModPRank::ModPRank(std::size_t cols, double p) : cols_(cols), p_(p) {
  if (p >= 2097152.0) throw InvalidParams("ModPRank: p must stay below 2^21");
}

void ModPRank::add_row(const std::vector<long long>& row) {
  if (row.size() != cols_) throw DimensionMismatch("ModPRank::add_row");
  long long pi = (long long)p_;
  data_.reserve(data_.size() + cols_);
  for (auto v : row) {
    long long r = v % pi;
    if (r < 0) r += pi;
    data_.push_back(double(r));
  }
  ++nrows_;
}

// Blocked LU-style elimination. Multipliers accumulate in a panel-local
// table; the trailing block is updated with <= NB products per entry before
// a single Barrett reduction, which keeps every intermediate value an exact
// integer below 2^53 (NB * p^2 < 2^47 for p < 2^20.5).
std::size_t ModPRank::rank() {
  const double p = p_, invp = 1.0 / p;
  const std::size_t R = nrows_, C = cols_;
  if (R == 0 || C == 0) return 0;

  std::vector<std::size_t> perm(R);
  for (std::size_t i = 0; i < R; ++i) perm[i] = i;
  auto row = [&](std::size_t i) { return data_.data() + perm[i] * C; };

  const std::size_t NB = 96;
  std::size_t nthreads = std::max(2u, std::thread::hardware_concurrency());
  std::size_t rank = 0, c0 = 0;
  std::vector<double> ftab;

  while (c0 < C && rank < R) {
    const std::size_t c1 = std::min(C, c0 + NB);
    const std::size_t rank0 = rank;
    const std::size_t span = R - rank0;
    ftab.assign(span * NB, 0.0);
    auto frow = [&](std::size_t r) { return ftab.data() + (r - rank0) * NB; };

    // panel factorization: immediate updates on panel columns only
    for (std::size_t c = c0; c < c1 && rank < R; ++c) {
      std::size_t pr = rank;
      while (pr < R && row(pr)[c] == 0) ++pr;
      if (pr == R) continue;
      if (pr != rank) {
        std::swap(perm[rank], perm[pr]);
        for (std::size_t t = 0; t < NB; ++t)
          std::swap(frow(rank)[t], frow(pr)[t]);
      }
      const std::size_t t = rank - rank0;
      const double inv = pow_mod(row(rank)[c], (long long)p - 2, p, invp);
      const double* pv = row(rank);
      for (std::size_t r = rank + 1; r < R; ++r) {
        double v = row(r)[c];
        if (v == 0) continue;
        double f = reduce(v * inv, p, invp);
        frow(r)[t] = f;
        double* rr = row(r);
        const double pf = p - f;
        for (std::size_t j = c; j < c1; ++j)
          if (pv[j] != 0) rr[j] = reduce(rr[j] + pf * pv[j], p, invp);
      }
      ++rank;
    }

    const std::size_t npiv = rank - rank0;
    if (npiv > 0 && c1 < C) {
      const std::size_t W = C - c1;
      std::vector<const double*> prow(npiv);
      for (std::size_t t = 0; t < npiv; ++t) prow[t] = row(rank0 + t) + c1;

      // accumulate up to NB products into a buffer, then reduce once:
      // axpy-shaped inner loops that the compiler can vectorize
      auto apply_combo = [&](double* rr, const double* f, std::size_t nterms,
                             std::vector<double>& acc) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::size_t t = 0; t < nterms; ++t) {
          const double ft = f[t];
          if (ft == 0) continue;
          const double* pv = prow[t];
          for (std::size_t j = 0; j < W; ++j) acc[j] += ft * pv[j];
        }
        for (std::size_t j = 0; j < W; ++j) {
          double val = rr[j] - reduce(acc[j], p, invp);
          if (val < 0) val += p;
          rr[j] = val;
        }
      };

      // finish the U rows: triangular correction among the panel pivot rows
      {
        std::vector<double> acc(W);
        for (std::size_t t2 = 1; t2 < npiv; ++t2)
          apply_combo(row(rank0 + t2) + c1, frow(rank0 + t2), t2, acc);
      }

      // Schur update of the remaining rows, parallel over row ranges
      auto update_rows = [&](std::size_t lo, std::size_t hi) {
        std::vector<double> acc(W);
        for (std::size_t r = lo; r < hi; ++r) {
          const double* f = frow(r);
          bool any = false;
          for (std::size_t t = 0; t < npiv; ++t)
            if (f[t] != 0) { any = true; break; }
          if (any) apply_combo(row(r) + c1, f, npiv, acc);
        }
      };
      if (R - rank > 64 && nthreads > 1) {
        std::vector<std::thread> pool;
        std::size_t chunk = (R - rank + nthreads - 1) / nthreads;
        for (std::size_t th = 0; th < nthreads; ++th) {
          std::size_t lo = rank + th * chunk, hi = std::min(R, lo + chunk);
          if (lo < hi) pool.emplace_back(update_rows, lo, hi);
        }
        for (auto& t : pool) t.join();
      } else {
        update_rows(rank, R);
      }
    }
    c0 = c1;
  }
  return rank;
}

}  // namespace folia
