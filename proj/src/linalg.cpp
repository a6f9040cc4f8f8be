#include "folia/linalg.hpp"

#include <algorithm>

#include "folia/error.hpp"

namespace folia {

RrefResult rref(const Matrix& m) {
  RrefResult out;
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<VecR> rows;
  rows.reserve(nr);
  for (std::size_t i = 0; i < nr; ++i) rows.push_back(m.row(i));

  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && rows[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = 1 / rows[r][c];
    for (std::size_t j = c; j < nc; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < nc; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = Matrix::from_rows(rows);
  if (nr == 0) out.rref = Matrix(0, nc);
  return out;
}

std::vector<VecR> kernel_basis(const Matrix& m) {
  std::size_t nc = m.cols();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto p : rr.pivots) is_pivot[p] = true;

  std::vector<VecR> basis;
  for (std::size_t free_c = 0; free_c < nc; ++free_c) {
    if (is_pivot[free_c]) continue;
    VecR v(nc, Rat(0));
    v[free_c] = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
      v[rr.pivots[k]] = -rr.rref.at(k, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidParams("inverse: not square");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, 1);
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] >= n) throw InvalidParams("inverse: singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rr.rref.at(i, n + j));
  return inv;
}

std::optional<VecR> solve(const Matrix& a, const VecR& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve");
  std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, n, b[i]);
  }
  RrefResult rr = rref(aug);
  for (auto p : rr.pivots)
    if (p == n) return std::nullopt;  // inconsistent
  VecR x(n, Rat(0));
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.rref.at(k, n);
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          r.set(i * b.rows() + p, j * b.cols() + q, a.at(i, j) * b.at(p, q));
    }
  return r;
}

Matrix cayley_orthogonal(const Matrix& skew) {
  if (!skew.is_skew()) throw InvalidParams("cayley_orthogonal: matrix not skew");
  std::size_t n = skew.rows();
  Matrix id = Matrix::identity(n);
  // I-S is invertible over Q for skew S: x^T(I-S)x = |x|^2.
  return inverse(id - skew) * (id + skew);
}

Matrix projector_onto_span(const std::vector<VecR>& basis) {
  if (basis.empty()) throw InvalidParams("projector_onto_span: empty basis");
  Matrix b = Matrix::from_rows(basis).transpose();  // columns span W
  Matrix g = b.transpose() * b;
  return b * inverse(g) * b.transpose();
}

bool SpanTracker::add(const VecR& v) {
  VecR w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) return false;
  Rat inv = 1 / w[p];
  for (std::size_t j = p; j < dim_; ++j) w[j] *= inv;
  // keep existing rows reduced against the new one
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k][p] == 0) continue;
    Rat f = rows_[k][p];
    for (std::size_t j = p; j < dim_; ++j) rows_[k][j] -= f * w[j];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

VecR SpanTracker::reduce(const VecR& v) const {
  if (v.size() != dim_) throw DimensionMismatch("SpanTracker::reduce");
  VecR w = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat& f = w[pivots_[k]];
    if (f == 0) continue;
    Rat c = f;
    for (std::size_t j = pivots_[k]; j < dim_; ++j) w[j] -= c * rows_[k][j];
  }
  return w;
}

bool SpanTracker::contains(const VecR& v) const {
  VecR w = reduce(v);
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

}  // namespace folia
