#include "folia/clifford.hpp"

#include <cmath>

#include "folia/error.hpp"
#include "folia/linalg.hpp"

namespace folia {

namespace {

// Cayley-Dickson multiplication on R^{2^level}: (a,b)(c,d) = (ac - d*b, da + bc*).
VecR cd_conj(const VecR& a) {
  VecR r = a;
  for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
  return r;
}

VecR cd_mul(const VecR& x, const VecR& y) {
  std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  std::size_t h = n / 2;
  VecR a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  VecR c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  VecR ac = cd_mul(a, c), db = cd_mul(cd_conj(d), b);
  VecR da = cd_mul(d, a), bc = cd_mul(b, cd_conj(c));
  VecR r(n);
  for (std::size_t i = 0; i < h; ++i) {
    r[i] = ac[i] - db[i];
    r[h + i] = da[i] + bc[i];
  }
  return r;
}

// Left multiplication by the basis unit e_idx of the dimension-dim
// Cayley-Dickson algebra, as a dim x dim integer matrix.
Matrix cd_left_mult(std::size_t dim, std::size_t idx) {
  Matrix m(dim, dim);
  VecR e(dim, Rat(0));
  e[idx] = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    VecR ej(dim, Rat(0));
    ej[j] = 1;
    VecR col = cd_mul(e, ej);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, j, col[i]);
  }
  return m;
}

Matrix two_block(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
  std::size_t n = tl.rows();
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (tl.at(i, j) != 0) m.set(i, j, tl.at(i, j));
      if (tr.at(i, j) != 0) m.set(i, j + n, tr.at(i, j));
      if (bl.at(i, j) != 0) m.set(i + n, j, bl.at(i, j));
      if (br.at(i, j) != 0) m.set(i + n, j + n, br.at(i, j));
    }
  return m;
}

}  // namespace

std::vector<Matrix> anticommuting_complex_structures(std::size_t q) {
  if (q == 0) return {};
  if (q <= 7) {
    // L_{e_1}..L_{e_q} on C, H, or O; alternativity gives the relations.
    std::size_t dim = q == 1 ? 2 : (q <= 3 ? 4 : 8);
    std::vector<Matrix> out;
    for (std::size_t i = 1; i <= q; ++i) out.push_back(cd_left_mult(dim, i));
    return out;
  }
  if (q == 8) {
    // double the octonionic set: F_i = [[0,L_i],[L_i,0]], F_8 = [[0,-I],[I,0]]
    auto base = anticommuting_complex_structures(7);
    std::size_t d = 8;
    Matrix z = Matrix::zero(d, d), id = Matrix::identity(d);
    std::vector<Matrix> out;
    for (const auto& l : base) out.push_back(two_block(z, l, l, z));
    out.push_back(two_block(z, -id, id, z));
    return out;
  }
  // period 8: G_j = I ⊗ F_j, G_{8+i} = E_i ⊗ omega, omega = F_1...F_8
  auto kit = anticommuting_complex_structures(8);
  Matrix omega = Matrix::identity(16);
  for (const auto& f : kit) omega = omega * f;
  auto rest = anticommuting_complex_structures(q - 8);
  std::size_t d = q - 8 == 0 ? 1 : rest[0].rows();
  std::vector<Matrix> out;
  for (const auto& f : kit) out.push_back(kron(Matrix::identity(d), f));
  for (const auto& e : rest) out.push_back(kron(e, omega));
  return out;
}

std::size_t clifford_irreducible_dim(std::size_t m) {
  if (m < 1) throw InvalidParams("clifford_irreducible_dim: m >= 1");
  if (m == 1) return 1;
  auto es = anticommuting_complex_structures(m - 1);
  return es[0].rows();
}

CliffordSystem build_clifford(std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) throw InvalidParams("build_clifford: need m >= 1, k >= 1");
  auto es = anticommuting_complex_structures(m - 1);
  std::size_t l0 = es.empty() ? 1 : es[0].rows();
  std::size_t l = l0 * k;

  Matrix idl = Matrix::identity(l), zl = Matrix::zero(l, l);
  CliffordSystem c;
  c.m = m;
  c.l = l;
  c.P.push_back(two_block(idl, zl, zl, -idl));
  c.P.push_back(two_block(zl, idl, idl, zl));
  for (const auto& e0 : es) {
    Matrix e = kron(e0, Matrix::identity(k));
    c.P.push_back(two_block(zl, e, -e, zl));
  }
  return c;
}

bool verify_relations(const CliffordSystem& c) {
  std::size_t n = 2 * c.l;
  for (const auto& p : c.P)
    if (p.rows() != n || p.cols() != n || !p.is_symmetric()) return false;
  Matrix id = Matrix::identity(n);
  for (std::size_t i = 0; i < c.P.size(); ++i)
    for (std::size_t j = i; j < c.P.size(); ++j) {
      Matrix s = (c.P[i] * c.P[j] + c.P[j] * c.P[i]).scaled(Rat(1, 2));
      if (i == j ? !(s == id) : !s.is_zero()) return false;
    }
  return true;
}

bool has_disconnected_leaves(const CliffordSystem& c) {
  return (c.m == 1 && (c.l == 1 || c.l == 2)) || (c.m == 3 && c.l == 4) ||
         (c.m == 7 && c.l == 8);
}

VecR psi(const CliffordSystem& c, const VecR& x) {
  if (x.size() != 2 * c.l) throw DimensionMismatch("psi: dim x != 2l");
  VecR y;
  y.reserve(c.P.size() + 1);
  y.push_back(dot(x, x));
  for (const auto& p : c.P) y.push_back(dot(p.apply(x), x));
  return y;
}

bool image_membership(const CliffordSystem& c, const VecR& y, double tol) {
  if (y.size() != c.m + 2) throw DimensionMismatch("image_membership: dim y != m+2");
  Rat t = rat_from_double(tol);
  if (y[0] < -t) return false;
  Rat q = y[0] * y[0];
  for (std::size_t i = 1; i < y.size(); ++i) q -= y[i] * y[i];
  if (c.m < c.l) return q >= -t;
  return q >= -t && q <= t;
}

std::vector<double> slice_point(const CliffordSystem& c, const VecR& y, double tol) {
  if (!image_membership(c, y, tol)) throw NotInImage("slice_point: y not in image");
  std::size_t m = c.m, l = c.l;

  // v0 = e_1; v1 = a standard basis vector orthogonal to v0, E_2 v0, .., E_m v0.
  // The E blocks sit in rows 0..l-1, columns l..2l-1 of P_i (i >= 2).
  std::vector<bool> used(l, false);
  used[0] = true;
  for (std::size_t i = 2; i <= m; ++i) {
    for (std::size_t r = 0; r < l; ++r)
      if (c.P[i].at(r, l) != 0) used[r] = true;  // E_i v0 = column of E_i
  }
  std::size_t v1 = l;  // index within the bottom half
  for (std::size_t r = 0; r < l; ++r)
    if (!used[r]) { v1 = r; break; }

  double y1 = rat_to_double(y[0]), y2 = rat_to_double(y[1]);
  double qv = y1 * y1;
  for (std::size_t i = 1; i < y.size(); ++i) {
    double v = rat_to_double(y[i]);
    qv -= v * v;
  }

  std::vector<double> top(l, 0.0), bot(l, 0.0);
  if (y1 + y2 > tol) {
    double lam = std::sqrt((y1 + y2) / 2);
    top[0] = lam;
    bot[0] = rat_to_double(y[2]) / (2 * lam);  // alpha_1 against v0
    for (std::size_t i = 2; i <= m; ++i) {
      double ai = -rat_to_double(y[i + 1]) / (2 * lam);
      // bot += ai * E_i v0
      for (std::size_t r = 0; r < l; ++r)
        bot[r] += ai * rat_to_double(c.P[i].at(r, l));
    }
    double mu2 = qv / (2 * (y1 + y2));
    if (mu2 > tol) {
      if (v1 == l) throw NotInImage("slice_point: no slack direction (m = l)");
      bot[v1] += std::sqrt(mu2);
    } else if (mu2 > 0) {
      if (v1 != l) bot[v1] += std::sqrt(mu2);
    }
  } else {
    // y1 + y2 = 0 forces y_3 = ... = 0; preimage (0, mu v1) or (0, a v0)
    for (std::size_t i = 2; i < y.size(); ++i)
      if (rat_to_double(y[i]) > tol || rat_to_double(y[i]) < -tol)
        throw NotInImage("slice_point: degenerate branch needs y_3..=0");
    double mu = std::sqrt(std::max(0.0, (y1 - y2) / 2));
    if (v1 != l) bot[v1] = mu;
    else bot[0] = mu;
  }

  std::vector<double> x;
  x.reserve(2 * l);
  x.insert(x.end(), top.begin(), top.end());
  x.insert(x.end(), bot.begin(), bot.end());
  return x;
}

std::vector<VecR> leaf_tangent(const CliffordSystem& c, const VecR& x) {
  bool zero = true;
  for (const auto& v : x)
    if (v != 0) zero = false;
  if (zero) throw InvalidParams("leaf_tangent: x = 0");
  std::vector<VecR> rows;
  VecR r0 = x;
  for (auto& v : r0) v *= 2;
  rows.push_back(r0);
  for (const auto& p : c.P) {
    VecR r = p.apply(x);
    for (auto& v : r) v *= 2;
    rows.push_back(std::move(r));
  }
  return kernel_basis(Matrix::from_rows(rows));
}

}  // namespace folia
