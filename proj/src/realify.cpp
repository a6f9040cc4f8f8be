#include "folia/realify.hpp"

#include "folia/error.hpp"
#include "folia/linalg.hpp"

namespace folia {

std::size_t field_dim(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
  }
  return 0;
}

const char* field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

VecR field_conj(Field f, const VecR& a) {
  VecR r = a;
  for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
  return r;
}

VecR field_mul(Field f, const VecR& a, const VecR& b) {
  switch (f) {
    case Field::R:
      return {a[0] * b[0]};
    case Field::C:
      return {a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
    case Field::H:
      return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
              a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
              a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
              a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  }
  throw InvalidParams("field_mul");
}

Matrix left_mult_matrix(Field f, const VecR& a) {
  std::size_t d = field_dim(f);
  if (a.size() != d) throw DimensionMismatch("left_mult_matrix");
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    VecR ej(d, Rat(0));
    ej[j] = 1;
    VecR col = field_mul(f, a, ej);
    for (std::size_t i = 0; i < d; ++i) m.set(i, j, col[i]);
  }
  return m;
}

std::vector<HermBasisElem> hermitian_basis(Field f, std::size_t n) {
  std::size_t d = field_dim(f);
  std::vector<HermBasisElem> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({i, i, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t u = 0; u < d; ++u) out.push_back({i, j, u});
  return out;
}

std::size_t hermitian_dim(Field f, std::size_t n) {
  return n + n * (n - 1) / 2 * field_dim(f);
}

Matrix diag_form_matrix(Field f, std::size_t k, std::size_t n, const HermBasisElem& e) {
  std::size_t d = field_dim(f);
  std::size_t dim = d * k * n;
  Matrix m(dim, dim);
  auto slot = [&](std::size_t copy, std::size_t comp) { return (copy * k + comp) * d; };

  if (e.i == e.j) {
    // |v_i|^2
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t u = 0; u < d; ++u) {
        std::size_t p = slot(e.i, c) + u;
        m.set(p, p, 1);
      }
    return m;
  }

  // Re(e_u * conj(p) * q) as a d x d bilinear block, repeated per component.
  VecR eu(d, Rat(0));
  eu[e.unit] = 1;
  Matrix r(d, d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      VecR es(d, Rat(0)), et(d, Rat(0));
      es[s] = 1;
      et[t] = 1;
      VecR prod = field_mul(f, eu, field_mul(f, field_conj(f, es), et));
      r.set(s, t, prod[0]);
    }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pi = slot(e.i, c), pj = slot(e.j, c);
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        Rat half = r.at(s, t) / 2;
        if (half == 0) continue;
        m.set(pi + s, pj + t, m.at(pi + s, pj + t) + half);
        m.set(pj + t, pi + s, m.at(pj + t, pi + s) + half);
      }
  }
  return m;
}

Matrix diag_form_of_coeffs(Field f, std::size_t k, std::size_t n, const VecR& coeffs) {
  auto basis = hermitian_basis(f, n);
  if (coeffs.size() != basis.size()) throw DimensionMismatch("diag_form_of_coeffs");
  Matrix m(field_dim(f) * k * n, field_dim(f) * k * n);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coeffs[b] == 0) continue;
    m = m + diag_form_matrix(f, k, n, basis[b]).scaled(coeffs[b]);
  }
  return m;
}

std::vector<Matrix> diag_lie_basis(Field f, std::size_t k, std::size_t n) {
  std::size_t d = field_dim(f);
  std::vector<Matrix> out;
  auto one_copy = [&](std::size_t c1, std::size_t c2, const VecR& val,
                      const VecR& val2) {
    // k x k over K with val at (c1,c2) and val2 at (c2,c1)
    Matrix x(d * k, d * k);
    Matrix l1 = left_mult_matrix(f, val);
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) x.set(c1 * d + s, c2 * d + t, l1.at(s, t));
    if (c1 != c2) {
      Matrix l2 = left_mult_matrix(f, val2);
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) x.set(c2 * d + s, c1 * d + t, l2.at(s, t));
    }
    return x;
  };

  // off-diagonal pairs, one generator per unit of K
  for (std::size_t c1 = 0; c1 < k; ++c1)
    for (std::size_t c2 = c1 + 1; c2 < k; ++c2)
      for (std::size_t u = 0; u < d; ++u) {
        VecR eu(d, Rat(0));
        eu[u] = 1;
        VecR neg_conj = field_conj(f, eu);
        for (auto& x : neg_conj) x = -x;
        out.push_back(kron(Matrix::identity(n), one_copy(c1, c2, eu, neg_conj)));
      }
  // diagonal imaginary units
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t u = 1; u < d; ++u) {
      VecR eu(d, Rat(0));
      eu[u] = 1;
      out.push_back(kron(Matrix::identity(n), one_copy(c, c, eu, eu)));
    }
  return out;
}

Matrix diag_copy_action(Field f, std::size_t k, std::size_t n,
                        const std::vector<std::vector<VecR>>& q) {
  std::size_t d = field_dim(f);
  if (q.size() != n) throw DimensionMismatch("diag_copy_action");
  Matrix m(d * k * n, d * k * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].size() != n) throw DimensionMismatch("diag_copy_action");
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = left_mult_matrix(f, q[i][j]);
      if (l.is_zero()) continue;
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t s = 0; s < d; ++s)
          for (std::size_t t = 0; t < d; ++t)
            m.set((i * k + c) * d + s, (j * k + c) * d + t, l.at(s, t));
    }
  }
  return m;
}

}  // namespace folia
