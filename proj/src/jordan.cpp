#include "folia/jordan.hpp"

#include <algorithm>
#include <map>

#include "folia/clifford.hpp"
#include "folia/eigensplit.hpp"
#include "folia/error.hpp"
#include "folia/linalg.hpp"

namespace folia {

Matrix jordan_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("jordan_product");
  return (a * b + b * a).scaled(Rat(1, 2));
}

bool JordanAlgebra::reduce_track(VecR& flat, VecR& combo) const {
  combo.assign(basis_.size(), Rat(0));
  VecR mu(red_rows_.size(), Rat(0));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < red_rows_.size(); ++k) {
      const Rat& f = flat[red_pivots_[k]];
      if (f == 0) continue;
      Rat c = f;
      mu[k] += c;
      const VecR& row = red_rows_[k];
      for (std::size_t j = 0; j < flat.size(); ++j)
        if (row[j] != 0) flat[j] -= c * row[j];
      changed = true;
    }
  }
  bool zero = true;
  for (const auto& x : flat)
    if (x != 0) { zero = false; break; }
  if (zero) {
    for (std::size_t k = 0; k < red_rows_.size(); ++k) {
      if (mu[k] == 0) continue;
      for (std::size_t j = 0; j < red_combos_[k].size(); ++j)
        combo[j] += mu[k] * red_combos_[k][j];
    }
  }
  return zero;
}

bool JordanAlgebra::add_row(const Matrix& a) {
  VecR flat = a.flatten();
  VecR combo;
  // reduce, remembering the combination of existing reduced rows
  VecR mu(red_rows_.size(), Rat(0));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < red_rows_.size(); ++k) {
      const Rat& f = flat[red_pivots_[k]];
      if (f == 0) continue;
      Rat c = f;
      mu[k] += c;
      const VecR& row = red_rows_[k];
      for (std::size_t j = 0; j < flat.size(); ++j)
        if (row[j] != 0) flat[j] -= c * row[j];
      changed = true;
    }
  }
  std::size_t p = 0;
  while (p < flat.size() && flat[p] == 0) ++p;
  if (p == flat.size()) return false;

  // new basis element: combo = e_new - sum mu_k combo_k, normalized
  VecR combo_new(basis_.size() + 1, Rat(0));
  combo_new[basis_.size()] = 1;
  for (std::size_t k = 0; k < red_rows_.size(); ++k) {
    if (mu[k] == 0) continue;
    for (std::size_t j = 0; j < red_combos_[k].size(); ++j)
      combo_new[j] -= mu[k] * red_combos_[k][j];
  }
  Rat inv = 1 / flat[p];
  for (auto& x : flat) x *= inv;
  for (auto& x : combo_new) x *= inv;
  for (auto& c : red_combos_) c.resize(basis_.size() + 1, Rat(0));

  basis_.push_back(a);
  red_rows_.push_back(std::move(flat));
  red_pivots_.push_back(p);
  red_combos_.push_back(std::move(combo_new));
  return true;
}

JordanAlgebra JordanAlgebra::close(const std::vector<Matrix>& seed) {
  if (seed.empty()) throw InvalidParams("close: empty seed");
  std::size_t n = seed[0].rows();
  for (const auto& s : seed) {
    if (s.rows() != n || s.cols() != n) throw DimensionMismatch("close: mixed dims");
    if (!s.is_symmetric()) throw NonSymmetric("close: seed not symmetric");
  }
  JordanAlgebra j;
  j.ambient_ = n;
  j.add_row(Matrix::identity(n));
  for (const auto& s : seed) j.add_row(s);

  // span-extension by pairwise products until fixed point
  std::size_t lo = 0;
  while (true) {
    std::size_t cur = j.basis_.size();
    bool grew = false;
    for (std::size_t i = 0; i < cur; ++i)
      for (std::size_t k = std::max(i, lo); k < cur; ++k)
        if (j.add_row(jordan_product(j.basis_[i], j.basis_[k]))) grew = true;
    if (!grew) break;
    lo = cur;
  }
  j.finalize_structure();
  return j;
}

void JordanAlgebra::finalize_structure() {
  std::size_t d = basis_.size();
  structure_.assign(d, {});
  for (std::size_t i = 0; i < d; ++i) {
    structure_[i].resize(d - i);
    for (std::size_t k = i; k < d; ++k)
      structure_[i][k - i] = coordinates(jordan_product(basis_[i], basis_[k]));
  }
}

bool JordanAlgebra::contains(const Matrix& a) const {
  VecR flat = a.flatten(), combo;
  if (flat.size() != ambient_ * ambient_) return false;
  return reduce_track(flat, combo);
}

VecR JordanAlgebra::coordinates(const Matrix& a) const {
  if (a.rows() != ambient_ || a.cols() != ambient_)
    throw DimensionMismatch("coordinates");
  VecR flat = a.flatten(), combo;
  if (!reduce_track(flat, combo)) throw Error("coordinates: matrix outside span");
  return combo;
}

Matrix JordanAlgebra::from_coordinates(const VecR& c) const {
  if (c.size() != basis_.size()) throw DimensionMismatch("from_coordinates");
  Matrix m(ambient_, ambient_);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) m = m + basis_[i].scaled(c[i]);
  return m;
}

const VecR& JordanAlgebra::structure(std::size_t i, std::size_t j) const {
  return i <= j ? structure_[i][j - i] : structure_[j][i - j];
}

Matrix JordanAlgebra::left_mult_operator(const VecR& z) const {
  std::size_t d = basis_.size();
  if (z.size() != d) throw DimensionMismatch("left_mult_operator");
  Matrix l(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      if (z[i] == 0) continue;
      const VecR& c = structure(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (c[k] != 0) l.set(k, j, l.at(k, j) + z[i] * c[k]);
    }
  return l;
}

bool formally_real(const JordanAlgebra& j) {
  // positive definiteness of the trace form, by symmetric elimination
  std::size_t d = j.dim();
  Matrix g(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      Rat v = j.basis()[a].frob(j.basis()[b]);
      g.set(a, b, v);
      g.set(b, a, v);
    }
  for (std::size_t p = 0; p < d; ++p) {
    if (g.at(p, p) <= 0) return false;
    for (std::size_t i = p + 1; i < d; ++i) {
      Rat f = g.at(i, p) / g.at(p, p);
      for (std::size_t k = p; k < d; ++k) g.set(i, k, g.at(i, k) - f * g.at(p, k));
    }
  }
  return true;
}

std::vector<Matrix> center(const JordanAlgebra& j) {
  std::size_t d = j.dim();
  std::vector<Matrix> lops;
  lops.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    VecR ei(d, Rat(0));
    ei[i] = 1;
    lops.push_back(j.left_mult_operator(ei));
  }
  // rows: for each basis index b and entry (r,s), sum_i z_i [L_i, L_b]_{rs} = 0
  std::vector<VecR> rows;
  for (std::size_t b = 0; b < d; ++b) {
    std::vector<Matrix> comm;
    comm.reserve(d);
    for (std::size_t i = 0; i < d; ++i)
      comm.push_back(lops[i] * lops[b] - lops[b] * lops[i]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) {
        VecR row(d, Rat(0));
        bool nonzero = false;
        for (std::size_t i = 0; i < d; ++i) {
          row[i] = comm[i].at(r, s);
          if (row[i] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  std::vector<Matrix> out;
  if (rows.empty()) {
    for (std::size_t i = 0; i < d; ++i) {
      VecR ei(d, Rat(0));
      ei[i] = 1;
      out.push_back(j.from_coordinates(ei));
    }
    return out;
  }
  for (const auto& z : kernel_basis(Matrix::from_rows(rows)))
    out.push_back(j.from_coordinates(z));
  return out;
}

std::string factor_type_name(FactorType t) {
  switch (t) {
    case FactorType::RealHermitian: return "RealHermitian";
    case FactorType::ComplexHermitian: return "ComplexHermitian";
    case FactorType::QuaternionHermitian: return "QuaternionHermitian";
    case FactorType::SpinFactor: return "SpinFactor";
  }
  return "?";
}

namespace {

std::size_t min_poly_degree(const Matrix& a, const Matrix& unit) {
  SpanTracker tracker(a.rows() * a.cols());
  tracker.add(unit.flatten());
  Matrix pw = a;
  std::size_t deg = 1;
  while (tracker.add(pw.flatten())) {
    pw = pw * a;
    ++deg;
  }
  return deg;  // smallest t with a^t dependent on {e, a, ..., a^{t-1}}
}

}  // namespace

SimpleClassification classify_simple(const std::vector<Matrix>& ideal_basis,
                                     const Matrix& unit, Rng& rng) {
  std::size_t d = ideal_basis.size();
  if (d == 0) throw InvalidParams("classify_simple: empty ideal");

  std::size_t r = 0;
  for (int sample = 0; sample < 5; ++sample) {
    Matrix a(unit.rows(), unit.cols());
    for (const auto& b : ideal_basis) a = a + b.scaled(rng.small_nonzero());
    std::size_t deg = min_poly_degree(a, unit);
    if (sample == 0) r = deg;
    else if (deg != r)
      throw Error("classify_simple: generic rank samples disagree (" +
                  std::to_string(r) + " vs " + std::to_string(deg) + ")");
  }

  SimpleClassification out{FactorType::RealHermitian, 1, int(r), ""};
  if (r == 1) {
    if (d != 1) throw UnrecognizedDimension("rank 1 with dim " + std::to_string(d));
    return out;
  }
  if (r == 2) {
    if (d < 3) throw UnrecognizedDimension("rank 2 with dim " + std::to_string(d));
    out.type = FactorType::SpinFactor;
    out.param = int(d) - 1;
    if (d == 3) out.note = "= H_2(R)";
    if (d == 4) out.note = "= H_2(C)";
    if (d == 6) out.note = "= H_2(H)";
    return out;
  }
  if (r == 3 && d == 27)
    throw ExceptionalAlbert("H_3(O) dimensions cannot occur inside Sym^2(V)");
  if (d == r * (r + 1) / 2) {
    out.type = FactorType::RealHermitian;
    out.param = int(r);
  } else if (d == r * r) {
    out.type = FactorType::ComplexHermitian;
    out.param = int(r);
  } else if (d == r * (2 * r - 1)) {
    out.type = FactorType::QuaternionHermitian;
    out.param = int(r);
  } else {
    throw UnrecognizedDimension("rank " + std::to_string(r) + ", dim " +
                                std::to_string(d) + " matches no special type");
  }
  return out;
}

namespace {

using DBasis = std::vector<std::vector<double>>;  // orthonormal columns

std::vector<DBasis> refine_blocks(const std::vector<DBasis>& blocks,
                                  const Matrix& z, double tol) {
  std::size_t n = z.rows();
  std::vector<std::vector<double>> zd(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) zd[i][k] = rat_to_double(z.at(i, k));

  std::vector<DBasis> out;
  for (const auto& u : blocks) {
    std::size_t p = u.size();
    // restricted operator U^T z U
    std::vector<double> zu(p * p);
    for (std::size_t a = 0; a < p; ++a) {
      std::vector<double> zv(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) zv[i] += zd[i][k] * u[a][k];
      for (std::size_t b = 0; b < p; ++b) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += u[b][i] * zv[i];
        zu[b * p + a] = s;
      }
    }
    // symmetrize against roundoff before splitting
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a + 1; b < p; ++b) {
        double avg = (zu[a * p + b] + zu[b * p + a]) / 2;
        zu[a * p + b] = zu[b * p + a] = avg;
      }
    auto clusters = symmetric_eigensplit(zu, p, tol);
    for (const auto& cl : clusters) {
      DBasis nb;
      for (const auto& v : cl.basis) {
        std::vector<double> w(n, 0.0);
        for (std::size_t a = 0; a < p; ++a)
          for (std::size_t i = 0; i < n; ++i) w[i] += v[a] * u[a][i];
        nb.push_back(std::move(w));
      }
      out.push_back(std::move(nb));
    }
  }
  return out;
}

}  // namespace

std::vector<SimpleFactor> decompose(const JordanAlgebra& j, double tol,
                                    std::uint64_t seed) {
  if (!formally_real(j)) throw NotFormallyReal("decompose: trace form degenerate");
  std::size_t n = j.ambient_dim();
  std::vector<Matrix> zs = center(j);
  std::size_t r = zs.size();

  // joint eigenspaces of the commuting central basis, float mode
  std::vector<DBasis> blocks(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    blocks[0].push_back(std::move(e));
  }
  for (const auto& z : zs) blocks = refine_blocks(blocks, z, tol);
  if (blocks.size() != r)
    throw Error("decompose: center split found " + std::to_string(blocks.size()) +
                " blocks for a " + std::to_string(r) + "-dimensional center");

  // projectors: U U^T rounded to rationals (denominator <= 10^6), then
  // re-verified exactly so the final answer does not depend on floats
  std::vector<Matrix> projectors;
  Matrix sum(n, n);
  for (const auto& u : blocks) {
    Matrix p(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        double v = 0;
        for (const auto& col : u) v += col[a] * col[b];
        Rat q = rationalize(v, 1000000);
        p.set(a, b, q);
        p.set(b, a, q);
      }
    if (!(p * p == p)) throw Error("decompose: projector fails e^2 = e after rounding");
    for (const auto& bb : j.basis())
      if (!(p * bb == bb * p)) throw Error("decompose: projector not central");
    if (!j.contains(p)) throw Error("decompose: projector outside the algebra");
    sum = sum + p;
    projectors.push_back(std::move(p));
  }
  if (!(sum == Matrix::identity(n))) throw Error("decompose: projectors do not sum to I");

  Rng rng(seed);
  std::vector<SimpleFactor> out;
  for (const auto& e : projectors) {
    SimpleFactor f;
    f.projector = e;
    Rat tr = e.trace();
    if (tr.get_den() != 1) throw Error("decompose: non-integer projector trace");
    f.subspace_dim = std::size_t(tr.get_num().get_ui());

    SpanTracker tracker(n * n);
    for (const auto& b : j.basis()) {
      Matrix eb = jordan_product(e, b);
      if (tracker.add(eb.flatten())) f.ideal_basis.push_back(eb);
    }
    auto cls = classify_simple(f.ideal_basis, e, rng);
    f.type = cls.type;
    f.param = cls.param;
    f.jordan_rank = cls.rank;
    f.note = cls.note;

    std::size_t dv = f.subspace_dim;
    switch (f.type) {
      case FactorType::RealHermitian:
        if (dv % f.param) throw UnrecognizedDimension("dim V_i not divisible by n");
        f.multiplicity = int(dv) / f.param;
        break;
      case FactorType::ComplexHermitian:
        if (dv % (2 * f.param)) throw UnrecognizedDimension("dim V_i not divisible by 2n");
        f.multiplicity = int(dv) / (2 * f.param);
        break;
      case FactorType::QuaternionHermitian:
        if (dv % (4 * f.param)) throw UnrecognizedDimension("dim V_i not divisible by 4n");
        f.multiplicity = int(dv) / (4 * f.param);
        break;
      case FactorType::SpinFactor: {
        if (dv % 2) throw UnrecognizedDimension("spin factor on odd-dimensional V_i");
        std::size_t l = dv / 2, delta = clifford_irreducible_dim(f.param - 1);
        f.multiplicity = (l % delta == 0) ? int(l / delta) : 0;
        break;
      }
    }
    out.push_back(std::move(f));
  }

  std::sort(out.begin(), out.end(), [](const SimpleFactor& a, const SimpleFactor& b) {
    if (a.subspace_dim != b.subspace_dim) return a.subspace_dim > b.subspace_dim;
    const VecR fa = a.projector.flatten(), fb = b.projector.flatten();
    return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
  });
  return out;
}

Polynomial idempotent_from_subspace(const std::vector<VecR>& w, std::size_t ambient) {
  Matrix pw = w.empty() ? Matrix::zero(ambient, ambient) : projector_onto_span(w);
  if (pw.rows() != ambient) throw DimensionMismatch("idempotent_from_subspace");
  return quad_form(Matrix::identity(ambient) - pw);
}

std::vector<VecR> subspace_from_idempotent(const Polynomial& f) {
  std::size_t n = f.vars();
  if (f.is_zero()) {
    std::vector<VecR> all;
    for (std::size_t i = 0; i < n; ++i) {
      VecR e(n, Rat(0));
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  Matrix a = hessian_half(f);
  if (!(a * a == a)) throw NotIdempotent("subspace_from_idempotent: Hess(f)/2 not idempotent");
  return kernel_basis(a);
}

std::vector<EigenPart> eigenspace_split(const Polynomial& f, const JordanAlgebra& j,
                                        double tol) {
  std::size_t n = j.ambient_dim();
  if (f.is_zero()) {
    std::vector<VecR> all;
    for (std::size_t i = 0; i < n; ++i) {
      VecR e(n, Rat(0));
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return {{Rat(0), all}};
  }
  Matrix a = hessian_half(f);
  if (!j.contains(a)) throw Error("eigenspace_split: f not in the span of J");

  auto clusters = symmetric_eigensplit(a, tol);
  std::vector<EigenPart> parts;
  Matrix recon(n, n);
  for (const auto& cl : clusters) {
    Rat lam = rationalize(cl.value, 1000000);
    auto ker = kernel_basis(a - Matrix::identity(n).scaled(lam));
    if (ker.size() != cl.basis.size())
      throw Error("eigenspace_split: eigenvalue near " + std::to_string(cl.value) +
                  " is not rational at denominator 10^6");
    recon = recon + projector_onto_span(ker).scaled(lam);
    parts.push_back({lam, std::move(ker)});
  }
  if (!(recon == a))
    throw Error("eigenspace_split: projector reconstruction mismatch");
  return parts;
}

}  // namespace folia
