#include "folia/symmetry.hpp"

#include <algorithm>

#include "folia/error.hpp"
#include "folia/linalg.hpp"
#include "folia/realify.hpp"

namespace folia {

namespace {

Rat spin_form(const Matrix& u, const Matrix& w, const Rat& unit_trace) {
  // u • w = beta(u,w) e on the factor, so beta = tr(uw)/tr(e)
  return (u * w).trace() / unit_trace;
}

}  // namespace

SpinFrame harvest_spin_frame(const std::vector<Matrix>& candidates,
                             const SimpleFactor& f) {
  if (f.type != FactorType::SpinFactor)
    throw UnsupportedType("harvest_spin_frame: not a spin factor");
  const Matrix& e = f.projector;
  Rat etr = e.trace();
  std::size_t want = std::size_t(f.param);  // m+1 frame elements

  SpinFrame frame;
  frame.unit = e;
  for (const auto& b : candidates) {
    if (frame.p.size() == want) break;
    Matrix a = jordan_product(e, b);
    Rat lam = a.trace() / etr;
    Matrix v = a - e.scaled(lam);  // vector part
    for (const auto& p : frame.p) v = v - p.scaled(spin_form(v, p, etr));
    Rat c = spin_form(v, v, etr), root;
    if (c == 0) continue;
    if (!rat_sqrt_exact(c, root))
      continue;  // this candidate needs an irrational normalization; try the next
    frame.p.push_back(v.scaled(1 / root));
  }
  if (frame.p.size() != want)
    throw UnsupportedType("harvest_spin_frame: no rational Clifford frame found");
  for (std::size_t a = 0; a < want; ++a) {
    if (!(frame.p[a] * frame.p[a] == e))
      throw Error("harvest_spin_frame: frame element squares incorrectly");
    for (std::size_t b = a + 1; b < want; ++b)
      if (!(frame.p[a] * frame.p[b] + frame.p[b] * frame.p[a]).is_zero())
        throw Error("harvest_spin_frame: frame elements fail to anticommute");
  }
  return frame;
}

std::vector<Matrix> spin_frame_candidates(const FoliationModel& m, const F2Result& r,
                                          const SimpleFactor& f) {
  std::vector<Matrix> out;
  for (const auto& cf : m.cliff_frames) {
    if (!cf.system) continue;
    std::size_t span = 2 * cf.system->l;
    if (f.subspace_dim != span) continue;
    bool inside = true;
    for (std::size_t i = 0; i < span && inside; ++i)
      if (f.projector.at(cf.offset + i, cf.offset + i) != 1) inside = false;
    if (!inside) continue;
    for (const auto& p : cf.system->P) {
      Matrix amb(m.dim, m.dim);
      for (std::size_t i = 0; i < span; ++i)
        for (std::size_t jj = 0; jj < span; ++jj)
          if (p.at(i, jj) != 0) amb.set(cf.offset + i, cf.offset + jj, p.at(i, jj));
      out.push_back(std::move(amb));
    }
  }
  for (const auto& g : m.generators)
    if (g.is_homogeneous_of(2)) out.push_back(hessian_half(g));
  for (const auto& b : r.algebra.basis()) out.push_back(b);
  return out;
}

namespace {

const HermFrame* match_herm_frame(const FoliationModel& m, const SimpleFactor& f) {
  for (const auto& hf : m.herm_frames) {
    std::size_t span = field_dim(hf.field) * hf.k * hf.n;
    // the factor occupies exactly the frame's coordinate range
    if (f.subspace_dim != span) continue;
    bool match = true;
    for (std::size_t i = 0; i < span && match; ++i)
      if (f.projector.at(hf.offset + i, hf.offset + i) != 1) match = false;
    if (match) return &hf;
  }
  return nullptr;
}

// embed a copies-action Q in O(n)/U(n)/Sp(n) at the frame offset,
// identity outside
Matrix embed_copy_action(const FoliationModel& m, const HermFrame& hf,
                         const std::vector<std::vector<VecR>>& q) {
  Matrix inner = diag_copy_action(hf.field, hf.k, hf.n, q);
  Matrix g = Matrix::identity(m.dim);
  for (std::size_t i = 0; i < inner.rows(); ++i)
    for (std::size_t j = 0; j < inner.cols(); ++j)
      g.set(hf.offset + i, hf.offset + j, inner.at(i, j));
  return g;
}

// reflection of K^n in the hyperplane w^perp, as a copies-action matrix
std::vector<std::vector<VecR>> reflection_entries(Field fld, const VecR& w_real,
                                                  std::size_t n) {
  std::size_t d = field_dim(fld);
  // w given as n coefficient vectors of length d
  std::vector<VecR> w(n);
  Rat norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = VecR(w_real.begin() + i * d, w_real.begin() + (i + 1) * d);
    for (const auto& c : w[i]) norm += c * c;
  }
  std::vector<std::vector<VecR>> q(n, std::vector<VecR>(n, VecR(d, Rat(0))));
  for (std::size_t i = 0; i < n; ++i) {
    q[i][i][0] = 1;
    for (std::size_t jj = 0; jj < n; ++jj) {
      VecR prod = field_mul(fld, w[i], field_conj(fld, w[jj]));
      for (std::size_t u = 0; u < d; ++u) q[i][jj][u] -= 2 * prod[u] / norm;
    }
  }
  return q;
}

}  // namespace

std::vector<Matrix> orthogonal_hessians(const F2Result& r, const FoliationModel& m) {
  std::vector<Matrix> out;
  Matrix id = Matrix::identity(m.dim);
  for (const auto& f : r.factors) {
    if (f.type == FactorType::SpinFactor) {
      SpinFrame frame = harvest_spin_frame(spin_frame_candidates(m, r, f), f);
      for (const auto& p : frame.p) out.push_back(p + (id - f.projector));
      continue;
    }
    const HermFrame* hf = match_herm_frame(m, f);
    if (!hf)
      throw UnsupportedType(
          "orthogonal_hessians: Hermitian factor without a model coordinate frame");
    std::size_t n = hf->n, d = field_dim(hf->field);
    auto add_reflection = [&](const VecR& w_real) {
      out.push_back(embed_copy_action(m, *hf, reflection_entries(hf->field, w_real, n)));
    };
    for (std::size_t a = 0; a < n; ++a) {
      VecR w(n * d, Rat(0));
      w[a * d] = 1;
      add_reflection(w);  // sign change on copy a
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        VecR w(n * d, Rat(0));
        w[a * d] = 1;
        w[b * d] = -1;
        add_reflection(w);  // transposition of copies a, b
        w[b * d] = 1;
        add_reflection(w);
      }
  }
  // every output is an exact orthogonal involution
  for (const auto& g : out) {
    if (!(g.transpose() * g == id) || !(g == g.transpose()))
      throw Error("orthogonal_hessians: generator is not an orthogonal involution");
  }
  return out;
}

bool verify_foliated_symmetries(const FoliationModel& m, const std::vector<Matrix>& gens,
                                std::size_t words, std::uint64_t seed,
                                const BasicOptions& opt) {
  for (const auto& g : gens)
    if (!is_foliated(m, m, g, HomMode::Onto, opt)) return false;
  Rng rng(seed);
  for (std::size_t t = 0; t < words && !gens.empty(); ++t) {
    Matrix w = Matrix::identity(m.dim);
    std::size_t len = 1 + rng.next() % 6;
    for (std::size_t s = 0; s < len; ++s) w = w * gens[rng.next() % gens.size()];
    if (!is_foliated(m, m, w, HomMode::Onto, opt)) return false;
  }
  return true;
}

std::vector<ModuliFactorReport> moduli_report(const std::vector<SimpleFactor>& factors) {
  std::vector<ModuliFactorReport> out;
  for (const auto& f : factors) {
    ModuliFactorReport r;
    r.factor_type = factor_type_name(f.type) + "(" + std::to_string(f.param) + ")";
    if (f.type == FactorType::SpinFactor) {
      std::size_t l = f.subspace_dim / 2;
      r.dims = {0, l, 2 * l};
      r.components = {"{0}", "S^" + std::to_string(f.param - 1), "{V_i}"};
    } else {
      std::size_t d = f.type == FactorType::RealHermitian   ? 1
                      : f.type == FactorType::ComplexHermitian ? 2
                                                               : 4;
      const char* k_name = f.type == FactorType::RealHermitian   ? "R"
                           : f.type == FactorType::ComplexHermitian ? "C"
                                                                    : "H";
      for (int j = 0; j <= f.param; ++j) {
        r.dims.push_back(std::size_t(j) * f.multiplicity * d);
        r.components.push_back("Gr_" + std::to_string(j) + "(" + k_name + "^" +
                               std::to_string(f.param) + ")");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

VecR rational_sphere_point(Rng& rng, std::size_t n) {
  if (n == 0) throw InvalidParams("rational_sphere_point");
  if (n == 1) return {Rat(rng.next() % 2 ? 1 : -1)};
  VecR t(n - 1);
  for (auto& x : t) x = rng.small_rat();
  Rat t2 = 0;
  for (const auto& x : t) t2 += x * x;
  VecR v(n);
  v[0] = (t2 - 1) / (t2 + 1);
  for (std::size_t i = 0; i + 1 < n; ++i) v[i + 1] = 2 * t[i] / (t2 + 1);
  return v;
}

std::vector<VecR> spin_eigenspace(const SpinFrame& frame, const VecR& v) {
  if (v.size() != frame.p.size()) throw DimensionMismatch("spin_eigenspace");
  std::size_t n = frame.unit.rows();
  Matrix a(n, n);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) a = a + frame.p[i].scaled(v[i]);
  // kernel of (A - e) on the factor, excluding the complement of the factor
  Matrix b = a - frame.unit.scaled(2) + Matrix::identity(n);
  return kernel_basis(b);
}

namespace {

// coordinates of 2 proj_U - e in the frame, when U is an eta(v) eigenspace
VecR recover_spin_vector(const SpinFrame& frame, const std::vector<VecR>& u) {
  Rat etr = frame.unit.trace();
  Matrix mu = projector_onto_span(u).scaled(2) - frame.unit;
  VecR v(frame.p.size());
  Matrix recon(frame.unit.rows(), frame.unit.rows());
  Rat norm = 0;
  for (std::size_t a = 0; a < frame.p.size(); ++a) {
    v[a] = (mu * frame.p[a]).trace() / etr;
    norm += v[a] * v[a];
    if (v[a] != 0) recon = recon + frame.p[a].scaled(v[a]);
  }
  if (!(recon == mu) || norm != 1)
    throw NotInvariant("transitivity_witness: subspace is not an eta(v) eigenspace");
  return v;
}

bool spans_equal(const std::vector<VecR>& a, const std::vector<VecR>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  SpanTracker ta(a[0].size());
  for (const auto& x : a) ta.add(x);
  for (const auto& x : b)
    if (!ta.contains(x)) return false;
  SpanTracker tb(b[0].size());
  for (const auto& x : b) tb.add(x);
  return ta.rank() == tb.rank();
}

// A chain of rational reflections of R^n taking subspace S onto S';
// vectors of equal exact norm are matched by enumerating small coefficient
// combinations and comparing squarefree signatures.
std::vector<VecR> reflection_chain(std::vector<VecR> s, std::vector<VecR> s2) {
  std::vector<VecR> axes;
  while (!s.empty()) {
    if (spans_equal(s, s2)) return axes;
    // candidate vectors with their norms
    auto candidates = [](const std::vector<VecR>& basis) {
      std::vector<VecR> out;
      std::size_t k = basis.size();
      std::vector<int> coef(k, 0);
      // all combinations with coefficients in {-2..2}, skipping zero
      std::size_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= 5;
      for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        VecR v(basis[0].size(), Rat(0));
        for (std::size_t i = 0; i < k; ++i) {
          int ci = int(c % 5) - 2;
          c /= 5;
          if (ci != 0)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rat(ci) * basis[i][j];
        }
        bool nz = false;
        for (const auto& x : v)
          if (x != 0) { nz = true; break; }
        if (nz) out.push_back(std::move(v));
      }
      return out;
    };
    auto xs = candidates(s), ys = candidates(s2);
    bool found = false;
    for (const auto& x : xs) {
      Rat nx = dot(x, x);
      for (const auto& y : ys) {
        Rat ny = dot(y, y);
        Rat ratio = nx / ny, root;
        if (!rat_sqrt_exact(ratio, root)) continue;
        VecR yhat = y;
        for (auto& c : yhat) c *= root;  // |yhat| = |x| exactly
        VecR w(x.size());
        bool wz = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
          w[i] = x[i] - yhat[i];
          if (w[i] != 0) wz = false;
        }
        if (!wz) {
          axes.push_back(w);
          // apply the reflection to the basis of s
          Rat wn = dot(w, w);
          for (auto& bvec : s) {
            Rat pr = dot(bvec, w) * 2 / wn;
            for (std::size_t i = 0; i < bvec.size(); ++i) bvec[i] -= pr * w[i];
          }
        }
        // recurse on the orthogonal complements of yhat within both spans
        auto shrink = [&](std::vector<VecR>& basis, const VecR& dir) {
          Matrix rows = Matrix::from_rows(basis);
          VecR rhs = rows.apply(dir);
          std::vector<VecR> coef_rows;
          coef_rows.push_back(rhs);
          std::vector<VecR> next;
          for (const auto& kvec : kernel_basis(Matrix::from_rows(coef_rows))) {
            VecR vv(basis[0].size(), Rat(0));
            for (std::size_t i = 0; i < basis.size(); ++i)
              for (std::size_t jj = 0; jj < vv.size(); ++jj)
                vv[jj] += kvec[i] * basis[i][jj];
            next.push_back(std::move(vv));
          }
          basis = std::move(next);
        };
        shrink(s, yhat);
        shrink(s2, yhat);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found)
      throw UnsupportedType(
          "transitivity_witness: no rational norm-matched pair at small height");
  }
  if (!s2.empty())
    throw UnsupportedType("transitivity_witness: dimension mismatch in the chain");
  return axes;
}

}  // namespace

Matrix transitivity_witness(const FoliationModel& m, const F2Result& r,
                            const std::vector<VecR>& u, const std::vector<VecR>& w,
                            const BasicOptions& opt) {
  if (u.size() != w.size())
    throw NotSameDimension("transitivity_witness: dim U != dim W");
  Matrix id = Matrix::identity(m.dim);
  if (spans_equal(u, w)) return id;

  // locate the factor containing both subspaces
  const SimpleFactor* factor = nullptr;
  for (const auto& f : r.factors) {
    auto inside = [&](const std::vector<VecR>& basis) {
      for (const auto& x : basis)
        if (!(f.projector.apply(x) == x)) return false;
      return true;
    };
    if (inside(u) && inside(w)) {
      factor = &f;
      break;
    }
  }
  if (!factor)
    throw UnsupportedType("transitivity_witness: U, W not in a common factor");

  Matrix g = id;
  if (factor->type == FactorType::SpinFactor) {
    SpinFrame frame = harvest_spin_frame(spin_frame_candidates(m, r, *factor), *factor);
    VecR v = recover_spin_vector(frame, u);
    VecR v2 = recover_spin_vector(frame, w);
    auto eta_of = [&](const VecR& coords) {
      Matrix a(m.dim, m.dim);
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) a = a + frame.p[i].scaled(coords[i]);
      return a;
    };
    VecR sum(v.size());
    Rat c = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      sum[i] = v[i] + v2[i];
      c += sum[i] * sum[i];
    }
    Rat root;
    bool done = false;
    if (c != 0 && rat_sqrt_exact(c, root)) {
      // single generator: eta((v+v')/|v+v'|) conjugates eta(v) to eta(v')
      for (auto& x : sum) x /= root;
      g = eta_of(sum) + (id - factor->projector);
      done = true;
    }
    if (!done) {
      // two generators g = eta(u1) eta(u2): the adjoint action is the
      // rotation N_{u1} o N_{u2}; with u2 perpendicular to v it sends
      // v -> -v -> v' for u1 = v - v'. Rationality needs |u1|^2 |u2|^2 to
      // be a perfect square, so search small-height u2 in v-perp.
      VecR u1(v.size());
      Rat n1 = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        u1[i] = v[i] - v2[i];
        n1 += u1[i] * u1[i];
      }
      std::vector<VecR> perp = kernel_basis(Matrix::from_rows({v}));
      Rat t = 0;
      for (std::size_t i = 0; i < v.size(); ++i) t += v[i] * v2[i];
      VecR gs(v.size());  // v' - <v,v'> v, also perpendicular to v
      for (std::size_t i = 0; i < v.size(); ++i) gs[i] = v2[i] - t * v[i];
      perp.push_back(gs);

      std::vector<VecR> candidates = perp;
      for (std::size_t a = 0; a < perp.size() && candidates.size() < 4000; ++a)
        for (std::size_t b = a + 1; b < perp.size(); ++b)
          for (int ca = -3; ca <= 3 && candidates.size() < 4000; ++ca)
            for (int cb = -3; cb <= 3; ++cb) {
              if (ca == 0 && cb == 0) continue;
              VecR u2(v.size(), Rat(0));
              for (std::size_t i = 0; i < v.size(); ++i)
                u2[i] = Rat(ca) * perp[a][i] + Rat(cb) * perp[b][i];
              candidates.push_back(std::move(u2));
            }
      for (const auto& u2 : candidates) {
        Rat n2 = dot(u2, u2);
        if (n2 == 0 || n1 == 0) continue;
        Rat prod = n1 * n2;
        if (!rat_sqrt_exact(prod, root)) continue;
        Matrix gg = eta_of(u1) * eta_of(u2);
        g = gg.scaled(1 / root) + (id - factor->projector);
        done = true;
        break;
      }
    }
    if (!done)
      throw UnsupportedType(
          "transitivity_witness: no rational one- or two-generator word links the "
          "eigenvectors (the spinor norm obstructs a rational witness here)");
  } else if (factor->type == FactorType::RealHermitian) {
    const HermFrame* hf = match_herm_frame(m, *factor);
    if (!hf)
      throw UnsupportedType("transitivity_witness: real factor lacks a coordinate frame");
    std::size_t n = hf->n, k = hf->k;
    // read off the copy-space projectors P_S, P_S' from the subspace
    // projectors, verifying the tensor pattern
    auto copy_projector = [&](const std::vector<VecR>& basis) {
      Matrix pu = projector_onto_span(basis);
      Matrix ps(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          ps.set(i, j, pu.at(hf->offset + i * k, hf->offset + j * k));
      // verify pu = ps (x) I_k at the offset
      for (std::size_t i = 0; i < n * k; ++i)
        for (std::size_t j = 0; j < n * k; ++j) {
          Rat expect = (i % k == j % k) ? ps.at(i / k, j / k) : Rat(0);
          if (pu.at(hf->offset + i, hf->offset + j) != expect)
            throw NotInvariant("transitivity_witness: subspace is not copies-shaped");
        }
      return ps;
    };
    Matrix ps = copy_projector(u), ps2 = copy_projector(w);
    auto basis_of = [&](const Matrix& p) {
      SpanTracker t(n);
      for (std::size_t i = 0; i < n; ++i) t.add(p.col(i));
      return t.rows();
    };
    auto axes = reflection_chain(basis_of(ps), basis_of(ps2));
    Matrix qm = Matrix::identity(n);
    for (const auto& ax : axes) {
      Matrix refl = Matrix::identity(n);
      Rat nrm = dot(ax, ax);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          refl.set(i, j, refl.at(i, j) - 2 * ax[i] * ax[j] / nrm);
      qm = refl * qm;
    }
    std::vector<std::vector<VecR>> q(n, std::vector<VecR>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q[i][j] = VecR{qm.at(i, j)};
    g = embed_copy_action(m, *hf, q);
  } else {
    throw UnsupportedType(
        "transitivity_witness: constructive witnesses cover spin and real factors only");
  }

  // exact verification: g(U) = W, orthogonality, and foliated in both senses
  std::vector<VecR> gu;
  for (const auto& x : u) gu.push_back(g.apply(x));
  if (!spans_equal(gu, w)) throw Error("transitivity_witness: g(U) != W");
  if (!(g.transpose() * g == id)) throw Error("transitivity_witness: g not orthogonal");
  if (!is_foliated(m, m, g, HomMode::Onto, opt))
    throw Error("transitivity_witness: g is not foliated");
  return g;
}

}  // namespace folia
