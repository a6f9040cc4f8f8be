#include "folia/models.hpp"

#include "folia/error.hpp"
#include "folia/jordan.hpp"
#include "folia/linalg.hpp"

namespace folia {

namespace {

std::vector<VecR> matrices_applied(const std::vector<Matrix>& ms, const VecR& x) {
  std::vector<VecR> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.apply(x));
  return out;
}

std::vector<std::vector<std::size_t>> copy_blocks(std::size_t copies, std::size_t width) {
  std::vector<std::vector<std::size_t>> blocks(copies);
  for (std::size_t i = 0; i < copies; ++i)
    for (std::size_t j = 0; j < width; ++j) blocks[i].push_back(i * width + j);
  return blocks;
}

}  // namespace

FoliationModel diagonal_model(Field f, std::size_t k, std::size_t n) {
  if (k < 1 || n < 1) throw InvalidParams("diagonal_model: k, n >= 1");
  std::size_t d = field_dim(f);
  FoliationModel m;
  m.dim = d * k * n;
  for (const auto& e : hermitian_basis(f, n))
    m.generators.push_back(quad_form(diag_form_matrix(f, k, n, e)));
  m.lie_basis = diag_lie_basis(f, k, n);
  m.oracle_is_linear = true;
  auto lie = std::make_shared<std::vector<Matrix>>(m.lie_basis);
  m.oracle = [lie](const VecR& x) { return matrices_applied(*lie, x); };
  if (f == Field::R) {
    // O(k) has two components; reflect the first coordinate in every copy
    VecR diag(k, Rat(1));
    diag[0] = -1;
    m.discrete_maps.push_back(kron(Matrix::identity(n), Matrix::diag(diag)));
  }
  m.grading_blocks = copy_blocks(n, d * k);
  m.provenance = "diag:" + std::string(field_name(f)) + "," + std::to_string(k) + "," +
                 std::to_string(n);
  m.herm_frames.push_back({f, k, n, 0});
  return m;
}

FoliationModel so_model(std::size_t k, std::size_t n) {
  FoliationModel m = diagonal_model(Field::R, k, n);
  m.discrete_maps.clear();
  m.provenance = "so:" + std::to_string(k) + "," + std::to_string(n);
  return m;
}

namespace {

// Tangent constraints are only valid where the generator fibers are
// regular: the oracle returns {} when the Jacobian rank drops below the
// generic rank, which is probed once on fixed pseudo-random points.
std::size_t probe_generic_rank(const std::function<Matrix(const VecR&)>& jacobian,
                               std::size_t dim) {
  Rng rng(0xf011a7e5u);
  std::size_t best = 0;
  for (int t = 0; t < 12; ++t) {
    VecR x(dim);
    for (auto& v : x) v = Rat(rng.uniform(-5, 5));
    best = std::max(best, rank(jacobian(x)));
  }
  return best;
}

}  // namespace

FoliationModel clifford_model(const CliffordSystem& c) {
  if (!verify_relations(c)) throw RelationFailure("clifford_model: relations fail");
  FoliationModel m;
  m.dim = 2 * c.l;
  m.generators.push_back(quad_form(Matrix::identity(m.dim)));
  for (const auto& p : c.P) m.generators.push_back(quad_form(p));
  auto cs = std::make_shared<CliffordSystem>(c);
  auto jac = [cs](const VecR& x) {
    std::vector<VecR> rows;
    rows.push_back(x);
    for (auto& v : rows.back()) v *= 2;
    for (const auto& p : cs->P) {
      rows.push_back(p.apply(x));
      for (auto& v : rows.back()) v *= 2;
    }
    return Matrix::from_rows(rows);
  };
  std::size_t generic = probe_generic_rank(jac, m.dim);
  m.oracle = [cs, jac, generic](const VecR& x) -> std::vector<VecR> {
    for (const auto& v : x)
      if (v != 0) {
        Matrix j = jac(x);
        if (rank(j) < generic) return {};  // singular point, no valid rows
        return kernel_basis(j);
      }
    return {};
  };
  // eigenspace halves of P_0 = diag(I,-I); P_1 = offdiag(I,I) swaps them
  m.grading_blocks = copy_blocks(2, c.l);
  m.block_swaps.push_back(c.P[1]);
  m.provenance = "clifford:" + std::to_string(c.m) + "," +
                 std::to_string(c.l / clifford_irreducible_dim(c.m));
  m.disconnected_warning = has_disconnected_leaves(c);
  m.cliff_frames.push_back({cs, 0});
  return m;
}

FoliationModel product_model(const FoliationModel& a, const FoliationModel& b) {
  FoliationModel m;
  m.dim = a.dim + b.dim;
  if (a.dim == 0) return b;
  if (b.dim == 0) return a;

  // lift generators of both factors
  for (const auto& g : a.generators) {
    Polynomial lifted(m.dim);
    for (const auto& [e, c] : g.terms()) {
      Expo ex(m.dim, 0);
      for (std::size_t i = 0; i < a.dim; ++i) ex[i] = e[i];
      lifted.add_term(ex, c);
    }
    m.generators.push_back(std::move(lifted));
  }
  for (const auto& g : b.generators) {
    Polynomial lifted(m.dim);
    for (const auto& [e, c] : g.terms()) {
      Expo ex(m.dim, 0);
      for (std::size_t i = 0; i < b.dim; ++i) ex[a.dim + i] = e[i];
      lifted.add_term(ex, c);
    }
    m.generators.push_back(std::move(lifted));
  }

  auto oa = a.oracle, ob = b.oracle;
  std::size_t da = a.dim, db = b.dim;
  m.oracle = [oa, ob, da, db](const VecR& x) {
    VecR xa(x.begin(), x.begin() + da), xb(x.begin() + da, x.end());
    std::vector<VecR> out;
    for (const auto& t : oa(xa)) {
      VecR v(da + db, Rat(0));
      for (std::size_t i = 0; i < da; ++i) v[i] = t[i];
      out.push_back(std::move(v));
    }
    for (const auto& t : ob(xb)) {
      VecR v(da + db, Rat(0));
      for (std::size_t i = 0; i < db; ++i) v[da + i] = t[i];
      out.push_back(std::move(v));
    }
    return out;
  };

  auto embed = [&](const Matrix& x, bool first) {
    Matrix e(m.dim, m.dim);
    std::size_t off = first ? 0 : da;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (x.at(i, j) != 0) e.set(off + i, off + j, x.at(i, j));
    return e;
  };
  m.oracle_is_linear = a.oracle_is_linear && b.oracle_is_linear;
  if (m.oracle_is_linear) {
    for (const auto& x : a.lie_basis) m.lie_basis.push_back(embed(x, true));
    for (const auto& x : b.lie_basis) m.lie_basis.push_back(embed(x, false));
  }
  for (const auto& g : a.discrete_maps) {
    Matrix e = embed(g, true);
    for (std::size_t i = 0; i < db; ++i) e.set(da + i, da + i, 1);
    m.discrete_maps.push_back(e);
  }
  for (const auto& g : b.discrete_maps) {
    Matrix e = embed(g, false);
    for (std::size_t i = 0; i < da; ++i) e.set(i, i, 1);
    m.discrete_maps.push_back(e);
  }
  for (const auto& g : a.block_swaps) {
    Matrix e = embed(g, true);
    for (std::size_t i = 0; i < db; ++i) e.set(da + i, da + i, 1);
    m.block_swaps.push_back(e);
  }
  for (const auto& g : b.block_swaps) {
    Matrix e = embed(g, false);
    for (std::size_t i = 0; i < da; ++i) e.set(i, i, 1);
    m.block_swaps.push_back(e);
  }

  for (const auto& blk : a.grading_blocks) m.grading_blocks.push_back(blk);
  for (const auto& blk : b.grading_blocks) {
    std::vector<std::size_t> shifted;
    for (auto i : blk) shifted.push_back(da + i);
    m.grading_blocks.push_back(std::move(shifted));
  }
  // a factor without its own grading still splits off as one invariant block
  if (a.grading_blocks.empty()) {
    std::vector<std::size_t> whole;
    for (std::size_t i = 0; i < da; ++i) whole.push_back(i);
    m.grading_blocks.insert(m.grading_blocks.begin(), whole);
  }
  if (b.grading_blocks.empty()) {
    std::vector<std::size_t> whole;
    for (std::size_t i = 0; i < db; ++i) whole.push_back(da + i);
    m.grading_blocks.push_back(whole);
  }

  m.provenance = "product(" + a.provenance + ";" + b.provenance + ")";
  m.disconnected_warning = a.disconnected_warning || b.disconnected_warning;
  for (auto hf : a.herm_frames) m.herm_frames.push_back(hf);
  for (auto hf : b.herm_frames) {
    hf.offset += da;
    m.herm_frames.push_back(hf);
  }
  for (auto cf : a.cliff_frames) m.cliff_frames.push_back(cf);
  for (auto cf : b.cliff_frames) {
    cf.offset += da;
    m.cliff_frames.push_back(cf);
  }
  return m;
}

namespace {

std::function<std::vector<VecR>(const VecR&)> jacobian_kernel_oracle(
    std::shared_ptr<const std::vector<Polynomial>> gens, std::size_t dim) {
  auto jac = [gens, dim](const VecR& x) {
    std::vector<VecR> rows;
    for (const auto& g : *gens) {
      VecR row(dim);
      for (std::size_t i = 0; i < dim; ++i) row[i] = g.partial(i).eval(x);
      rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows);
  };
  std::size_t generic = probe_generic_rank(jac, dim);
  return [jac, generic](const VecR& x) -> std::vector<VecR> {
    Matrix j = jac(x);
    if (rank(j) < generic) return {};  // singular fiber point
    return kernel_basis(j);
  };
}

}  // namespace

FoliationModel composed_model(const CliffordSystem& c, const std::vector<Polynomial>& f0) {
  if (!verify_relations(c)) throw RelationFailure("composed_model: relations fail");
  std::size_t dim = 2 * c.l;
  for (const auto& g : f0) {
    if (g.vars() != c.m + 1)
      throw DimensionMismatch("composed_model: F0 generators need m+1 variables");
    if (!g.is_homogeneous()) throw InvalidParams("composed_model: inhomogeneous F0 generator");
  }
  FoliationModel m;
  m.dim = dim;
  m.generators.push_back(quad_form(Matrix::identity(dim)));
  std::vector<Polynomial> psi_forms;
  for (const auto& p : c.P) psi_forms.push_back(quad_form(p));
  for (const auto& g : f0) m.generators.push_back(g.substitute(psi_forms));

  auto gens = std::make_shared<std::vector<Polynomial>>(m.generators);
  m.oracle = jacobian_kernel_oracle(gens, dim);
  m.provenance = "composed:" + std::to_string(c.m) + "," +
                 std::to_string(c.l / clifford_irreducible_dim(c.m));
  return m;
}

FoliationModel trivial_model(std::size_t dim) {
  FoliationModel m;
  m.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) m.generators.push_back(Polynomial::variable(dim, i));
  m.oracle = [](const VecR&) { return std::vector<VecR>{}; };
  m.oracle_is_linear = true;  // empty Lie basis: no tangent constraints at all
  m.grading_blocks = copy_blocks(dim, 1);
  m.provenance = "trivial:" + std::to_string(dim);
  return m;
}

FoliationModel custom_model(std::size_t dim, std::vector<Polynomial> generators,
                            std::function<std::vector<VecR>(const VecR&)> oracle) {
  FoliationModel m;
  m.dim = dim;
  m.generators = std::move(generators);
  for (const auto& g : m.generators) {
    if (g.vars() != dim) throw DimensionMismatch("custom_model: generator variable count");
    if (!g.is_homogeneous()) throw InvalidParams("custom_model: inhomogeneous generator");
  }
  Polynomial r2 = quad_form(Matrix::identity(dim));
  bool have = false;
  try {
    have = graded_span(m.generators, 2).member(r2);
  } catch (const Error&) {
    have = false;
  }
  if (!have) m.generators.push_back(r2);
  if (oracle) {
    m.oracle = std::move(oracle);
  } else {
    auto gens = std::make_shared<std::vector<Polynomial>>(m.generators);
    m.oracle = jacobian_kernel_oracle(gens, dim);
  }
  return m;
}

Matrix scale_map(const FoliationModel& m, const std::vector<VecR>& w, const Rat& lambda,
                 const GradedSubspace& basic2) {
  Polynomial dist = idempotent_from_subspace(w, m.dim);
  if (!dist.is_zero() && !basic2.member(dist))
    throw NotInvariant("scale_map: d(.,W)^2 is not basic");
  Matrix pw = w.empty() ? Matrix::zero(m.dim, m.dim) : projector_onto_span(w);
  return pw + (Matrix::identity(m.dim) - pw).scaled(lambda);
}

}  // namespace folia
