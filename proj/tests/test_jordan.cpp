#include <doctest.h>

#include "folia/clifford.hpp"
#include "folia/error.hpp"
#include "folia/jordan.hpp"
#include "folia/linalg.hpp"
#include "folia/realify.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {

std::vector<Matrix> herm_ambient_basis(Field f, std::size_t n, std::size_t k) {
  std::vector<Matrix> out;
  for (const auto& e : hermitian_basis(f, n)) out.push_back(diag_form_matrix(f, k, n, e));
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return m;
}

Matrix random_skew(Rng& rng, std::size_t n) {
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = rng.small_rat();
      s.set(i, j, v);
      s.set(j, i, -v);
    }
  return s;
}

}  // namespace

TEST_CASE("jordan product basics") {
  auto c = build_clifford(3, 1);
  Matrix id = Matrix::identity(2 * c.l);
  for (const auto& p : c.P) {
    CHECK(jordan_product(p, id) == p);
    CHECK(jordan_product(p, p) == id);
  }
  CHECK(jordan_product(c.P[0], c.P[1]).is_zero());

  Rng rng(2);
  Matrix s = random_skew(rng, 3);
  Matrix a = s * s.transpose();
  CHECK(jordan_product(a, a) == a * a);
}

TEST_CASE("close") {
  // seed {I}: one-dimensional
  CHECK(JordanAlgebra::close({Matrix::identity(4)}).dim() == 1);

  // Clifford system closes to dimension m+2
  for (std::size_t m : {1, 2, 3, 4}) {
    auto c = build_clifford(m, 1);
    auto j = JordanAlgebra::close(c.P);
    CHECK(j.dim() == m + 2);
    // basis prefix: I then the P_i
    CHECK(j.basis()[0] == Matrix::identity(2 * c.l));
    for (std::size_t i = 0; i <= m; ++i) CHECK(j.basis()[i + 1] == c.P[i]);
  }

  // already-closed H_3(R) stays put
  auto h3 = herm_ambient_basis(Field::R, 3, 1);
  CHECK(JordanAlgebra::close(h3).dim() == 6);
}

TEST_CASE("jordan identity on closed algebras") {
  Rng rng(31);
  auto check_identity = [&](const JordanAlgebra& j) {
    for (int t = 0; t < 30; ++t) {
      VecR ca(j.dim()), cb(j.dim());
      for (auto& x : ca) x = rng.small_int();
      for (auto& x : cb) x = rng.small_int();
      Matrix a = j.from_coordinates(ca), b = j.from_coordinates(cb);
      Matrix a2 = jordan_product(a, a);
      CHECK(jordan_product(a, jordan_product(b, a2)) ==
            jordan_product(jordan_product(a, b), a2));
    }
  };
  check_identity(JordanAlgebra::close(build_clifford(3, 1).P));
  check_identity(JordanAlgebra::close(herm_ambient_basis(Field::C, 2, 1)));
}

TEST_CASE("center") {
  auto spin = JordanAlgebra::close(build_clifford(2, 1).P);
  auto zs = center(spin);
  REQUIRE(zs.size() == 1);

  CHECK(center(JordanAlgebra::close({Matrix::identity(3)})).size() == 1);

  // block diagonal H_2(R) + H_1(R): two-dimensional center
  auto h2 = herm_ambient_basis(Field::R, 2, 1);
  std::vector<Matrix> blocks;
  for (const auto& b : h2) blocks.push_back(direct_sum(b, Matrix::zero(1, 1)));
  blocks.push_back(direct_sum(Matrix::zero(2, 2), Matrix::identity(1)));
  auto j = JordanAlgebra::close(blocks);
  CHECK(center(j).size() == 2);
}

TEST_CASE("formally real") {
  CHECK(formally_real(JordanAlgebra::close(build_clifford(2, 1).P)));
  CHECK(formally_real(JordanAlgebra::close(herm_ambient_basis(Field::H, 2, 1))));
}

TEST_CASE("decompose clifford to spin factor") {
  for (std::size_t m : {1, 2, 4}) {
    auto c = build_clifford(m, 1);
    auto factors = decompose(JordanAlgebra::close(c.P));
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].type == FactorType::SpinFactor);
    CHECK(factors[0].param == int(m) + 1);
    CHECK(factors[0].subspace_dim == 2 * c.l);
    CHECK(factors[0].projector == Matrix::identity(2 * c.l));
  }
}

TEST_CASE("decompose hermitian factors") {
  // H_3(R) tensor I_2
  auto factors = decompose(JordanAlgebra::close(herm_ambient_basis(Field::R, 3, 2)));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].type == FactorType::RealHermitian);
  CHECK(factors[0].param == 3);
  CHECK(factors[0].multiplicity == 2);

  // H_2(H) reports SpinFactor(5)
  auto fh = decompose(JordanAlgebra::close(herm_ambient_basis(Field::H, 2, 1)));
  REQUIRE(fh.size() == 1);
  CHECK(fh[0].type == FactorType::SpinFactor);
  CHECK(fh[0].param == 5);
  CHECK(fh[0].note == "= H_2(H)");

  // H_3(H): quaternionic, rank 3
  auto fq = decompose(JordanAlgebra::close(herm_ambient_basis(Field::H, 3, 1)));
  REQUIRE(fq.size() == 1);
  CHECK(fq[0].type == FactorType::QuaternionHermitian);
  CHECK(fq[0].param == 3);
  CHECK(fq[0].multiplicity == 1);
}

TEST_CASE("decompose block sums and exact projector identities") {
  auto ca = build_clifford(2, 1);          // spin factor on R^4
  auto hb = herm_ambient_basis(Field::R, 2, 1);  // H_2(R) on R^2
  std::vector<Matrix> seed;
  for (const auto& p : ca.P) seed.push_back(direct_sum(p, Matrix::zero(2, 2)));
  for (const auto& b : hb) seed.push_back(direct_sum(Matrix::zero(4, 4), b));
  auto j = JordanAlgebra::close(seed);
  auto factors = decompose(j);
  REQUIRE(factors.size() == 2);

  Matrix sum(6, 6);
  for (const auto& f : factors) sum = sum + f.projector;
  CHECK(sum == Matrix::identity(6));
  CHECK(jordan_product(factors[0].projector, factors[1].projector).is_zero());
  for (const auto& f : factors) {
    CHECK(jordan_product(f.projector, f.projector) == f.projector);
    for (const auto& b : j.basis()) CHECK(f.projector * b == b * f.projector);
  }

  bool has_spin = false, has_real = false;
  for (const auto& f : factors) {
    if (f.type == FactorType::SpinFactor && f.param == 3) has_spin = true;
    if (f.type == FactorType::RealHermitian && f.param == 2) has_real = true;
    if (f.type == FactorType::SpinFactor && f.param == 2) has_real = true;  // H_2(R)
  }
  CHECK(has_spin);
  CHECK(has_real);
}

TEST_CASE("classify_simple direct calls") {
  Rng rng(5);
  auto h3 = JordanAlgebra::close(herm_ambient_basis(Field::R, 3, 1));
  auto cls = classify_simple(h3.basis(), Matrix::identity(3), rng);
  CHECK(cls.type == FactorType::RealHermitian);
  CHECK(cls.param == 3);
  CHECK(cls.rank == 3);

  // d = 7, r = 2 from the C_{5,1} system
  auto c5 = JordanAlgebra::close(build_clifford(5, 1).P);
  CHECK(c5.dim() == 7);
  auto cls5 = classify_simple(c5.basis(), Matrix::identity(2 * 8), rng);
  CHECK(cls5.type == FactorType::SpinFactor);
  CHECK(cls5.param == 6);
}

TEST_CASE("classification round-trip under rational conjugation") {
  Rng rng(77);
  auto round_trip = [&](const std::vector<Matrix>& basis, FactorType type, int param,
                        int mult) {
    std::size_t n = basis[0].rows();
    Matrix q = cayley_orthogonal(random_skew(rng, n));
    std::vector<Matrix> conj;
    for (const auto& b : basis) conj.push_back(q * b * q.transpose());
    auto factors = decompose(JordanAlgebra::close(conj));
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].type == type);
    CHECK(factors[0].param == param);
    CHECK(factors[0].multiplicity == mult);
  };
  round_trip(herm_ambient_basis(Field::R, 3, 1), FactorType::RealHermitian, 3, 1);
  round_trip(herm_ambient_basis(Field::C, 2, 2), FactorType::SpinFactor, 3, 2);
  round_trip(build_clifford(4, 1).P, FactorType::SpinFactor, 5, 1);
}

TEST_CASE("idempotent correspondence") {
  std::size_t n = 2;
  // W = {0} -> |x|^2
  Polynomial f0 = idempotent_from_subspace({}, n);
  CHECK(f0 == quad_form(Matrix::identity(n)));
  // W = span{e1} in R^2 -> x2^2
  Polynomial f1 = idempotent_from_subspace({VecR{Rat(1), Rat(0)}}, n);
  CHECK(f1 == Polynomial::monomial(Expo{0, 2}, Rat(1)));
  // W = V -> 0
  CHECK(idempotent_from_subspace({VecR{Rat(1), Rat(0)}, VecR{Rat(0), Rat(1)}}, n)
            .is_zero());

  // reverse direction
  CHECK(subspace_from_idempotent(quad_form(Matrix::identity(2))).empty());
  CHECK(subspace_from_idempotent(Polynomial(2)).size() == 2);
  auto w = subspace_from_idempotent(f1);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == VecR{Rat(1), Rat(0)});

  CHECK_THROWS_AS(subspace_from_idempotent(quad_form(Matrix::identity(2)).scaled(Rat(2))),
                  NotIdempotent);

  // round trips on random subspaces
  Rng rng(13);
  for (int t = 0; t < 25; ++t) {
    std::size_t dim = 5;
    std::size_t k = 1 + rng.next() % 3;
    std::vector<VecR> basis;
    SpanTracker tracker(dim);
    while (basis.size() < k) {
      VecR v = rng.nonzero_int_vector(dim);
      if (tracker.add(v)) basis.push_back(v);
    }
    Polynomial f = idempotent_from_subspace(basis, dim);
    auto back = subspace_from_idempotent(f);
    REQUIRE(back.size() == k);
    for (const auto& v : back) CHECK(tracker.contains(v));
    // and the reverse composition reproduces the idempotent
    CHECK(idempotent_from_subspace(back, dim) == f);
  }
}

TEST_CASE("eigenspace split") {
  auto c = build_clifford(2, 1);
  auto j = JordanAlgebra::close(c.P);

  // f = |x|^2: single eigenvalue 1
  auto parts = eigenspace_split(quad_form(Matrix::identity(4)), j, 1e-9);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].value == 1);
  CHECK(parts[0].subspace.size() == 4);

  // f = <P0 x, x>: eigenvalues -1, +1 with equal halves
  auto ps = eigenspace_split(quad_form(c.P[0]), j, 1e-9);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].value == -1);
  CHECK(ps[1].value == 1);
  CHECK(ps[0].subspace.size() == 2);
  CHECK(ps[1].subspace.size() == 2);

  // f = 2 d(x, W-perp)^2 + 5 d(x, W)^2 over the block algebra
  auto h2 = herm_ambient_basis(Field::R, 1, 2);  // H_1(R) x I_2 on R^2... single block
  std::vector<VecR> w = {VecR{Rat(1), Rat(0)}};
  std::vector<VecR> wp = {VecR{Rat(0), Rat(1)}};
  Polynomial f = idempotent_from_subspace(wp, 2).scaled(Rat(2)) +
                 idempotent_from_subspace(w, 2).scaled(Rat(5));
  auto jfull = JordanAlgebra::close(herm_ambient_basis(Field::R, 2, 1));
  auto sp = eigenspace_split(f, jfull, 1e-9);
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].value == 2);
  CHECK(sp[1].value == 5);
  CHECK(sp[0].subspace[0] == VecR{Rat(1), Rat(0)});
  CHECK(sp[1].subspace[0] == VecR{Rat(0), Rat(1)});
}
