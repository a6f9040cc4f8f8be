#include <doctest.h>

#include "folia/basic_space.hpp"
#include "folia/error.hpp"
#include "folia/linalg.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {

Polynomial det3_copy_major() {
  // det of [v1 v2 v3], copies of R^3 in copy-major coordinates x[3i + j]
  Polynomial det(9);
  int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
  for (int s = 0; s < 6; ++s) {
    Expo e(9, 0);
    for (int i = 0; i < 3; ++i) e[3 * i + perm[s][i]] += 1;
    det.add_term(e, Rat(s < 3 ? 1 : -1));
  }
  return det;
}

Polynomial det2_copy_major() {
  Polynomial det(4);
  det.add_term(Expo{1, 0, 0, 1}, Rat(1));
  det.add_term(Expo{0, 1, 1, 0}, Rat(-1));
  return det;
}

}  // namespace

TEST_CASE("basic space of diagonal models at degree 2") {
  auto m = diagonal_model(Field::R, 2, 2);
  auto b = basic_space(m, 2);
  CHECK(b.space.dim() == 3);
  CHECK(b.samples_used == 0);  // symbolic path
  for (const auto& g : m.generators) CHECK(b.space.member(g));

  // determinant x1 x4 - x2 x3 is SO(2)- but not O(2)-basic
  CHECK_FALSE(b.space.member(det2_copy_major()));
  auto bso = basic_space(so_model(2, 2), 2);
  CHECK(bso.space.dim() == 4);
  CHECK(bso.space.member(det2_copy_major()));

  CHECK(basic_space(m, 0).space.dim() == 1);
  CHECK(basic_space(diagonal_model(Field::H, 1, 2), 2).space.dim() == 6);
}

TEST_CASE("basic space of clifford models") {
  auto m = clifford_model(build_clifford(2, 1));
  auto b = basic_space(m, 2);
  CHECK(b.space.dim() == 4);  // m+2
  CHECK(b.samples_used > 0);
  for (const auto& g : m.generators) CHECK(b.space.member(g));
  // odd degrees carry nothing basic
  CHECK(basic_space(m, 1).space.dim() == 0);
  CHECK(basic_space(m, 3).space.dim() == 0);
}

TEST_CASE("so(3,3) has the determinant at degree 3") {
  auto m = so_model(3, 3);
  auto b = basic_space(m, 3);
  CHECK(b.space.dim() >= 1);
  CHECK(b.space.member(det3_copy_major()));
  // and the O(3) model kills it
  auto bo = basic_space(diagonal_model(Field::R, 3, 3), 3);
  CHECK(bo.space.dim() == 0);
}

TEST_CASE("basic space contains the generated span") {
  for (const auto& m : {diagonal_model(Field::C, 1, 2), so_model(2, 2),
                        clifford_model(build_clifford(3, 1))}) {
    for (int d = 2; d <= 4; d += 2) {
      auto gen = graded_span(m.generators, d);
      auto b = basic_space(m, d);
      for (const auto& p : gen.basis_polynomials()) CHECK(b.space.member(p));
    }
  }
}

TEST_CASE("certified path agrees with the exact path") {
  auto m = clifford_model(build_clifford(2, 1));
  BasicOptions exact_opt;
  BasicOptions certified_opt;
  certified_opt.modp_threshold = 2;  // force the certificate on tiny blocks
  for (int d = 2; d <= 4; ++d) {
    auto be = basic_space(m, d, exact_opt);
    auto bc = basic_space(m, d, certified_opt);
    CHECK(be.space.dim() == bc.space.dim());
    CHECK_FALSE(be.certified);
    CHECK(bc.certified);
    for (const auto& p : be.space.basis_polynomials()) CHECK(bc.space.member(p));
  }
}

TEST_CASE("f2 classification reports") {
  // Schur: O(2) on 3 copies of R^2 -> one real factor of rank 3, multiplicity 2
  auto r = f2(diagonal_model(Field::R, 2, 3));
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].type == FactorType::RealHermitian);
  CHECK(r.factors[0].param == 3);
  CHECK(r.factors[0].multiplicity == 2);

  // clifford models close to spin factors
  for (std::size_t m : {2, 4}) {
    auto rc = f2(clifford_model(build_clifford(m, 1)));
    REQUIRE(rc.factors.size() == 1);
    CHECK(rc.factors[0].type == FactorType::SpinFactor);
    CHECK(rc.factors[0].param == int(m) + 1);
  }

  // C_{3,1} has disconnected leaves; the oracle sees the connected
  // refinement C_{4,1}, whose quadratics close to SpinFactor(5)
  auto r31 = f2(clifford_model(build_clifford(3, 1)));
  REQUIRE(r31.factors.size() == 1);
  CHECK(r31.factors[0].type == FactorType::SpinFactor);
  CHECK(r31.factors[0].param == 5);

  // H_2(H) coincidence
  auto rh = f2(diagonal_model(Field::H, 1, 2));
  REQUIRE(rh.factors.size() == 1);
  CHECK(rh.factors[0].type == FactorType::SpinFactor);
  CHECK(rh.factors[0].param == 5);

  // product: two real rank-1 factors with projectors summing to I
  auto a = diagonal_model(Field::R, 2, 1);
  auto rp = f2(product_model(a, a));
  REQUIRE(rp.factors.size() == 2);
  Matrix sum(4, 4);
  for (const auto& f : rp.factors) {
    CHECK(f.type == FactorType::RealHermitian);
    CHECK(f.param == 1);
    CHECK(f.multiplicity == 2);
    sum = sum + f.projector;
  }
  CHECK(sum == Matrix::identity(4));
}

TEST_CASE("fft_check") {
  // Theorem D at desk scale: equality for clifford and diagonal models
  for (const auto& row : fft_check(clifford_model(build_clifford(2, 1)), 4)) CHECK(row.equal);
  for (const auto& row : fft_check(diagonal_model(Field::R, 2, 2), 4)) CHECK(row.equal);

  // negative control: so(2,2) has the determinant at degree 2, gap exactly 1
  auto rows = fft_check(so_model(2, 2), 3);
  CHECK(rows[0].degree == 1);
  CHECK(rows[0].equal);
  CHECK(rows[1].degree == 2);
  CHECK_FALSE(rows[1].equal);
  CHECK(rows[1].basic - rows[1].generated == 1);

  // so(3,3): gap of at least 1 at degree 3
  auto r33 = fft_check(so_model(3, 3), 3);
  CHECK(r33[1].equal);  // degree 2 agrees
  CHECK_FALSE(r33[2].equal);
  CHECK(r33[2].basic >= r33[2].generated + 1);

  CHECK_THROWS_AS(fft_check(so_model(2, 2), 9), InvalidParams);
}

TEST_CASE("reynolds averaging") {
  // G = {+-1} on R: odd functions average to zero
  Polynomial x = Polynomial::variable(1, 0);
  CHECK(reynolds({Matrix::diag({Rat(-1)})}, x).is_zero());

  // signed permutations of R^2 (order 8): x1^2 -> (x1^2+x2^2)/2
  Matrix swap(2, 2);
  swap.set(0, 1, Rat(1));
  swap.set(1, 0, Rat(1));
  Matrix flip = Matrix::diag({Rat(-1), Rat(1)});
  Polynomial x1sq = Polynomial::monomial(Expo{2, 0}, Rat(1));
  Polynomial avg = reynolds({swap, flip}, x1sq);
  CHECK(avg == quad_form(Matrix::identity(2)).scaled(Rat(1, 2)));

  // invariant polynomials are fixed, and reynolds is idempotent
  CHECK(reynolds({swap, flip}, avg) == avg);
  Rng rng(3);
  MonomialBasis mb(2, 3);
  Polynomial g(2);
  for (std::size_t i = 0; i < mb.size(); ++i) g.add_term(mb.at(i), rng.small_int());
  Polynomial once = reynolds({swap, flip}, g);
  CHECK(reynolds({swap, flip}, once) == once);

  CHECK_THROWS_AS(reynolds({Matrix::diag({Rat(2)})}, x), InvalidParams);
}

TEST_CASE("trivial factors") {
  CHECK(trivial_factors(diagonal_model(Field::R, 2, 2)).empty());
  CHECK(trivial_factors(clifford_model(build_clifford(2, 1))).empty());

  auto with_trivial = product_model(diagonal_model(Field::R, 2, 2), trivial_model(1));
  auto tf = trivial_factors(with_trivial);
  REQUIRE(tf.size() == 1);
  CHECK(tf[0] == Polynomial::variable(5, 4));
}

TEST_CASE("invariant span") {
  auto m = diagonal_model(Field::R, 2, 2);
  // two points of the leaf through e1 span the first copy
  InvariantSpanResult r =
      invariant_span(m, {VecR{Rat(1), Rat(0), Rat(0), Rat(0)},
                         VecR{Rat(0), Rat(1), Rat(0), Rat(0)}});
  CHECK(r.basis.size() == 2);
  CHECK(r.verified);

  // a single point does not span an invariant subspace here
  auto bad = invariant_span(m, {VecR{Rat(1), Rat(0), Rat(0), Rat(0)}});
  CHECK(bad.basis.size() == 1);
  CHECK_FALSE(bad.verified);

  // the whole space is trivially invariant
  std::vector<VecR> all;
  for (std::size_t i = 0; i < 4; ++i) {
    VecR e(4, Rat(0));
    e[i] = 1;
    all.push_back(e);
  }
  CHECK(invariant_span(m, all).verified);
}

TEST_CASE("scale map") {
  auto m = diagonal_model(Field::R, 2, 2);
  auto b2 = basic_space(m, 2).space;
  std::vector<VecR> first_copy = {VecR{Rat(1), Rat(0), Rat(0), Rat(0)},
                                  VecR{Rat(0), Rat(1), Rat(0), Rat(0)}};
  CHECK(scale_map(m, first_copy, Rat(1), b2) == Matrix::identity(4));
  Matrix r0 = scale_map(m, first_copy, Rat(0), b2);
  CHECK(r0 == Matrix::diag({Rat(1), Rat(1), Rat(0), Rat(0)}));

  // pullbacks of the generators under r_lambda stay basic
  for (const Rat& lam : {Rat(0), Rat(1, 2), Rat(2)}) {
    Matrix rl = scale_map(m, first_copy, lam, b2);
    for (const auto& g : m.generators) CHECK(b2.member(pullback(g, rl)));
  }

  // a non-invariant subspace is rejected
  CHECK_THROWS_AS(scale_map(m, {VecR{Rat(1), Rat(0), Rat(1), Rat(0)}}, Rat(2), b2),
                  NotInvariant);
}
