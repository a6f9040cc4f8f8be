#include <doctest.h>

#include "folia/eigensplit.hpp"
#include "folia/error.hpp"
#include "folia/linalg.hpp"
#include "folia/matrix.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::initializer_list<int> vals) {
  Matrix m(r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rat(*it++));
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

TEST_CASE("rational parsing and exact sqrt") {
  CHECK(rat_from_string("3/6") == Rat(1, 2));
  CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
  CHECK_THROWS_AS(rat_from_string("x"), InputError);
  Rat root;
  CHECK(rat_sqrt_exact(Rat(9, 4), root));
  CHECK(root == Rat(3, 2));
  CHECK_FALSE(rat_sqrt_exact(Rat(2), root));
  CHECK(rationalize(0.5, 1000000) == Rat(1, 2));
  CHECK(rationalize(1.0 / 3.0, 1000000) == Rat(1, 3));
}

TEST_CASE("rref identity and zero") {
  auto rr = rref(Matrix::identity(3));
  CHECK(rr.rank == 3);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(rr.rref == Matrix::identity(3));

  auto rz = rref(Matrix::zero(2, 2));
  CHECK(rz.rank == 0);
  CHECK(rz.pivots.empty());
}

TEST_CASE("rref rank-1 hand elimination") {
  // [[1,2],[2,4]] -> [[1,2],[0,0]]
  auto rr = rref(mat(2, 2, {1, 2, 2, 4}));
  CHECK(rr.rank == 1);
  CHECK(rr.rref == mat(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref is idempotent") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.set(i, j, rng.small_rat());
    auto once = rref(m);
    auto twice = rref(once.rref);
    CHECK(once.rref == twice.rref);
    CHECK(once.rank == twice.rank);
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::identity(2)).empty());
  CHECK(kernel_basis(Matrix::zero(2, 2)).size() == 2);

  Matrix proj = Matrix::diag({Rat(1), Rat(1), Rat(0)});
  auto k = kernel_basis(proj);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == VecR{Rat(0), Rat(0), Rat(1)});

  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    Matrix m(3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 6; ++j) m.set(i, j, rng.small_int());
    for (const auto& v : kernel_basis(m)) {
      VecR mv = m.apply(v);
      for (const auto& x : mv) CHECK(x == 0);
    }
    CHECK(kernel_basis(m).size() == 6 - rank(m));
  }
}

TEST_CASE("kron layout") {
  Matrix a = mat(2, 2, {0, 1, 1, 0});
  Matrix k = kron(a, Matrix::identity(2));
  CHECK(k.rows() == 4);
  CHECK(k.at(0, 2) == 1);
  CHECK(k.at(1, 3) == 1);
  CHECK(k.at(2, 0) == 1);
  CHECK(k.at(0, 0) == 0);

  CHECK(kron(a, Matrix::identity(1)) == a);
  Matrix d = Matrix::diag({Rat(2), Rat(3)});
  CHECK(kron(d, Matrix::identity(2)) ==
        Matrix::diag({Rat(2), Rat(2), Rat(3), Rat(3)}));
  CHECK(kron(a, Matrix::identity(2)).is_symmetric());
}

TEST_CASE("cayley orthogonal is exactly orthogonal") {
  CHECK(cayley_orthogonal(Matrix::zero(3, 3)) == Matrix::identity(3));

  Matrix s = mat(2, 2, {0, 1, -1, 0});
  Matrix q = cayley_orthogonal(s);
  CHECK(q.transpose() * q == Matrix::identity(2));

  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix sk = random_skew(rng, 4);
    Matrix qq = cayley_orthogonal(sk);
    CHECK(qq.transpose() * qq == Matrix::identity(4));
  }
}

TEST_CASE("projector onto span") {
  Matrix p = projector_onto_span({VecR{Rat(1), Rat(0), Rat(0)}});
  CHECK(p == Matrix::diag({Rat(1), Rat(0), Rat(0)}));
  Matrix q = projector_onto_span({VecR{Rat(1), Rat(1)}});
  CHECK(q * q == q);
  CHECK(q.is_symmetric());
}

TEST_CASE("eigensplit clusters") {
  auto clusters = symmetric_eigensplit(Matrix::diag({Rat(1), Rat(1), Rat(0)}), 1e-9);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].basis.size() == 1);  // eigenvalue 0
  CHECK(clusters[1].basis.size() == 2);  // eigenvalue 1
  CHECK(clusters[0].value == doctest::Approx(0.0));
  CHECK(clusters[1].value == doctest::Approx(1.0));

  auto single = symmetric_eigensplit(Matrix::identity(4), 1e-9);
  REQUIRE(single.size() == 1);
  CHECK(single[0].basis.size() == 4);
}

TEST_CASE("eigensplit ambiguity window") {
  // gap of 5*tol: more than tol, less than 10*tol
  Matrix m = Matrix::diag({Rat(0), rat_from_double(5e-6)});
  CHECK_THROWS_AS(symmetric_eigensplit(m, 1e-6), ClusterAmbiguity);
  // comfortably separated
  CHECK(symmetric_eigensplit(m, 1e-8).size() == 2);
  // merged into one cluster
  CHECK(symmetric_eigensplit(m, 1e-4).size() == 1);
}

TEST_CASE("span tracker") {
  SpanTracker t(3);
  CHECK(t.add(VecR{Rat(1), Rat(2), Rat(3)}));
  CHECK_FALSE(t.add(VecR{Rat(2), Rat(4), Rat(6)}));
  CHECK(t.add(VecR{Rat(0), Rat(1), Rat(0)}));
  CHECK(t.rank() == 2);
  CHECK(t.contains(VecR{Rat(1), Rat(3), Rat(3)}));
  CHECK_FALSE(t.contains(VecR{Rat(0), Rat(0), Rat(1)}));
}
