#include <doctest.h>

#include "folia/error.hpp"
#include "folia/homsolver.hpp"
#include "folia/linalg.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {

FoliationModel onxon(std::size_t n) {
  auto a = diagonal_model(Field::R, n, 1);
  return product_model(a, a);
}

Matrix blocks2(std::size_t n, const Matrix* a, const Matrix* b, const Matrix* c,
               const Matrix* d) {
  Matrix m(2 * n, 2 * n);
  auto put = [&](const Matrix* x, std::size_t ro, std::size_t co) {
    if (!x) return;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(ro + i, co + j, x->at(i, j));
  };
  put(a, 0, 0);
  put(b, 0, n);
  put(c, n, 0);
  put(d, n, n);
  return m;
}

Matrix random_scaled_orthogonal(Rng& rng, std::size_t n) {
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = rng.small_rat();
      s.set(i, j, v);
      s.set(j, i, -v);
    }
  return cayley_orthogonal(s).scaled(rng.small_nonzero());
}

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng.uniform(-3, 3));
  return m;
}

}  // namespace

TEST_CASE("scalar model: every map is foliated, no equations") {
  auto m = diagonal_model(Field::R, 1, 1);
  auto hv = hom_equations(m, m, HomMode::Into);
  CHECK(hv.equations.empty());
  Matrix phi(1, 1);
  phi.set(0, 0, Rat(7, 3));
  CHECK(is_foliated(m, m, phi, HomMode::Into));
  CHECK(check_variety(hv, phi));
}

TEST_CASE("O(2)xO(2) worked example") {
  auto m = onxon(2);
  auto into = hom_equations(m, m, HomMode::Into);
  auto onto = hom_equations(m, m, HomMode::Onto);
  // per generator: 10-dim quadratics, 2-dim basic -> 8 complement equations
  CHECK(into.equations.size() == 16);
  CHECK(onto.equations.size() == 32);

  CHECK(is_foliated(m, m, Matrix::identity(4), HomMode::Onto));
  CHECK(check_variety(onto, Matrix::identity(4)));

  // zero map: sends every leaf onto the origin leaf
  CHECK(is_foliated(m, m, Matrix::zero(4, 4), HomMode::Into));
  CHECK(is_foliated(m, m, Matrix::zero(4, 4), HomMode::Onto));
  CHECK(check_variety(onto, Matrix::zero(4, 4)));

  Rng rng(19);
  for (int t = 0; t < 12; ++t) {
    Matrix a = random_scaled_orthogonal(rng, 2), b = random_scaled_orthogonal(rng, 2);
    Matrix c = random_scaled_orthogonal(rng, 2), d = random_scaled_orthogonal(rng, 2);
    // the four into-forms of the appendix example
    Matrix f1 = blocks2(2, nullptr, &b, nullptr, &d);  // [0 B; 0 D]
    Matrix f2 = blocks2(2, nullptr, &b, &c, nullptr);  // [0 B; C 0]
    Matrix f3 = blocks2(2, &a, nullptr, nullptr, &d);  // [A 0; 0 D]
    Matrix f4 = blocks2(2, &a, nullptr, &c, nullptr);  // [A 0; C 0]
    for (const auto& f : {f1, f2, f3, f4}) {
      CHECK(is_foliated(m, m, f, HomMode::Into));
      CHECK(check_variety(into, f));
    }
    // only the block-bijective two survive onto mode
    CHECK(is_foliated(m, m, f2, HomMode::Onto));
    CHECK(is_foliated(m, m, f3, HomMode::Onto));
    CHECK_FALSE(is_foliated(m, m, f1, HomMode::Onto));
    CHECK_FALSE(is_foliated(m, m, f4, HomMode::Onto));
    CHECK(check_variety(onto, f2));
    CHECK(check_variety(onto, f3));
    CHECK_FALSE(check_variety(onto, f1));
    CHECK_FALSE(check_variety(onto, f4));

    // a generic violation of A^T B = 0
    Matrix g = blocks2(2, &a, &b, nullptr, &d);
    CHECK_FALSE(is_foliated(m, m, g, HomMode::Into));
    CHECK_FALSE(check_variety(into, g));
  }
}

TEST_CASE("check_variety cross-validates is_foliated on random maps") {
  auto m = onxon(2);
  auto into = hom_equations(m, m, HomMode::Into);
  auto onto = hom_equations(m, m, HomMode::Onto);
  Rng rng(23);
  int agree_into = 0;
  for (int t = 0; t < 50; ++t) {
    Matrix phi = random_matrix(rng, 4, 4);
    bool a = is_foliated(m, m, phi, HomMode::Into);
    bool via_eq = check_variety(into, phi);
    CHECK(a == via_eq);
    CHECK(is_foliated(m, m, phi, HomMode::Onto) == check_variety(onto, phi));
    agree_into += a ? 1 : 0;
  }
  // onto-variety sits inside the into-variety
  for (int t = 0; t < 20; ++t) {
    Matrix phi = random_matrix(rng, 4, 4);
    if (check_variety(onto, phi)) CHECK(check_variety(into, phi));
  }
}

TEST_CASE("foliated maps compose") {
  auto m = onxon(2);
  Rng rng(29);
  for (int t = 0; t < 10; ++t) {
    Matrix b = random_scaled_orthogonal(rng, 2), c = random_scaled_orthogonal(rng, 2);
    Matrix a = random_scaled_orthogonal(rng, 2), d = random_scaled_orthogonal(rng, 2);
    Matrix f = blocks2(2, nullptr, &b, &c, nullptr);
    Matrix g = blocks2(2, &a, nullptr, nullptr, &d);
    CHECK(is_foliated(m, m, f * g, HomMode::Into));
    CHECK(is_foliated(m, m, g * f, HomMode::Onto));
  }
}

TEST_CASE("cross-model hom: source and target of different shapes") {
  auto src = onxon(2);                             // R^4
  auto tgt = diagonal_model(Field::R, 2, 1);       // R^2
  // projection onto the first factor takes leaves to leaves
  Matrix proj(2, 4);
  proj.set(0, 0, Rat(1));
  proj.set(1, 1, Rat(1));
  CHECK(is_foliated(src, tgt, proj, HomMode::Into));
  auto hv = hom_equations(src, tgt, HomMode::Into);
  CHECK(check_variety(hv, proj));
  // mixing the factors is not foliated
  Matrix mix(2, 4);
  mix.set(0, 0, Rat(1));
  mix.set(1, 2, Rat(1));
  mix.set(0, 3, Rat(1));
  CHECK(is_foliated(src, tgt, mix, HomMode::Into) == check_variety(hv, mix));
  CHECK_THROWS_AS(is_foliated(src, tgt, Matrix::identity(4), HomMode::Into),
                  DimensionMismatch);
}
