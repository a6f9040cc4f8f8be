#include <doctest.h>

#include <set>

#include "folia/error.hpp"
#include "folia/linalg.hpp"
#include "folia/symmetry.hpp"

using namespace folia;

namespace {

// ambient basis of an eta(v) eigenspace for a unit v in frame coordinates
std::vector<VecR> eigenspace_of(const SpinFrame& frame, Rng& rng) {
  VecR v = rational_sphere_point(rng, frame.p.size());
  return spin_eigenspace(frame, v);
}

}  // namespace

TEST_CASE("spin frame harvest recovers the clifford system") {
  for (std::size_t mm : {2, 4}) {
    auto model = clifford_model(build_clifford(mm, 1));
    auto r = f2(model);
    REQUIRE(r.factors.size() == 1);
    auto frame = harvest_spin_frame(spin_frame_candidates(model, r, r.factors[0]),
                                    r.factors[0]);
    REQUIRE(frame.p.size() == mm + 1);
    auto c = build_clifford(mm, 1);
    for (std::size_t i = 0; i <= mm; ++i) CHECK(frame.p[i] == c.P[i]);
  }

  // the spin factor of H_2(H) also carries an exact rational frame
  auto mh = diagonal_model(Field::H, 1, 2);
  auto rh = f2(mh);
  auto fr = harvest_spin_frame(spin_frame_candidates(mh, rh, rh.factors[0]),
                               rh.factors[0]);
  CHECK(fr.p.size() == 5);
}

TEST_CASE("orthogonal hessians pass the onto test") {
  auto model = clifford_model(build_clifford(2, 1));
  auto r = f2(model);
  auto gens = orthogonal_hessians(r, model);
  CHECK(gens.size() == 3);  // the P_i themselves
  CHECK(verify_foliated_symmetries(model, gens, 25, 7));

  // H_2(R) goes through its spin presentation: a 2-element frame
  auto md = diagonal_model(Field::R, 2, 2);
  auto rd = f2(md);
  auto gd = orthogonal_hessians(rd, md);
  CHECK(gd.size() == 2);
  CHECK(verify_foliated_symmetries(md, gd, 25, 9));

  // rank 3 uses the reflection generators
  auto m3 = diagonal_model(Field::R, 2, 3);
  auto r3 = f2(m3);
  auto g3 = orthogonal_hessians(r3, m3);
  CHECK(g3.size() == 3 + 6);  // 3 sign flips + 6 pair reflections
  CHECK(verify_foliated_symmetries(m3, g3, 10, 13));

  // a generic rotation mixing the copies is rejected
  Matrix s(4, 4);
  s.set(0, 2, Rat(1, 2));
  s.set(2, 0, Rat(-1, 2));
  s.set(1, 3, Rat(1, 3));
  s.set(3, 1, Rat(-1, 3));
  Matrix bad = cayley_orthogonal(s);
  CHECK_FALSE(verify_foliated_symmetries(md, {bad}, 5, 11));
}

TEST_CASE("reflection generators act transitively on coordinate lines") {
  // RealHermitian(3): sign changes and transpositions reach every signed line
  auto md = diagonal_model(Field::R, 1, 3);
  auto rd = f2(md);
  auto gens = orthogonal_hessians(rd, md);
  std::set<VecR> orbit;
  std::vector<VecR> queue = {VecR{Rat(1), Rat(0), Rat(0)}};
  orbit.insert(queue[0]);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : gens) {
      VecR nxt = g.apply(queue[h]);
      if (orbit.insert(nxt).second) queue.push_back(nxt);
    }
  CHECK(orbit.size() == 6);  // +-e1, +-e2, +-e3
}

TEST_CASE("moduli report") {
  auto rc = f2(clifford_model(build_clifford(4, 1)));
  auto mc = moduli_report(rc.factors);
  REQUIRE(mc.size() == 1);
  CHECK(mc[0].dims == std::vector<std::size_t>{0, 4, 8});  // l = delta(4) = 4
  CHECK(mc[0].components[1] == "S^4");

  // H_2(R) is reported through its spin presentation: middle component S^1
  auto rd = f2(diagonal_model(Field::R, 2, 2));
  auto md = moduli_report(rd.factors);
  REQUIRE(md.size() == 1);
  CHECK(md[0].dims == std::vector<std::size_t>{0, 2, 4});
  CHECK(md[0].components[1] == "S^1");

  // rank 3: honest Grassmannian labels, dims jk for j = 0..3
  auto r3 = f2(diagonal_model(Field::R, 2, 3));
  auto m3 = moduli_report(r3.factors);
  REQUIRE(m3.size() == 1);
  CHECK(m3[0].dims == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(m3[0].components[2] == "Gr_2(R^3)");

  // product: one report entry per factor
  auto a = diagonal_model(Field::R, 2, 1);
  auto rp = f2(product_model(a, a));
  CHECK(moduli_report(rp.factors).size() == 2);
}

TEST_CASE("moduli dimensions match an idempotent search in the spin factor") {
  for (std::size_t mm : {2, 3}) {
    auto model = clifford_model(build_clifford(mm, 1));
    auto r = f2(model);
    auto frame = harvest_spin_frame(spin_frame_candidates(model, r, r.factors[0]),
                                    r.factors[0]);
    std::size_t n = model.dim;
    auto report = moduli_report(r.factors);
    std::set<std::size_t> allowed(report[0].dims.begin(), report[0].dims.end());

    Rng rng(41);
    std::set<std::size_t> observed = {0, n};
    for (int t = 0; t < 40; ++t) {
      VecR v = rational_sphere_point(rng, frame.p.size());
      // idempotent (e + eta(v))/2, exactly
      Matrix a(n, n);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) a = a + frame.p[i].scaled(v[i]);
      Matrix f = (frame.unit + a).scaled(Rat(1, 2));
      REQUIRE(jordan_product(f, f) == f);
      auto sub = subspace_from_idempotent(quad_form(f));
      observed.insert(sub.size());
      CHECK(allowed.count(sub.size()) == 1);
    }
    CHECK(observed == allowed);
  }
}

TEST_CASE("spin transitivity witness") {
  auto model = clifford_model(build_clifford(2, 1));
  auto r = f2(model);
  auto frame = harvest_spin_frame(spin_frame_candidates(model, r, r.factors[0]),
                                  r.factors[0]);
  Rng rng(55);

  // U = W: identity
  auto u0 = eigenspace_of(frame, rng);
  CHECK(transitivity_witness(model, r, u0, u0) == Matrix::identity(4));

  // pairs linked by a frame generator: one-generator witnesses, exact
  for (int t = 0; t < 15; ++t) {
    VecR v = rational_sphere_point(rng, 3);
    VecR wdir = rational_sphere_point(rng, 3);
    // v' = N_w(v) = 2<w,v>w - v
    Rat c = 2 * dot(wdir, v);
    VecR v2(3);
    for (std::size_t i = 0; i < 3; ++i) v2[i] = c * wdir[i] - v[i];
    auto u = spin_eigenspace(frame, v);
    auto w = spin_eigenspace(frame, v2);
    REQUIRE(u.size() == 2);
    Matrix g = transitivity_witness(model, r, u, w);
    // transitivity_witness verified g(U) = W and the onto property already;
    // check orthogonality once more
    CHECK(g.transpose() * g == Matrix::identity(4));
  }

  // eigenspaces of eta(e_1), eta(e_2): a two-generator word
  auto u1 = spin_eigenspace(frame, VecR{Rat(1), Rat(0), Rat(0)});
  auto u2 = spin_eigenspace(frame, VecR{Rat(0), Rat(1), Rat(0)});
  Matrix g12 = transitivity_witness(model, r, u1, u2);
  CHECK(g12.transpose() * g12 == Matrix::identity(4));

  CHECK_THROWS_AS(transitivity_witness(model, r, u1, {u2[0]}), NotSameDimension);
}

TEST_CASE("real hermitian transitivity witness") {
  auto model = diagonal_model(Field::R, 2, 2);
  auto r = f2(model);

  // U = first copy, W = second copy: the swap
  std::vector<VecR> first = {VecR{Rat(1), Rat(0), Rat(0), Rat(0)},
                             VecR{Rat(0), Rat(1), Rat(0), Rat(0)}};
  std::vector<VecR> second = {VecR{Rat(0), Rat(0), Rat(1), Rat(0)},
                              VecR{Rat(0), Rat(0), Rat(0), Rat(1)}};
  Matrix g = transitivity_witness(model, r, first, second);
  // g swaps the copies up to sign; membership is the contract
  SpanTracker second_span(4);
  for (const auto& x : second) second_span.add(x);
  CHECK(second_span.contains(g.apply(first[0])));
  CHECK(second_span.contains(g.apply(first[1])));

  // copies mixed by reflections with small integer axes
  auto md3 = diagonal_model(Field::R, 1, 3);
  auto rd3 = f2(md3);
  Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    // S = a random coordinate line, S' = image under a random reflection
    std::size_t a = rng.next() % 3;
    VecR s(3, Rat(0));
    s[a] = 1;
    VecR ax = rng.nonzero_int_vector(3);
    Rat nrm = dot(ax, ax);
    VecR s2 = s;
    Rat pr = 2 * dot(s, ax) / nrm;
    for (std::size_t i = 0; i < 3; ++i) s2[i] -= pr * ax[i];
    Matrix gw = transitivity_witness(md3, rd3, {s}, {s2});
    CHECK(gw.transpose() * gw == Matrix::identity(3));
    // image check: g(s) spans s2
    VecR img = gw.apply(s);
    CHECK((img == s2 || img == VecR{-s2[0], -s2[1], -s2[2]} ||
           dot(img, img) * dot(s2, s2) == dot(img, s2) * dot(img, s2)));
  }
}
