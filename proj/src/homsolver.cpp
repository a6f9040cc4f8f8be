#include "folia/homsolver.hpp"

#include <map>
#include <set>

#include "folia/error.hpp"

namespace folia {

namespace {

// Equations for "phi pulls every target generator back into the source
// basic algebra". Variables: the full phi entry grid of the ORIGINAL map;
// `transpose` reinterprets the same grid as phi^T for the onto system.
void append_equations(const FoliationModel& source, const FoliationModel& target,
                      std::size_t nphi, std::size_t orig_source_dim, bool transpose,
                      const BasicOptions& opt, std::vector<Polynomial>& out) {
  // index of the (i,j) entry of the map in play within the original
  // row-major phi grid; the transposed system reads phi_{j,i}
  auto phi_var = [&](std::size_t i, std::size_t j) {
    return transpose ? j * orig_source_dim + i : i * orig_source_dim + j;
  };

  std::set<int> degrees;
  for (const auto& g : target.generators) degrees.insert(g.degree());

  std::map<int, GradedSubspace> spaces;
  for (int d : degrees) {
    auto b = basic_space(source, d, opt);
    spaces.emplace(d, std::move(b.space));
  }

  // big ring: phi variables first, then the source coordinates
  std::size_t big = nphi + source.dim;
  std::vector<Polynomial> subs;
  for (std::size_t i = 0; i < target.dim; ++i) {
    Polynomial yi(big);
    for (std::size_t j = 0; j < source.dim; ++j) {
      Expo e(big, 0);
      e[phi_var(i, j)] = 1;
      e[nphi + j] = 1;
      yi.add_term(e, Rat(1));
    }
    subs.push_back(std::move(yi));
  }

  for (const auto& rho : target.generators) {
    int d = rho.degree();
    const GradedSubspace& space = spaces.at(d);
    const MonomialBasis& mb = space.monomials();

    Polynomial expanded = rho.substitute(subs);
    // collect the coefficient (a polynomial in phi) of each x-monomial
    std::map<std::size_t, Polynomial> coeff;
    for (const auto& [e, c] : expanded.terms()) {
      Expo xpart(source.dim), fpart(nphi);
      for (std::size_t v = 0; v < nphi; ++v) fpart[v] = e[v];
      for (std::size_t v = 0; v < source.dim; ++v) xpart[v] = e[nphi + v];
      std::size_t idx = mb.index(xpart);
      auto it = coeff.find(idx);
      if (it == coeff.end()) it = coeff.emplace(idx, Polynomial(nphi)).first;
      it->second.add_term(fpart, c);
    }

    for (const auto& eq : space.complement_equations()) {
      Polynomial poly(nphi);
      for (const auto& [idx, lam] : eq) {
        auto it = coeff.find(idx);
        if (it != coeff.end()) poly = poly + it->second.scaled(lam);
      }
      if (!poly.is_zero()) out.push_back(std::move(poly));
    }
  }
}

}  // namespace

HomVariety hom_equations(const FoliationModel& source, const FoliationModel& target,
                         HomMode mode, const BasicOptions& opt) {
  HomVariety hv;
  hv.source_dim = source.dim;
  hv.target_dim = target.dim;
  hv.mode = mode;
  std::size_t nphi = source.dim * target.dim;
  append_equations(source, target, nphi, source.dim, false, opt, hv.equations);
  if (mode == HomMode::Onto)
    append_equations(target, source, nphi, source.dim, true, opt, hv.equations);
  return hv;
}

bool is_foliated(const FoliationModel& source, const FoliationModel& target,
                 const Matrix& phi, HomMode mode, const BasicOptions& opt) {
  if (phi.rows() != target.dim || phi.cols() != source.dim)
    throw DimensionMismatch("is_foliated: phi must map source into target");

  std::map<int, GradedSubspace> spaces;
  for (const auto& g : target.generators) {
    int d = g.degree();
    auto it = spaces.find(d);
    if (it == spaces.end())
      it = spaces.emplace(d, basic_space(source, d, opt).space).first;
    if (!it->second.member(pullback(g, phi))) return false;
  }
  if (mode == HomMode::Onto)
    return is_foliated(target, source, phi.transpose(), HomMode::Into, opt);
  return true;
}

bool check_variety(const HomVariety& hv, const Matrix& phi) {
  if (phi.rows() != hv.target_dim || phi.cols() != hv.source_dim)
    throw DimensionMismatch("check_variety: phi shape");
  VecR vars;
  vars.reserve(hv.source_dim * hv.target_dim);
  for (std::size_t i = 0; i < hv.target_dim; ++i)
    for (std::size_t j = 0; j < hv.source_dim; ++j) vars.push_back(phi.at(i, j));
  for (const auto& eq : hv.equations)
    if (eq.eval(vars) != 0) return false;
  return true;
}

}  // namespace folia
