#include "folia/graded.hpp"

#include <algorithm>
#include <functional>

#include "folia/error.hpp"

namespace folia {

namespace {

void enumerate_expos(std::size_t vars, int degree, Expo& cur, std::size_t pos,
                     std::vector<Expo>& out) {
  if (pos + 1 == vars) {
    cur[pos] = std::uint16_t(degree);
    out.push_back(cur);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    cur[pos] = std::uint16_t(k);
    enumerate_expos(vars, degree - k, cur, pos + 1, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t vars, int degree)
    : vars_(vars), degree_(degree) {
  if (degree < 0) throw InvalidParams("MonomialBasis: negative degree");
  if (vars == 0) {
    if (degree == 0) list_.push_back(Expo{});
  } else {
    Expo cur(vars, 0);
    enumerate_expos(vars, degree, cur, 0, list_);
  }
  for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
}

std::size_t MonomialBasis::index(const Expo& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InvalidParams("monomial not in basis");
  return it->second;
}

std::size_t monomial_count(std::size_t vars, int degree) {
  // C(vars + degree - 1, degree)
  if (vars == 0) return degree == 0 ? 1 : 0;
  std::size_t num = 1, den = 1;
  for (int i = 0; i < degree; ++i) {
    num *= vars + degree - 1 - i;
    den *= std::size_t(i) + 1;
  }
  return num / den;
}

SparseRow sparse_row_of(const Polynomial& f, const MonomialBasis& basis) {
  SparseRow row;
  row.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) row.emplace_back(std::uint32_t(basis.index(e)), c);
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

Polynomial polynomial_of(const SparseRow& row, const MonomialBasis& basis) {
  Polynomial f(basis.vars());
  for (const auto& [i, c] : row) f.add_term(basis.at(i), c);
  return f;
}

namespace {

// row -= c * other, both sorted sparse
SparseRow axpy(const SparseRow& row, const Rat& c, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, -c * other[j].second);
      ++j;
    } else {
      Rat v = row[i].second - c * other[j].second;
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

GradedSubspace::GradedSubspace(std::size_t vars, int degree)
    : basis_(std::make_shared<MonomialBasis>(vars, degree)) {}

SparseRow GradedSubspace::reduce(SparseRow row) const {
  // Eliminated pivot columns never reappear because stored rows are fully
  // reduced against each other, so this terminates after <= dim() passes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < row.size(); ++k) {
      auto it = pivot_row_.find(row[k].first);
      if (it == pivot_row_.end()) continue;
      row = axpy(row, row[k].second, rows_[it->second]);
      changed = true;
      break;
    }
  }
  return row;
}

bool GradedSubspace::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Rat inv = 1 / row.front().second;
  for (auto& [i, c] : row) c *= inv;
  std::uint32_t piv = row.front().first;
  // back-substitute into existing rows
  for (auto& r : rows_) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].first == piv) {
        r = axpy(r, r[k].second, row);
        break;
      }
      if (r[k].first > piv) break;
    }
  }
  pivot_row_[piv] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

bool GradedSubspace::insert(const Polynomial& f) {
  if (f.is_zero()) return false;
  if (!f.is_homogeneous_of(degree())) throw WrongDegree("insert: wrong degree");
  return insert(sparse_row_of(f, *basis_));
}

bool GradedSubspace::member(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (f.vars() != vars() || !f.is_homogeneous_of(degree()))
    throw WrongDegree("member: polynomial degree mismatch");
  return reduce(sparse_row_of(f, *basis_)).empty();
}

std::vector<Polynomial> GradedSubspace::basis_polynomials() const {
  // pivot order gives a canonical listing
  std::vector<Polynomial> out;
  out.reserve(rows_.size());
  for (const auto& [piv, idx] : pivot_row_) out.push_back(polynomial_of(rows_[idx], *basis_));
  return out;
}

std::vector<SparseRow> GradedSubspace::complement_equations() const {
  std::size_t m = ambient_dim();
  if (m > 20000) throw Error("complement_equations: ambient too large");
  // Kernel of the basis matrix: functionals L with L(b) = 0 for all rows b.
  // Since rows are in rref with pivot set P, a kernel basis is indexed by
  // free columns: L_f = e_f - sum_{p in P} B[p][f] e_p.
  std::vector<bool> is_pivot(m, false);
  std::vector<std::pair<std::uint32_t, const SparseRow*>> prows;
  for (const auto& [piv, idx] : pivot_row_) {
    is_pivot[piv] = true;
    prows.emplace_back(piv, &rows_[idx]);
  }
  std::vector<SparseRow> eqs;
  for (std::uint32_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    SparseRow eq;
    eq.emplace_back(f, Rat(1));
    for (const auto& [piv, rp] : prows) {
      for (const auto& [col, c] : *rp) {
        if (col == f && c != 0) {
          eq.emplace_back(piv, -c);
          break;
        }
        if (col > f) break;
      }
    }
    std::sort(eq.begin(), eq.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    eqs.push_back(std::move(eq));
  }
  return eqs;
}

GradedSubspace graded_span(const std::vector<Polynomial>& generators, int d) {
  if (generators.empty()) throw InvalidParams("graded_span: no generators");
  std::size_t vars = generators[0].vars();
  for (const auto& g : generators) {
    if (g.vars() != vars) throw DimensionMismatch("graded_span: mixed rings");
    if (!g.is_homogeneous()) throw InvalidParams("graded_span: inhomogeneous generator");
  }
  GradedSubspace space(vars, d);
  if (d == 0) {
    space.insert(Polynomial::constant(vars, Rat(1)));
    return space;
  }

  // Enumerate monomials in the generators of total degree d. Duplicate
  // products are absorbed by the elimination, not pre-filtered.
  std::function<void(std::size_t, int, const Polynomial&)> rec =
      [&](std::size_t gi, int remaining, const Polynomial& acc) {
        if (remaining == 0) {
          space.insert(acc);
          return;
        }
        if (gi == generators.size()) return;
        int dg = generators[gi].degree();
        if (dg <= 0) {
          rec(gi + 1, remaining, acc);
          return;
        }
        Polynomial cur = acc;
        for (int used = 0; used * dg <= remaining; ++used) {
          if (used > 0) cur = cur * generators[gi];
          rec(gi + 1, remaining - used * dg, cur);
        }
      };
  rec(0, d, Polynomial::constant(vars, Rat(1)));
  return space;
}

bool member(const Polynomial& f, const GradedSubspace& s) { return s.member(f); }

}  // namespace folia
