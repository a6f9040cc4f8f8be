#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "folia/polynomial.hpp"

namespace folia {

/// Fixed enumeration of the degree-d monomials in n variables, in the
/// graded-lex order of GrlexLess reversed (x_1^d first). All coefficient
/// vectors and subspace bases are indexed against this list.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t vars, int degree);

  std::size_t vars() const { return vars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return list_.size(); }
  const Expo& at(std::size_t i) const { return list_[i]; }
  std::size_t index(const Expo& e) const;

 private:
  std::size_t vars_;
  int degree_;
  std::vector<Expo> list_;
  std::map<Expo, std::size_t, GrlexLess> index_;
};

std::size_t monomial_count(std::size_t vars, int degree);

/// Sparse coefficient row over a MonomialBasis, sorted by column index.
using SparseRow = std::vector<std::pair<std::uint32_t, Rat>>;

SparseRow sparse_row_of(const Polynomial& f, const MonomialBasis& basis);
Polynomial polynomial_of(const SparseRow& row, const MonomialBasis& basis);

/// A linear subspace of R[V]_d kept in reduced echelon form over the
/// monomial basis. Membership is decided exactly; the complement equations
/// (functionals vanishing exactly on the subspace) are materialized on
/// demand for the hom-variety construction.
class GradedSubspace {
 public:
  GradedSubspace(std::size_t vars, int degree);

  std::size_t vars() const { return basis_->vars(); }
  int degree() const { return basis_->degree(); }
  std::size_t ambient_dim() const { return basis_->size(); }
  std::size_t dim() const { return rows_.size(); }
  const MonomialBasis& monomials() const { return *basis_; }

  /// Insert a coefficient row; returns true iff it enlarged the span.
  /// Rows are kept fully reduced (echelon with unit pivots).
  bool insert(SparseRow row);
  bool insert(const Polynomial& f);

  /// Reduce a row against the basis; empty iff the row lies in the span.
  SparseRow reduce(SparseRow row) const;

  /// Exact membership; throws WrongDegree if f is not homogeneous of the
  /// subspace degree (the zero polynomial is a member of everything).
  bool member(const Polynomial& f) const;

  std::vector<Polynomial> basis_polynomials() const;
  const std::vector<SparseRow>& rows() const { return rows_; }

  /// Linear functionals (rows) vanishing exactly on the subspace; count =
  /// ambient_dim - dim. Dense; guarded against huge ambient spaces.
  std::vector<SparseRow> complement_equations() const;

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<SparseRow> rows_;              // unit leading coefficient
  std::map<std::uint32_t, std::size_t> pivot_row_;
};

/// Degree-d component of the subalgebra generated by homogeneous generators
/// (with 1 adjoined): all monomials in the generators of total degree d,
/// Gaussian-eliminated into canonical form.
GradedSubspace graded_span(const std::vector<Polynomial>& generators, int d);

bool member(const Polynomial& f, const GradedSubspace& s);

}  // namespace folia
