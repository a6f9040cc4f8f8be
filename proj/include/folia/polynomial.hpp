#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "folia/matrix.hpp"
#include "folia/rational.hpp"

namespace folia {

/// Exponent vector; length = number of variables.
using Expo = std::vector<std::uint16_t>;

int total_degree(const Expo& e);

/// Graded lexicographic order: by total degree, ties broken lexicographically
/// with x_1 largest. Fixed once so subspace bases are canonical across runs.
struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

/// Multivariate polynomial with exact rational coefficients over variables
/// x_1..x_n. Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t vars = 0) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const Rat& c);
  static Polynomial variable(std::size_t vars, std::size_t i);
  static Polynomial monomial(const Expo& e, const Rat& c);

  std::size_t vars() const { return vars_; }
  const std::map<Expo, Rat, GrlexLess>& terms() const { return terms_; }

  void add_term(const Expo& e, const Rat& c);
  Rat coefficient(const Expo& e) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  bool operator==(const Polynomial& o) const;

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  bool is_homogeneous_of(int d) const;

  Polynomial partial(std::size_t i) const;
  Rat eval(const VecR& x) const;
  double eval_double(const std::vector<double>& x) const;

  /// Replace x_i by subs[i] and expand.
  Polynomial substitute(const std::vector<Polynomial>& subs) const;

  std::string to_string() const;

 private:
  std::size_t vars_;
  std::map<Expo, Rat, GrlexLess> terms_;
};

/// Quadratic form x -> <x, Ax> of a symmetric matrix; inverse of
/// hessian_half. Throws NonSymmetric.
Polynomial quad_form(const Matrix& a);

/// Hess(f)/2 of a homogeneous degree-2 polynomial. Throws WrongDegree.
Matrix hessian_half(const Polynomial& f);

/// <grad f, grad g> with the Euclidean inner product. For degree-2 inputs
/// with matrices A, B this equals 4*quad_form((AB+BA)/2); the Jordan engine
/// divides by that factor in exactly one place (see jordan.hpp).
Polynomial transnormal_product(const Polynomial& f, const Polynomial& g);

/// (pullback f)(x) = f(phi x) for a linear map phi : V -> V', where f lives
/// on V'. Throws DimensionMismatch when rows(phi) != vars(f).
Polynomial pullback(const Polynomial& f, const Matrix& phi);

/// Euclidean gradient as a list of partials.
std::vector<Polynomial> gradient(const Polynomial& f);

}  // namespace folia
