#include "folia/polynomial.hpp"

#include <sstream>

#include "folia/error.hpp"

namespace folia {

int total_degree(const Expo& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const Expo& a, const Expo& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // lex with x_1 largest: (2,0) > (1,1) > (0,2)
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Polynomial Polynomial::constant(std::size_t vars, const Rat& c) {
  Polynomial p(vars);
  p.add_term(Expo(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t i) {
  if (i >= vars) throw InvalidParams("variable index out of range");
  Expo e(vars, 0);
  e[i] = 1;
  return monomial(e, Rat(1));
}

Polynomial Polynomial::monomial(const Expo& e, const Rat& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Expo& e, const Rat& c) {
  if (e.size() != vars_) throw DimensionMismatch("add_term: exponent length");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Polynomial::coefficient(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (vars_ != o.vars_) throw DimensionMismatch("poly +");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (vars_ != o.vars_) throw DimensionMismatch("poly -");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (vars_ != o.vars_) throw DimensionMismatch("poly *");
  Polynomial r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Expo e(vars_);
      for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -2;
  for (const auto& [e, c] : terms_) {
    int t = total_degree(e);
    if (d == -2) d = t;
    else if (t != d) return false;
  }
  return true;
}

bool Polynomial::is_homogeneous_of(int d) const {
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Polynomial Polynomial::partial(std::size_t i) const {
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Expo d = e;
    d[i] -= 1;
    r.add_term(d, c * Rat(e[i]));
  }
  return r;
}

Rat Polynomial::eval(const VecR& x) const {
  if (x.size() != vars_) throw DimensionMismatch("poly eval");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < vars_; ++i)
      for (std::uint16_t k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

double Polynomial::eval_double(const std::vector<double>& x) const {
  double s = 0;
  for (const auto& [e, c] : terms_) {
    double t = rat_to_double(c);
    for (std::size_t i = 0; i < vars_; ++i)
      for (std::uint16_t k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
  if (subs.size() != vars_) throw DimensionMismatch("substitute: wrong count");
  std::size_t out_vars = subs.empty() ? 0 : subs[0].vars();
  for (const auto& s : subs)
    if (s.vars() != out_vars) throw DimensionMismatch("substitute: mixed rings");

  // cache powers of each substituted variable
  std::vector<std::vector<Polynomial>> pow(vars_);
  for (std::size_t i = 0; i < vars_; ++i)
    pow[i].push_back(Polynomial::constant(out_vars, Rat(1)));

  Polynomial r(out_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(out_vars, c);
    for (std::size_t i = 0; i < vars_; ++i) {
      while (pow[i].size() <= e[i]) pow[i].push_back(pow[i].back() * subs[i]);
      if (e[i] > 0) t = t * pow[i][e[i]];
    }
    r = r + t;
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    bool coef_one = (a == 1) && total_degree(e) > 0;
    if (!coef_one) os << rat_to_string(a);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

Polynomial quad_form(const Matrix& a) {
  if (!a.is_symmetric()) throw NonSymmetric("quad_form: matrix not symmetric");
  std::size_t n = a.rows();
  Polynomial f(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rat c = (i == j) ? a.at(i, i) : 2 * a.at(i, j);
      if (c == 0) continue;
      Expo e(n, 0);
      e[i] += 1;
      e[j] += 1;
      f.add_term(e, c);
    }
  }
  return f;
}

Matrix hessian_half(const Polynomial& f) {
  if (f.is_zero()) throw WrongDegree("hessian_half: zero polynomial");
  if (!f.is_homogeneous_of(2)) throw WrongDegree("hessian_half: degree != 2");
  std::size_t n = f.vars();
  Matrix a(n, n);
  for (const auto& [e, c] : f.terms()) {
    std::size_t i = 0, j = 0;
    bool seen_i = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (e[k] == 2) { i = j = k; seen_i = true; break; }
      if (e[k] == 1) {
        if (!seen_i) { i = k; seen_i = true; }
        else j = k;
      }
    }
    if (i == j) a.set(i, i, c);
    else {
      a.set(i, j, c / 2);
      a.set(j, i, c / 2);
    }
  }
  return a;
}

Polynomial transnormal_product(const Polynomial& f, const Polynomial& g) {
  if (f.vars() != g.vars()) throw DimensionMismatch("transnormal_product");
  Polynomial r(f.vars());
  for (std::size_t i = 0; i < f.vars(); ++i) r = r + f.partial(i) * g.partial(i);
  return r;
}

Polynomial pullback(const Polynomial& f, const Matrix& phi) {
  if (phi.rows() != f.vars()) throw DimensionMismatch("pullback: rows(phi) != vars(f)");
  std::vector<Polynomial> subs;
  subs.reserve(f.vars());
  for (std::size_t i = 0; i < f.vars(); ++i) {
    Polynomial li(phi.cols());
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      if (phi.at(i, j) == 0) continue;
      Expo e(phi.cols(), 0);
      e[j] = 1;
      li.add_term(e, phi.at(i, j));
    }
    subs.push_back(std::move(li));
  }
  return f.substitute(subs);
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  g.reserve(f.vars());
  for (std::size_t i = 0; i < f.vars(); ++i) g.push_back(f.partial(i));
  return g;
}

}  // namespace folia
