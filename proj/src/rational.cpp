#include "folia/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "folia/error.hpp"

namespace folia {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
  if (q.get_den() == 0) throw InputError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite float");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

Rat rationalize(double x, std::uint64_t max_den) {
  // Stern-Brocot / continued fraction best approximation.
  bool neg = x < 0;
  if (neg) x = -x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    mpz_class a = static_cast<unsigned long>(fl);
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > mpz_class(static_cast<unsigned long>(max_den))) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  Rat r(p1, q1 == 0 ? mpz_class(1) : q1);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

bool rat_sqrt_exact(const Rat& q, Rat& root) {
  if (q < 0) return false;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rat(rn, rd);
  root.canonicalize();
  return true;
}

Rat dot(const VecR& a, const VecR& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace folia
