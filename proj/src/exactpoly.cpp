#include "gammatri/exactpoly.hpp"

namespace gammatri {

BigInt binom(long a, long b) {
  if (a == -1 && b == -1) return 1;
  if (b < 0 || a < b) return 0;
  long k = std::min(b, a - b);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= a - k + i;
    r /= i;
  }
  return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den, std::string_view what) {
  if (den == 0) throw std::logic_error("division by zero in " + std::string(what));
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error("inexact division in " + std::string(what) + ": " + num.str() + " / " + den.str());
  }
  return q;
}

BigInt to_integer(const Rational& q, std::string_view what) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::logic_error("non-integral value " + q.str() + " in " + std::string(what));
  }
  return boost::multiprecision::numerator(q);
}

IntPoly2 to_integer(const RatPoly2& p, std::string_view what) {
  IntPoly2 r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.i, e.j, to_integer(c, what));
  return r;
}

RatPoly2 to_rational(const IntPoly2& p) {
  RatPoly2 r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.i, e.j, Rational(c));
  return r;
}

}  // namespace gammatri
