#pragma once

// Exact sparse polynomials in one and two variables over an arbitrary
// scalar ring, plus the binomial coefficient used by every closed form.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gammatri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an argument lies outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class Scalar>
std::string scalar_string(const Scalar& c) {
  return c.str();
}

inline std::string monomial_string(int i, int j) {
  std::string s;
  auto power = [&s](char var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (e > 1) s += '^' + std::to_string(e);
  };
  power('x', i);
  power('y', j);
  return s;
}

template <class Scalar>
void append_term(std::string& out, const Scalar& c, int i, int j) {
  std::string mono = monomial_string(i, j);
  bool negative = c < 0;
  Scalar mag = negative ? Scalar(-c) : c;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += scalar_string(mag);
  } else if (mag == 1) {
    out += mono;
  } else {
    out += scalar_string(mag) + '*' + mono;
  }
}

}  // namespace detail

/// Sparse univariate polynomial in x. Zero coefficients are never stored.
template <class Scalar>
class Poly1 {
 public:
  using Terms = std::map<int, Scalar>;

  Poly1() = default;
  Poly1(std::initializer_list<std::pair<int, Scalar>> terms) {
    for (const auto& [i, c] : terms) add_term(i, c);
  }

  static Poly1 constant(const Scalar& c) {
    Poly1 p;
    p.add_term(0, c);
    return p;
  }
  static Poly1 monomial(int i, const Scalar& c = Scalar(1)) {
    Poly1 p;
    p.add_term(i, c);
    return p;
  }
  static Poly1 x() { return monomial(1); }
  /// Dense coefficients c[0] + c[1] x + ...
  static Poly1 from_dense(const std::vector<Scalar>& c) {
    Poly1 p;
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), c[i]);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  /// Smallest exponent with a nonzero coefficient, -1 for zero.
  int low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

  Scalar coeff(int i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(int i, const Scalar& c) {
    if (i < 0) throw DomainError("negative exponent in polynomial term");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Scalar evaluate(const Scalar& at) const {
    Scalar acc = 0;
    Scalar power = 1;
    int e = 0;
    for (const auto& [i, c] : terms_) {
      for (; e < i; ++e) power *= at;
      acc += c * power;
    }
    return acc;
  }

  /// x^k * p
  Poly1 shifted(int k) const {
    Poly1 r;
    for (const auto& [i, c] : terms_) r.add_term(i + k, c);
    return r;
  }

  /// p / x^k; throws when some stored exponent is below k.
  Poly1 divided_by_x_power(int k) const {
    if (!is_zero() && low_degree() < k) throw DomainError("polynomial not divisible by x^" + std::to_string(k));
    return shifted(-k);
  }

  /// True when the coefficient sequence of length d + 1 is a palindrome.
  bool is_symmetric(int d) const {
    if (degree() > d) return false;
    for (const auto& [i, c] : terms_)
      if (coeff(d - i) != c) return false;
    return true;
  }

  Poly1& operator+=(const Poly1& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, c);
    return *this;
  }
  Poly1& operator-=(const Poly1& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, -c);
    return *this;
  }
  Poly1& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [i, c] : terms_) c *= s;
    return *this;
  }
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator-(Poly1 a) { return a *= Scalar(-1); }
  friend Poly1 operator*(Poly1 a, const Scalar& s) { return a *= s; }
  friend Poly1 operator*(const Scalar& s, Poly1 a) { return a *= s; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r;
    for (const auto& [i, c] : a.terms_)
      for (const auto& [k, d] : b.terms_) r.add_term(i + k, c * d);
    return r;
  }
  Poly1& operator*=(const Poly1& o) { return *this = *this * o; }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : terms_) detail::append_term(out, c, i, 0);
    return out;
  }

 private:
  Terms terms_;
};

/// A monomial exponent pair (power of x, power of y).
struct Exponent2 {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Exponent2&, const Exponent2&) = default;
};

/// Sparse bivariate polynomial in x and y. Zero coefficients are never stored;
/// terms are kept in lexicographic (i, j) order.
template <class Scalar>
class Poly2 {
 public:
  using Terms = std::map<Exponent2, Scalar>;
  struct Term {
    int i;
    int j;
    Scalar c;
  };

  Poly2() = default;
  Poly2(std::initializer_list<Term> terms) {
    for (const auto& t : terms) add_term(t.i, t.j, t.c);
  }

  static Poly2 constant(const Scalar& c) {
    Poly2 p;
    p.add_term(0, 0, c);
    return p;
  }
  static Poly2 monomial(int i, int j, const Scalar& c = Scalar(1)) {
    Poly2 p;
    p.add_term(i, j, c);
    return p;
  }
  static Poly2 x() { return monomial(1, 0); }
  static Poly2 y() { return monomial(0, 1); }
  /// Embeds a polynomial in x, optionally multiplied by y^j.
  static Poly2 from_x(const Poly1<Scalar>& p, int j = 0) {
    Poly2 r;
    for (const auto& [i, c] : p.terms()) r.add_term(i, j, c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(int i, int j) const {
    auto it = terms_.find(Exponent2{i, j});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(int i, int j, const Scalar& c) {
    if (i < 0 || j < 0) throw DomainError("negative exponent in polynomial term");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Exponent2{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// -1 for the zero polynomial.
  int x_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.i);
    return d;
  }
  int y_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.j);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.i + e.j);
    return d;
  }

  /// Coefficient of y^j, as a polynomial in x.
  Poly1<Scalar> y_coefficient(int j) const {
    Poly1<Scalar> r;
    for (const auto& [e, c] : terms_)
      if (e.j == j) r.add_term(e.i, c);
    return r;
  }

  /// p(x, 1)
  Poly1<Scalar> at_y_one() const {
    Poly1<Scalar> r;
    for (const auto& [e, c] : terms_) r.add_term(e.i, c);
    return r;
  }
  /// p(x, 0)
  Poly1<Scalar> at_y_zero() const { return y_coefficient(0); }
  /// p(x, x)
  Poly1<Scalar> at_y_equals_x() const {
    Poly1<Scalar> r;
    for (const auto& [e, c] : terms_) r.add_term(e.i + e.j, c);
    return r;
  }

  /// x^a y^b * p
  Poly2 shifted(int a, int b) const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.add_term(e.i + a, e.j + b, c);
    return r;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.i, e.j, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.i, e.j, -c);
    return *this;
  }
  Poly2& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(Poly2 a) { return a *= Scalar(-1); }
  friend Poly2 operator*(Poly2 a, const Scalar& s) { return a *= s; }
  friend Poly2 operator*(const Scalar& s, Poly2 a) { return a *= s; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [e, c] : a.terms_)
      for (const auto& [f, d] : b.terms_) r.add_term(e.i + f.i, e.j + f.j, c * d);
    return r;
  }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) detail::append_term(out, c, e.i, e.j);
    return out;
  }

 private:
  Terms terms_;
};

using IntPoly1 = Poly1<BigInt>;
using IntPoly2 = Poly2<BigInt>;
using RatPoly1 = Poly1<Rational>;
using RatPoly2 = Poly2<Rational>;

/// Repeated-squaring power; pow(p, 0) is the constant 1.
template <class Poly>
Poly pow(Poly base, int e) {
  if (e < 0) throw DomainError("negative polynomial power");
  Poly acc = Poly::constant(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

/// C(a, b) for arbitrary integers: zero when b < 0 or a < b, except the single
/// convention C(-1, -1) = 1.
BigInt binom(long a, long b);

/// num / den, throwing std::logic_error naming `what` when the division is not exact.
BigInt exact_div(const BigInt& num, const BigInt& den, std::string_view what);

/// The integer value of q, throwing std::logic_error naming `what` when q is not integral.
BigInt to_integer(const Rational& q, std::string_view what);

IntPoly2 to_integer(const RatPoly2& p, std::string_view what);
RatPoly2 to_rational(const IntPoly2& p);

}  // namespace gammatri
