#pragma once

// Power series in t truncated at a fixed order, with coefficients that are
// polynomials in x and y, and the generating series of local gamma
// polynomials and Gamma triangles of types A, B and D.

#include "gammatri/exactpoly.hpp"
#include "gammatri/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gammatri {

namespace detail {

inline BigInt divide_scalar(const BigInt& a, const BigInt& b) { return exact_div(a, b, "series coefficient division"); }
inline Rational divide_scalar(const Rational& a, const Rational& b) { return a / b; }

}  // namespace detail

/// Σ_{n < order} c_n t^n. Binary operations truncate at the smaller order.
template <class Scalar>
class TruncSeries {
 public:
  using Coeff = Poly2<Scalar>;

  explicit TruncSeries(int order = 0) : coeffs_(static_cast<std::size_t>(check_order(order))) {}

  static TruncSeries constant(const Coeff& c, int order) { return monomial(c, 0, order); }
  static TruncSeries one(int order) { return constant(Coeff::constant(Scalar(1)), order); }
  static TruncSeries t(int order) { return monomial(Coeff::constant(Scalar(1)), 1, order); }
  /// c t^n, or zero when n >= order.
  static TruncSeries monomial(const Coeff& c, int n, int order) {
    TruncSeries s(order);
    if (n < order) s.coeffs_[n] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()); }
  const Coeff& coeff(int n) const {
    if (n < 0 || n >= order()) throw DomainError("series coefficient index out of range");
    return coeffs_[n];
  }
  Coeff& coeff(int n) {
    if (n < 0 || n >= order()) throw DomainError("series coefficient index out of range");
    return coeffs_[n];
  }

  TruncSeries truncated(int order) const {
    if (order > this->order()) throw DomainError("cannot raise the order of a truncated series");
    TruncSeries s(order);
    std::copy_n(coeffs_.begin(), order, s.coeffs_.begin());
    return s;
  }

  /// Index of the first nonzero coefficient, if any.
  std::optional<int> first_nonzero() const {
    for (int n = 0; n < order(); ++n)
      if (!coeffs_[n].is_zero()) return n;
    return std::nullopt;
  }
  bool is_zero() const { return !first_nonzero(); }

  TruncSeries& operator+=(const TruncSeries& o) {
    shrink_to(o.order());
    for (int n = 0; n < order(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    shrink_to(o.order());
    for (int n = 0; n < order(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  TruncSeries& operator*=(const Coeff& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }
  TruncSeries& operator*=(const Scalar& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) { return a *= Scalar(-1); }
  friend TruncSeries operator*(TruncSeries a, const Coeff& c) { return a *= c; }
  friend TruncSeries operator*(const Coeff& c, TruncSeries a) { return a *= c; }
  friend TruncSeries operator*(TruncSeries a, const Scalar& c) { return a *= c; }
  friend TruncSeries operator*(const Scalar& c, TruncSeries a) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i < out.order(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; i + j < out.order(); ++j)
        if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  /// Exact comparison of coefficients 0 .. order-1; orders must agree.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

  /// t^k · s; the order grows by k.
  TruncSeries times_t(int k = 1) const {
    TruncSeries s(order() + k);
    for (int n = 0; n < order(); ++n) s.coeffs_[n + k] = coeffs_[n];
    return s;
  }

  /// s / t^k; the first k coefficients must vanish, and the order drops by k.
  TruncSeries divided_by_t(int k = 1) const {
    if (k > order()) throw DomainError("division by t beyond the truncation order");
    for (int n = 0; n < k; ++n)
      if (!coeffs_[n].is_zero()) throw std::logic_error("series not divisible by t^" + std::to_string(k));
    TruncSeries s(order() - k);
    for (int n = k; n < order(); ++n) s.coeffs_[n - k] = coeffs_[n];
    return s;
  }

  /// d/dt; the order drops by one.
  TruncSeries d_dt() const {
    TruncSeries s(std::max(order() - 1, 0));
    for (int n = 1; n < order(); ++n) s.coeffs_[n - 1] = coeffs_[n] * Scalar(n);
    return s;
  }

  /// θ = t d/dt: multiplies the coefficient of t^n by n.
  TruncSeries euler_theta() const {
    TruncSeries s(order());
    for (int n = 1; n < order(); ++n) s.coeffs_[n] = coeffs_[n] * Scalar(n);
    return s;
  }

  /// s(x/t, t): x^k t^n ↦ x^k t^{n-k}. Every term must satisfy 2k <= n, which
  /// makes the coefficients below t^{⌈order/2⌉} complete.
  TruncSeries substitute_x_over_t() const {
    TruncSeries s((order() + 1) / 2);
    for (int n = 0; n < order(); ++n) {
      for (const auto& [e, c] : coeffs_[n].terms()) {
        if (2 * e.i > n) throw std::logic_error("x/t substitution needs 2k <= n for every term x^k t^n");
        if (n - e.i < s.order()) s.coeffs_[n - e.i].add_term(e.i, e.j, c);
      }
    }
    return s;
  }

  /// s(x t, t): x^k t^n ↦ x^k t^{n+k}; the order is unchanged.
  TruncSeries substitute_x_times_t() const {
    TruncSeries s(order());
    for (int n = 0; n < order(); ++n)
      for (const auto& [e, c] : coeffs_[n].terms())
        if (n + e.i < order()) s.coeffs_[n + e.i].add_term(e.i, e.j, c);
    return s;
  }

  /// Multiplicative inverse; the constant coefficient must be a nonzero scalar
  /// (a unit for integer scalars).
  TruncSeries inverse() const {
    const Scalar c0 = constant_scalar("inverse");
    if (c0 == 0) throw DomainError("series inverse needs a nonzero constant term");
    TruncSeries b(order());
    if (order() == 0) return b;
    b.coeffs_[0] = Coeff::constant(detail::divide_scalar(Scalar(1), c0));
    for (int n = 1; n < order(); ++n) {
      Coeff acc;
      for (int i = 1; i <= n; ++i)
        if (!coeffs_[i].is_zero() && !b.coeffs_[n - i].is_zero()) acc += coeffs_[i] * b.coeffs_[n - i];
      Coeff next;
      for (const auto& [e, c] : acc.terms()) next.add_term(e.i, e.j, detail::divide_scalar(Scalar(-c), c0));
      b.coeffs_[n] = std::move(next);
    }
    return b;
  }

  std::string to_string() const {
    std::string out;
    for (int n = 0; n < order(); ++n) {
      if (coeffs_[n].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[n].to_string() + ")";
      if (n > 0) out += n == 1 ? "*t" : "*t^" + std::to_string(n);
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(order()) + ")";
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    return order;
  }
  void shrink_to(int order) {
    if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order));
  }
  Scalar constant_scalar(const char* what) const {
    if (order() == 0) return Scalar(1);
    const Coeff& c = coeffs_[0];
    for (const auto& [e, v] : c.terms())
      if (e.i != 0 || e.j != 0) throw DomainError(std::string("series ") + what + " needs a scalar constant term");
    return c.coeff(0, 0);
  }

  std::vector<Coeff> coeffs_;
};

using IntSeries = TruncSeries<BigInt>;
using RatSeries = TruncSeries<Rational>;

IntSeries to_integer(const RatSeries& s, std::string_view what);
RatSeries to_rational(const IntSeries& s);

/// Square root with constant term 1, by coefficient recursion.
RatSeries series_sqrt(const RatSeries& a);

/// g = sqrt((1 - t)² - 4 x t²).
IntSeries g_base(int order);

/// g as (1 - t) · sqrt(1 - 4x (t / (1 - t))²).
IntSeries g_alternate(int order);

/// 1 - t - 2 Σ_n Σ_i C(2i-2, i-1) C(n-2, 2i-2) / i · x^i t^n.
IntSeries g_expansion_sum(int order);

enum class SeriesKind { A, B, D };

/// The algebraic expressions for g_A, g_B, g_D in terms of g.
IntSeries g_closed(SeriesKind kind, int order);

/// g_A, g_B, g_D summed from the local gamma coefficient formulas.
IntSeries g_sum(SeriesKind kind, int order);

/// G_A, G_B summed from the closed-form Gamma coefficients (constant term 1).
IntSeries G_sum(SeriesKind kind, int order);

/// Σ_{n >= 2} Γ(D_n) t^n, with Γ(D_2) = y² and Γ(D_n) = gamma_triangle_D(n) for n >= 3.
IntSeries G_D_assembled(int order);

/// G_A = g_A / (1 - yt g_A), G_B = g_B / (1 - yt g_A), G_D = yt (G_B - 1) + g_D,
/// with the g series taken from g_closed.
IntSeries G_closed(SeriesKind kind, int order);

/// The series entering the identities, all truncated at one order.
struct SeriesBundle {
  int order = 0;
  IntSeries g, gA, gB, gD, GA, GB, GD;
};

/// g from g_base, g_A/g_B/g_D from g_sum, G_A/G_B from G_sum, G_D from G_D_assembled.
SeriesBundle series_bundle(int order);

/// Every series identity as a named residual check. The closed forms, the
/// expansion of g, and the x/t substitution route are recomputed internally;
/// the remaining identities use the bundle, so perturbing it is detected.
Report verify_identities(const SeriesBundle& b);
Report verify_identities(int order);

enum class ConvolutionKind { A, B };

/// Coefficient of (xt²)^k (yt)^l t^m in g_A G_A (type A) or g_A G_B (type B),
/// summed over k1 + k2 = k, m1 + m2 = m from the defining coefficients.
Rational convolution_sum(ConvolutionKind kind, int k, int m, int l);

/// The same sum with each summand in its k-weighted form; summands with
/// k_i = 0 take their defining value [m_i = 0].
Rational convolution_sum_weighted(ConvolutionKind kind, int k, int m, int l);

/// Closed right-hand side: type A (l+2)k / ((2k+m+l+2)(k+m)) C(2k+m+l+2, k) C(k+m, m),
/// type B C(2k+m+l+1, k) C(k+m-1, m). Requires k + m >= 1.
Rational convolution_closed(ConvolutionKind kind, int k, int m, int l);

/// All 1 <= k <= kmax, 0 <= m <= mmax, 0 <= l <= lmax for both kinds.
Report convolution_check(int kmax, int mmax, int lmax);

/// (C(n-2,i-1) C(n-i-2,i-2) + C(n-1,i) C(n-i-2,i-1)) / (n-i) against
/// C(2i-2,i-1) C(n-2,2i-2) / i.
std::pair<Rational, Rational> binomial_identity_sides(int n, int i);

/// All 2 <= n <= nmax, 1 <= i <= n/2.
Report binomial_identity_check(int nmax);

}  // namespace gammatri
