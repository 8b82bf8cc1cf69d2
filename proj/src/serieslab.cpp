#include "gammatri/serieslab.hpp"

#include "gammatri/coxgamma.hpp"

namespace gammatri {

namespace {

void require_order(int order) {
  if (order < 1) throw DomainError("series order must be >= 1");
}

RatSeries rat_poly_series(std::initializer_list<std::pair<int, RatPoly2>> terms, int order) {
  RatSeries s(order);
  for (const auto& [n, c] : terms)
    if (n < order) s.coeff(n) += c;
  return s;
}

const RatPoly2 kOne = RatPoly2::constant(1);
const RatPoly2 kX = RatPoly2::x();

std::string residual_detail(const IntSeries& r) {
  auto n = r.first_nonzero();
  if (!n) return "zero through t^" + std::to_string(r.order() - 1);
  return "first nonzero residual at t^" + std::to_string(*n) + ": " + r.coeff(*n).to_string();
}

void add_residual(Report& report, const std::string& name, const IntSeries& residual) {
  report.add(name, residual.is_zero(), residual_detail(residual));
}

IntSeries y_t(int order) { return IntSeries::monomial(IntPoly2::y(), 1, order); }

Rational q(const BigInt& v) { return Rational(v); }

// Coefficient of x^k t^{2k+m} in g_A.
Rational gA_coeff(int k, int m) { return q(binom(2 * k + m, k) * binom(k + m - 1, k - 1)) / (k + m + 1); }

// Coefficient of x^k y^l t^{2k+m+l} in G_A and G_B.
Rational GA_coeff(int k, int m, int l) {
  return Rational(l + 1) * q(binom(l + 2 * k + m, k) * binom(k + m - 1, k - 1)) / (l + k + m + 1);
}
Rational GB_coeff(int k, int m, int l) { return q(binom(l + 2 * k + m, k) * binom(k + m - 1, k - 1)); }

Rational gA_weighted(int k, int m) {
  if (k == 0) return m == 0 ? 1 : 0;
  return Rational(k) * q(binom(2 * k + m + 1, k) * binom(k + m, m)) / ((2 * k + m + 1) * (k + m));
}
Rational GA_weighted(int k, int m, int l) {
  if (k == 0) return m == 0 ? 1 : 0;
  return Rational((l + 1) * k) * q(binom(2 * k + m + l + 1, k) * binom(k + m, m)) / ((2 * k + m + l + 1) * (k + m));
}
Rational GB_weighted(int k, int m, int l) {
  if (k == 0) return m == 0 ? 1 : 0;
  return q(binom(2 * k + m + l, k) * binom(k + m - 1, m));
}

}  // namespace

IntSeries to_integer(const RatSeries& s, std::string_view what) {
  IntSeries out(s.order());
  for (int n = 0; n < s.order(); ++n) out.coeff(n) = to_integer(s.coeff(n), what);
  return out;
}

RatSeries to_rational(const IntSeries& s) {
  RatSeries out(s.order());
  for (int n = 0; n < s.order(); ++n) out.coeff(n) = to_rational(s.coeff(n));
  return out;
}

RatSeries series_sqrt(const RatSeries& a) {
  if (a.order() == 0) return a;
  if (a.coeff(0) != kOne) throw DomainError("series square root needs constant term 1");
  RatSeries s(a.order());
  s.coeff(0) = kOne;
  for (int n = 1; n < a.order(); ++n) {
    RatPoly2 acc = a.coeff(n);
    for (int i = 1; i < n; ++i)
      if (!s.coeff(i).is_zero() && !s.coeff(n - i).is_zero()) acc -= s.coeff(i) * s.coeff(n - i);
    s.coeff(n) = acc * Rational(1, 2);
  }
  return s;
}

IntSeries g_base(int order) {
  require_order(order);
  const RatSeries a = rat_poly_series({{0, kOne}, {1, RatPoly2::constant(-2)}, {2, kOne - Rational(4) * kX}}, order);
  return to_integer(series_sqrt(a), "g");
}

IntSeries g_alternate(int order) {
  require_order(order);
  const RatSeries one_minus_t = rat_poly_series({{0, kOne}, {1, RatPoly2::constant(-1)}}, order);
  const RatSeries u = RatSeries::t(order) * one_minus_t.inverse();
  const RatSeries inner = RatSeries::one(order) - (u * u) * (Rational(4) * kX);
  return to_integer(one_minus_t * series_sqrt(inner), "g (alternate route)");
}

IntSeries g_expansion_sum(int order) {
  require_order(order);
  IntSeries s(order);
  s.coeff(0) = IntPoly2::constant(1);
  if (order > 1) s.coeff(1) = IntPoly2::constant(-1);
  for (int n = 1; n < order; ++n) {
    for (int i = 1; 2 * i <= n; ++i) {
      BigInt c = exact_div(binom(2 * i - 2, i - 1) * binom(n - 2, 2 * i - 2), i, "expansion of g");
      s.coeff(n).add_term(i, 0, -2 * c);
    }
  }
  return s;
}

IntSeries g_closed(SeriesKind kind, int order) {
  require_order(order);
  const RatSeries g = to_rational(g_base(order + 1));
  const RatSeries one = RatSeries::one(order + 1);
  const RatSeries t = RatSeries::t(order + 1);
  const RatSeries tx_plus_1 = one + t * kX;
  switch (kind) {
    case SeriesKind::A: {
      const RatSeries num = (one + t - g).divided_by_t();
      return to_integer(num * (tx_plus_1.truncated(order) * Rational(2)).inverse(), "g_A closed form").truncated(order);
    }
    case SeriesKind::B: {
      const RatSeries num = t * (Rational(2) * kX) + g - t + one;
      return to_integer(num * (g * tx_plus_1 * Rational(2)).inverse(), "g_B closed form").truncated(order);
    }
    case SeriesKind::D: {
      const RatSeries num = (g - one) * (g - one + t);
      return to_integer(num * (g * Rational(2)).inverse(), "g_D closed form").truncated(order);
    }
  }
  throw std::logic_error("unknown series kind");
}

IntSeries g_sum(SeriesKind kind, int order) {
  require_order(order);
  IntSeries s(order);
  if (kind != SeriesKind::D) s.coeff(0) = IntPoly2::constant(1);
  for (int k = 1; 2 * k < order; ++k) {
    for (int m = 0; 2 * k + m < order; ++m) {
      Rational c;
      switch (kind) {
        case SeriesKind::A: c = gA_coeff(k, m); break;
        case SeriesKind::B: c = q(binom(2 * k + m, k) * binom(k + m - 1, k - 1)); break;
        case SeriesKind::D:
          c = Rational(2 * k + m - 2) * q(binom(2 * k - 2, k - 1) * binom(2 * k + m - 2, 2 * k - 2)) / k;
          break;
      }
      s.coeff(2 * k + m).add_term(k, 0, to_integer(c, "local gamma generating series"));
    }
  }
  return s;
}

IntSeries G_sum(SeriesKind kind, int order) {
  require_order(order);
  if (kind == SeriesKind::D) return G_D_assembled(order);
  IntSeries s(order);
  for (int l = 0; l < order; ++l) s.coeff(l).add_term(0, l, 1);
  for (int k = 1; 2 * k < order; ++k) {
    for (int m = 0; 2 * k + m < order; ++m) {
      for (int l = 0; 2 * k + m + l < order; ++l) {
        const Rational c = kind == SeriesKind::A ? GA_coeff(k, m, l) : GB_coeff(k, m, l);
        s.coeff(2 * k + m + l).add_term(k, l, to_integer(c, "Gamma generating series"));
      }
    }
  }
  return s;
}

IntSeries G_D_assembled(int order) {
  require_order(order);
  IntSeries s(order);
  if (order > 2) s.coeff(2) = IntPoly2::monomial(0, 2);
  for (int n = 3; n < order; ++n) s.coeff(n) = gamma_triangle_D(n).coefficients();
  return s;
}

IntSeries G_closed(SeriesKind kind, int order) {
  require_order(order);
  const IntSeries gA = g_closed(SeriesKind::A, order);
  const IntSeries denom_inv = (IntSeries::one(order) - y_t(order) * gA).inverse();
  if (kind == SeriesKind::A) return gA * denom_inv;
  const IntSeries GB = g_closed(SeriesKind::B, order) * denom_inv;
  if (kind == SeriesKind::B) return GB;
  return y_t(order) * (GB - IntSeries::one(order)) + g_closed(SeriesKind::D, order);
}

SeriesBundle series_bundle(int order) {
  require_order(order);
  SeriesBundle b;
  b.order = order;
  b.g = g_base(order);
  b.gA = g_sum(SeriesKind::A, order);
  b.gB = g_sum(SeriesKind::B, order);
  b.gD = g_sum(SeriesKind::D, order);
  b.GA = G_sum(SeriesKind::A, order);
  b.GB = G_sum(SeriesKind::B, order);
  b.GD = G_D_assembled(order);
  return b;
}

Report verify_identities(const SeriesBundle& b) {
  const int N = b.order;
  if (N < 6) throw DomainError("series identities need order >= 6");
  Report r;
  r.suite = "series";
  const IntSeries one = IntSeries::one(N);
  const IntSeries t = IntSeries::t(N);
  const IntSeries yt = y_t(N);

  add_residual(r, "gA_closed_form", b.gA - g_closed(SeriesKind::A, N));
  add_residual(r, "gB_closed_form", b.gB - g_closed(SeriesKind::B, N));
  add_residual(r, "gD_closed_form", b.gD - g_closed(SeriesKind::D, N));
  add_residual(r, "g_expansion", b.g - g_expansion_sum(N));
  add_residual(r, "GA_from_gA", b.GA - b.gA - yt * b.gA * b.GA);
  add_residual(r, "GB_from_gA_GB", b.GB - b.gB - yt * b.gA * b.GB);
  add_residual(r, "GB_from_gB_GA", b.GB - b.gB - yt * b.gB * b.GA);
  add_residual(r, "GD_from_gA_gD", b.GD - b.gD - yt * (b.gA - one) * BigInt(2) - yt * yt * b.gA - yt * b.gA * b.GD);
  add_residual(r, "gB_gA_gD_relation", b.gB - one - (b.gA - one) * BigInt(2) - b.gA * b.gD);
  add_residual(r, "GD_from_GB", b.GD - yt * (b.GB - one) - b.gD);
  {
    // d/dt costs one order, so g is taken one order longer here
    const IntSeries g = g_base(N + 1);
    const IntSeries lhs = IntSeries::t(N + 1) * g * g.d_dt() - g * g - IntSeries::t(N + 1) + IntSeries::one(N + 1);
    add_residual(r, "g_differential_equation", lhs);
  }
  {
    const IntSeries h = b.g - one + t;
    add_residual(r, "gD_euler_derivation", b.gD * BigInt(2) - (h * BigInt(2) - h.euler_theta()));
  }
  {
    const IntSeries gA_long = g_sum(SeriesKind::A, 2 * N);
    const IntSeries routed = gA_long.substitute_x_over_t().times_t().d_dt().substitute_x_times_t();
    add_residual(r, "gB_substitution", b.gB - routed.truncated(N));
  }
  add_residual(r, "g_squared", b.g * b.g - (one - t * BigInt(2) + t * t * (IntPoly2::constant(1) - IntPoly2::x() * BigInt(4))));
  add_residual(r, "g_alternate", b.g - g_alternate(N));
  return r;
}

Report verify_identities(int order) { return verify_identities(series_bundle(order)); }

Rational convolution_sum(ConvolutionKind kind, int k, int m, int l) {
  if (k < 0 || m < 0 || l < 0) throw DomainError("convolution indices must be >= 0");
  Rational sum = 0;
  for (int k1 = 0; k1 <= k; ++k1)
    for (int m1 = 0; m1 <= m; ++m1)
      sum += gA_coeff(k1, m1) * (kind == ConvolutionKind::A ? GA_coeff(k - k1, m - m1, l) : GB_coeff(k - k1, m - m1, l));
  return sum;
}

Rational convolution_sum_weighted(ConvolutionKind kind, int k, int m, int l) {
  if (k < 0 || m < 0 || l < 0) throw DomainError("convolution indices must be >= 0");
  Rational sum = 0;
  for (int k1 = 0; k1 <= k; ++k1)
    for (int m1 = 0; m1 <= m; ++m1)
      sum += gA_weighted(k1, m1) *
             (kind == ConvolutionKind::A ? GA_weighted(k - k1, m - m1, l) : GB_weighted(k - k1, m - m1, l));
  return sum;
}

Rational convolution_closed(ConvolutionKind kind, int k, int m, int l) {
  if (k < 0 || m < 0 || l < 0 || k + m == 0) throw DomainError("closed convolution needs k, m, l >= 0 and k + m >= 1");
  if (kind == ConvolutionKind::A)
    return Rational((l + 2) * k) * q(binom(2 * k + m + l + 2, k) * binom(k + m, m)) / ((2 * k + m + l + 2) * (k + m));
  return q(binom(2 * k + m + l + 1, k) * binom(k + m - 1, m));
}

Report convolution_check(int kmax, int mmax, int lmax) {
  if (kmax < 1 || mmax < 1 || lmax < 1) throw DomainError("convolution bounds must be >= 1");
  Report r;
  r.suite = "convolution";
  for (auto kind : {ConvolutionKind::A, ConvolutionKind::B}) {
    const std::string tag = kind == ConvolutionKind::A ? "A" : "B";
    int triples = 0;
    std::string closed_fail, weighted_fail;
    for (int k = 1; k <= kmax; ++k) {
      for (int m = 0; m <= mmax; ++m) {
        for (int l = 0; l <= lmax; ++l) {
          ++triples;
          const Rational lhs = convolution_sum(kind, k, m, l);
          const std::string at = "(k,m,l)=(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(l) + ")";
          if (closed_fail.empty() && lhs != convolution_closed(kind, k, m, l))
            closed_fail = at + " sum " + lhs.str() + " closed " + convolution_closed(kind, k, m, l).str();
          if (weighted_fail.empty() && lhs != convolution_sum_weighted(kind, k, m, l))
            weighted_fail = at + " sum " + lhs.str() + " weighted " + convolution_sum_weighted(kind, k, m, l).str();
        }
      }
    }
    const std::string ok = std::to_string(triples) + " triples equal";
    r.add("convolution_" + tag + "_closed", closed_fail.empty(), closed_fail.empty() ? ok : closed_fail);
    r.add("convolution_" + tag + "_weighted", weighted_fail.empty(), weighted_fail.empty() ? ok : weighted_fail);
  }
  return r;
}

std::pair<Rational, Rational> binomial_identity_sides(int n, int i) {
  if (n < 2 || i < 1 || 2 * i > n) throw DomainError("binomial identity needs n >= 2 and 1 <= i <= n/2");
  const Rational lhs =
      q(binom(n - 2, i - 1) * binom(n - i - 2, i - 2) + binom(n - 1, i) * binom(n - i - 2, i - 1)) / (n - i);
  const Rational rhs = q(binom(2 * i - 2, i - 1) * binom(n - 2, 2 * i - 2)) / i;
  return {lhs, rhs};
}

Report binomial_identity_check(int nmax) {
  if (nmax < 2) throw DomainError("binomial identity check needs nmax >= 2");
  Report r;
  r.suite = "binomial";
  int cases = 0;
  std::string fail;
  for (int n = 2; n <= nmax; ++n) {
    for (int i = 1; 2 * i <= n; ++i) {
      ++cases;
      auto [lhs, rhs] = binomial_identity_sides(n, i);
      if (fail.empty() && lhs != rhs)
        fail = "(n,i)=(" + std::to_string(n) + "," + std::to_string(i) + ") " + lhs.str() + " != " + rhs.str();
    }
  }
  r.add("binomial_identity", fail.empty(), fail.empty() ? std::to_string(cases) + " cases equal" : fail);
  return r;
}

}  // namespace gammatri
