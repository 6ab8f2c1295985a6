#include "oddzeta/zeta3_series.hpp"

#include <string>

#include "oddzeta/euler_constants.hpp"
#include "oddzeta/truncation.hpp"

namespace oddzeta {

namespace {

void require_terms(long m, const char* what) {
  require_argument(m >= 1, std::string(what) + " requires m >= 1, got " + std::to_string(m));
}

Real eight_pi_squared(const PrecisionContext& ctx) {
  Real pi = ctx.constant(Constant::pi);
  return pi * pi * 8L;
}

}  // namespace

ExactRational coeff_C(long l) {
  require_argument(l >= 1, "coeff_C requires l >= 1, got " + std::to_string(l));
  const BigInt den = BigInt(l) * (l + 1) * (2 * l + 1) * (2 * l + 3) * 16;
  return pow2(-2 * l) / ExactRational(den);
}

ExactRational coeff_C_partial_fractions(long l) {
  require_argument(l >= 1, "coeff_C_partial_fractions requires l >= 1, got " + std::to_string(l));
  ExactRational bracket = make_rational(1, 3 * l) - make_rational(2, 2 * l + 1) +
                          make_rational(1, l + 1) - make_rational(2, 3 * (2 * l + 3));
  return bracket * pow2(-2 * l) / 16;
}

Real series_sum(const PrecisionContext& ctx, long m) {
  require_terms(m, "series_sum");
  Real acc(ctx);
  for (long l = 1; l <= m; ++l) acc += z_even(ctx, l) * coeff_C(l);
  return acc;
}

Real const_A(const PrecisionContext& ctx) {
  Real inner = ln_two_pi(ctx) / 3L + ln_three_halves(ctx) * 9L;
  inner -= make_rational(9, 2);
  return inner / 16L;
}

Real phi_minus2(const PrecisionContext& ctx, long m) {
  require_terms(m, "phi_minus2");
  return const_A(ctx) - series_sum(ctx, m);
}

Real zeta3(const PrecisionContext& ctx, long m) {
  return -(eight_pi_squared(ctx) * phi_minus2(ctx, m));
}

Real zeta3(const PrecisionContext& ctx, const TruncationPlan& plan) { return zeta3(ctx, plan.m); }

FixedDecimalZeta3 zeta3_fixed_decimals(const PrecisionContext& ctx, long m, int decimals) {
  require_terms(m, "zeta3_fixed_decimals");
  require_argument(decimals >= 1, "decimals must be positive");
  FixedDecimalZeta3 out{round_to_decimals(const_A(ctx), decimals), {}, Real(ctx), Real(ctx), Real(ctx)};
  Real sum(ctx);
  for (long l = 1; l <= m; ++l) {
    out.terms.push_back(round_to_decimals(z_even(ctx, l) * coeff_C(l), decimals));
    sum += out.terms.back();
  }
  out.b = -sum;
  out.a_plus_b = out.a + out.b;
  out.zeta3 = -(eight_pi_squared(ctx) * out.a_plus_b);
  return out;
}

ReducedParts reduced_parts(const PrecisionContext& ctx, long m) {
  require_terms(m, "reduced_parts");
  const Real ln2 = ctx.constant(Constant::ln2);
  const Real ln3 = ctx.constant(Constant::ln3);

  // ln(pi/2) - ln(4/3) = ln(pi) - 3 ln 2 + ln 3
  Real sa = (ln_pi(ctx) - ln2 * 3L + ln3) / 48L;
  // ln(3 sqrt 2) - 3/2 = ln 3 + ln(2)/2 - 3/2
  Real sb = ln3 + ln2 / 2L;
  sb -= make_rational(3, 2);
  sb /= 8L;

  Real sc(ctx);
  Real sd(ctx);
  for (long l = 1; l <= m; ++l) {
    const Real z = z_even(ctx, l);
    const ExactRational quarter_pow = pow2(-2 * l);
    sc += z * (quarter_pow / (l + 1));
    sd += z * (quarter_pow / (2 * l + 3));
  }
  sc /= 16L;
  sd /= -24L;
  return {std::move(sa), std::move(sb), std::move(sc), std::move(sd)};
}

ExactRational reduced_tail_bound(long m) {
  require_terms(m, "reduced_tail_bound");
  // Term ratios are below 1/16 for both pieces, so the first omitted term
  // times 16/15 bounds each tail.
  const long l = m + 1;
  const ExactRational f = z_bound_F(l) * pow2(-2 * l);
  const ExactRational sc_first = f / (l + 1) / 16;
  const ExactRational sd_first = f / (2 * l + 3) / 24;
  return (sc_first + sd_first) * make_rational(16, 15);
}

std::pair<Real, Real> slow_products(const PrecisionContext& ctx, long n_max) {
  require_argument(n_max >= 2, "slow_products requires n_max >= 2, got " + std::to_string(n_max));
  Real sc(ctx);
  Real sd(ctx);
  const ExactRational twelfth = make_rational(1, 12);
  for (long n = 2; n <= n_max; ++n) {
    const BigInt n2 = BigInt(n) * n;
    // ln[e (1 - 1/(4n^2))^{4n^2}] = 1 + 4n^2 ln(1 - 1/(4n^2))
    Real lc = log1p(Real(ctx, ExactRational(BigInt(-1), n2 * 4))) * ExactRational(n2 * 4);
    sc += lc + 1L;

    // n^3 ln((1 + x)/(1 - x)) - n^2 - 1/12 with x = 1/(2n)
    const Real x(ctx, make_rational(1, 2 * n));
    Real ld = (log1p(x) - log1p(-x)) * ExactRational(n2 * n);
    ld -= ExactRational(n2) + twelfth;
    sd += ld;
  }
  sc /= -16L;
  sd /= -6L;
  return {std::move(sc), std::move(sd)};
}

long reduced_terms_for(int digits) {
  require_argument(digits >= 1, "digits must be positive");
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const ExactRational goal(BigInt(1), p);
  const ExactRational pi_up = pi_upper_bound();
  long m = 1;
  while (reduced_tail_bound(m) * pi_up * pi_up * 8 > goal) ++m;
  return m;
}

Real zeta3_reduced(const PrecisionContext& ctx, long m) {
  require_terms(m, "zeta3_reduced");
  const ReducedParts parts = reduced_parts(ctx, m);
  Real inner = ctx.constant(Constant::ln3) * make_rational(5, 12) -
               ctx.constant(Constant::ln2) * make_rational(13, 24);
  inner -= make_rational(3, 32);
  inner -= parts.sc;
  inner -= parts.sd;
  return -(eight_pi_squared(ctx) * inner);
}

std::pair<Real, Real> log_identity(const PrecisionContext& ctx, LogIdentity which, long m) {
  require_terms(m, "log_identity");
  Real lhs(ctx);
  for (long l = 1; l <= m; ++l) {
    const ExactRational w = which == LogIdentity::odd_denominator
                                ? pow2(-2 * l) / (2 * l + 1)
                                : pow2(-2 * l) / l;
    lhs += zeta_even(ctx, l) * w;
  }
  Real rhs(ctx);
  switch (which) {
    case LogIdentity::odd_denominator:
      rhs = (Real(ctx, 1L) - ctx.constant(Constant::ln2)) / 2L;
      break;
    case LogIdentity::index_denominator:
      rhs = ln_pi(ctx) - ctx.constant(Constant::ln2);
      break;
    default:
      fail(ErrorKind::invalid_argument, "unknown log identity selector");
  }
  return {std::move(lhs), std::move(rhs)};
}

LogIdentity parse_log_identity(std::string_view name) {
  if (name == "odd_denominator") return LogIdentity::odd_denominator;
  if (name == "index_denominator") return LogIdentity::index_denominator;
  fail(ErrorKind::invalid_argument, "unknown log identity '" + std::string(name) + "'");
}

}  // namespace oddzeta
