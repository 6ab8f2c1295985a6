#include "oddzeta/zeta_odd.hpp"

#include <cmath>
#include <string>

#include "oddzeta/euler_constants.hpp"

namespace oddzeta {

namespace {

ExactRational ten_to_minus(int digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return ExactRational(BigInt(1), p);
}

ExactRational inverse_factorial(unsigned long n) { return ExactRational(BigInt(1), factorial(n)); }

Real two_pi_power(const PrecisionContext& ctx, long e) {
  return pow(ctx.constant(Constant::pi) * 2L, e);
}

// Floating-point allowance for one ladder level, in units of the caller's
// working precision (the ladder context already carries extra guard digits).
ExactRational rounding_allowance(const PrecisionContext& ladder_ctx, long n) {
  return ten_to_minus(ladder_ctx.working_digits() - ladder_extra_guard(n) - 2);
}

// Error carried into level n from the levels below it. zeta(2j+1) enters
// zeta(2n+1) with weight pi^{2k}/(2k+1)!, k = n - j.
ExactRational propagated_error(const OddZetaLadder& ladder, long n) {
  const ExactRational pi_up = pi_upper_bound();
  ExactRational e = 0;
  for (long k = 1; k <= n - 1; ++k) {
    const ExactRational w =
        pow(pi_up, static_cast<unsigned long>(2 * k)) * inverse_factorial(static_cast<unsigned long>(2 * k + 1));
    e += w * ladder.level(n - k).error_bound;
  }
  return e;
}

void build_level(OddZetaLadder& ladder, long j, const TruncationPlan& plan) {
  const PrecisionContext& ctx = ladder.context();
  TermBreakdown terms = term_breakdown(ctx, j, ladder, plan.m);
  Real value = odd_zeta_from_terms(ctx, terms);
  ExactRational err = plan.value_bound + propagated_error(ladder, j) + rounding_allowance(ctx, j);
  ladder.push(std::move(value), std::move(terms), plan, std::move(err));
}

}  // namespace

ExactRational harmonic_A(long n, long k) {
  require_argument(k >= 1 && k <= n,
                   "harmonic_A requires 1 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  ExactRational s = 0;
  for (long r = 0; r <= 2 * k - 1; ++r) s += make_rational(1, 2 * n - r);
  return s;
}

// ---------------------------------------------------------------------------

OddZetaLadder OddZetaLadder::from_values(const PrecisionContext& ctx, const std::vector<Real>& odd_values,
                                         const ExactRational& error) {
  OddZetaLadder ladder(ctx);
  for (const Real& v : odd_values) ladder.push(ctx.convert(v), std::nullopt, std::nullopt, error);
  return ladder;
}

const OddZetaLadder::Level& OddZetaLadder::level(long k) const {
  if (k < 1 || k > levels())
    fail(ErrorKind::missing_dependency, "ladder has " + std::to_string(levels()) + " levels, level " +
                                            std::to_string(k) + " requested");
  return levels_[static_cast<std::size_t>(k - 1)];
}

void OddZetaLadder::push(Real odd_value, std::optional<TermBreakdown> terms, std::optional<TruncationPlan> plan,
                         ExactRational error_bound) {
  const long k = levels() + 1;
  Real value = ctx_.convert(odd_value);
  Real deriv = zeta_deriv_neg_even(value, k);
  levels_.push_back({std::move(value), std::move(deriv), std::move(terms), std::move(plan), std::move(error_bound)});
}

Real zeta_deriv_neg_even(const Real& odd_value, long l) {
  require_argument(l >= 1, "zeta_deriv_neg_even requires l >= 1, got " + std::to_string(l));
  const PrecisionContext ctx = odd_value.context();
  Real v = odd_value * ExactRational(factorial(static_cast<unsigned long>(2 * l)));
  v /= two_pi_power(ctx, 2 * l) * 2L;
  return l % 2 == 0 ? v : -v;
}

Real zeta_deriv_neg_even(const OddZetaLadder& ladder, long l) {
  require_argument(l >= 1, "zeta_deriv_neg_even requires l >= 1, got " + std::to_string(l));
  return ladder.deriv_neg_even(l);
}

TermBreakdown term_breakdown(const PrecisionContext& ctx, long n, const OddZetaLadder& ladder, long m) {
  require_argument(n >= 1 && m >= 1, "term_breakdown requires n >= 1 and m >= 1");
  if (ladder.levels() < n - 1)
    fail(ErrorKind::missing_dependency, "level " + std::to_string(n) + " needs zeta(3)..zeta(" +
                                            std::to_string(2 * n - 1) + "), ladder has " +
                                            std::to_string(ladder.levels()) + " levels");
  const auto two_n = static_cast<unsigned long>(2 * n);
  const BigInt fact_2n = factorial(two_n);

  // t0 = (3/2)^{2n+1} (ln(3/2) - 1/(2n+1)) / (2n+1)
  Real t0 = ln_three_halves(ctx) - make_rational(1, 2 * n + 1);
  t0 *= pow(make_rational(3, 2), two_n + 1) / (2 * n + 1);

  Real t1(ctx);
  for (long k = 1; k <= n - 1; ++k) {
    Real term = ctx.convert(ladder.deriv_neg_even(n - k)) + harmonic_A(n, k);
    const BigInt den = factorial(static_cast<unsigned long>(2 * n - 2 * k)) *
                       factorial(static_cast<unsigned long>(2 * k + 1));
    t1 += term * (ExactRational(fact_2n, den) * pow2(-2 * k));
  }

  // (2n)!/(2n+1)! = 1/(2n+1)
  Real t2 = Real(ctx, harmonic_A(n, n) * 3) - ln_two_pi(ctx);
  t2 *= pow2(-(2 * n + 1)) / (2 * n + 1);

  Real t3(ctx);
  for (long l = 1; l <= m; ++l) {
    BigInt prod = 1;
    for (long r = 0; r <= 2 * n + 1; ++r) prod *= 2 * l + r;
    t3 += z_even(ctx, l) * (pow2(-2 * l) / ExactRational(prod));
  }
  t3 *= ExactRational(fact_2n) * pow2(-2 * n);

  return {std::move(t0), std::move(t1), std::move(t2), std::move(t3), n, m};
}

Real odd_zeta_from_terms(const PrecisionContext& ctx, const TermBreakdown& terms) {
  return odd_zeta_from_bracket(ctx.convert(terms.bracket()), terms.n);
}

Real odd_zeta_from_bracket(const Real& bracket, long n) {
  require_argument(n >= 1, "odd_zeta_from_bracket requires n >= 1");
  const PrecisionContext ctx = bracket.context();
  Real v = bracket * pow(ctx.constant(Constant::pi), 2 * n);
  v *= pow2(2 * n + 1) * inverse_factorial(static_cast<unsigned long>(2 * n));
  return n % 2 == 0 ? v : -v;
}

int ladder_extra_guard(long n) { return static_cast<int>(std::ceil(2.2 * static_cast<double>(n))); }

OddZetaLadder zeta_odd(const PrecisionContext& ctx, long n, long m) {
  require_argument(n >= 1 && m >= 1, "zeta_odd requires n >= 1 and m >= 1");
  OddZetaLadder ladder(ctx.widened(ladder_extra_guard(n)));
  for (long j = 1; j <= n; ++j) build_level(ladder, j, plan_for_terms(j, m));
  return ladder;
}

OddZetaLadder zeta_odd(const PrecisionContext& ctx, long n) {
  require_argument(n >= 1, "zeta_odd requires n >= 1");
  // Each level's error feeds the next with total weight below 4, so every
  // level is planned about 0.6 n digits beyond the request.
  const int extra_digits = 3 + static_cast<int>(std::ceil(0.6 * static_cast<double>(n)));
  const PrecisionContext inner =
      make_context(ctx.digits() + extra_digits, ctx.guard_digits() + ladder_extra_guard(n));
  OddZetaLadder ladder(inner);
  for (long j = 1; j <= n; ++j) build_level(ladder, j, plan_terms(inner, inner.digits(), j));
  return ladder;
}

// ---------------------------------------------------------------------------
// Addendum quantities

Real digamma_int(const PrecisionContext& ctx, long m) {
  require_argument(m >= 1, "digamma_int requires m >= 1, got " + std::to_string(m));
  ExactRational h = 0;
  for (long j = 1; j <= m - 1; ++j) h += make_rational(1, j);
  return Real(ctx, h) - ctx.constant(Constant::euler_gamma);
}

Real zeta_deriv_even(const PrecisionContext& ctx, long n) {
  require_argument(n >= 1, "zeta_deriv_even requires n >= 1, got " + std::to_string(n));
  const long s = 2 * n;
  const int w = ctx.working_digits();
  // Euler-Maclaurin corrections at N shrink like (s + 2j)^2 / (2 pi N)^2 until
  // 2j ~ 2 pi N, where they reach about e^{-2 pi N}.
  const long big_n = static_cast<long>(std::ceil(0.37 * w)) + 10;

  Real sum(ctx);
  for (long k = 2; k < big_n; ++k) sum += log(Real(ctx, k)) / pow(Real(ctx, k), s);

  const Real nn(ctx, big_n);
  const Real ln_n = log(nn);
  const Real n_pow = pow(nn, -s);  // N^{-s}
  // f(x) = ln x / x^s; integral from N to infinity plus half the end value.
  Real tail = n_pow * nn * (ln_n / (s - 1) + make_rational(1, (s - 1) * (s - 1)));
  tail += n_pow * ln_n / 2L;

  // f^{(q)}(x) = x^{-s-q} (a_q ln x + b_q)
  BigInt a = 1;
  BigInt b = 0;
  const Real eps(ctx, ten_to_minus(w + 2));
  Real x_pow = n_pow;
  const Real inv_n = Real(ctx, 1L) / nn;
  for (long q = 0; q < 2 * (big_n * 7); ++q) {
    const BigInt factor = -(s + q);
    b = factor * b + a;
    a = factor * a;
    x_pow *= inv_n;
    if (q % 2 != 0) continue;
    // q + 1 = 2j - 1 is odd: subtract B_{2j}/(2j)! f^{(2j-1)}(N)
    const unsigned two_j = static_cast<unsigned>(q + 2);
    const Real deriv = x_pow * (ln_n * ExactRational(a) + ExactRational(b));
    const Real corr = deriv * (bernoulli(two_j) * inverse_factorial(two_j));
    tail -= corr;
    if (abs(corr) < eps) break;
  }
  return -(sum + tail);
}

Real deriv_bracket(const PrecisionContext& ctx, long n) {
  require_argument(n >= 1, "deriv_bracket requires n >= 1, got " + std::to_string(n));
  return zeta_deriv_even(ctx, n) + zeta_even(ctx, n) * (digamma_int(ctx, 2 * n) - ln_two_pi(ctx));
}

Real zeta_deriv_neg_odd(const PrecisionContext& ctx, long n) {
  require_argument(n >= 1, "zeta_deriv_neg_odd requires n >= 1, got " + std::to_string(n));
  Real v = deriv_bracket(ctx, n) * ExactRational(factorial(static_cast<unsigned long>(2 * n - 1)) * 2);
  v /= two_pi_power(ctx, 2 * n);
  return n % 2 == 1 ? v : -v;
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

char sign_symbol(Sign s) {
  switch (s) {
    case Sign::negative: return '-';
    case Sign::zero: return '0';
    case Sign::positive: return '+';
  }
  return '?';
}

Sign sign_of(const Real& x) {
  const int s = x.sign();
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

std::vector<Sign> deriv_sign_classification(const PrecisionContext& ctx, long n_max) {
  require_argument(n_max >= 1, "n_max must be >= 1");
  std::vector<Sign> out;
  for (long n = 1; n <= n_max; ++n) out.push_back(sign_of(zeta_deriv_neg_odd(ctx, n)));
  return out;
}

std::vector<Sign> bracket_sign_classification(const PrecisionContext& ctx, long n_max) {
  require_argument(n_max >= 1, "n_max must be >= 1");
  std::vector<Sign> out;
  for (long n = 1; n <= n_max; ++n) out.push_back(sign_of(deriv_bracket(ctx, n)));
  return out;
}

}  // namespace oddzeta
