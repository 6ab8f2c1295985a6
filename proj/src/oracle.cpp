#include "oddzeta/oracle.hpp"

#include <cmath>
#include <mutex>
#include <string>

namespace oddzeta::oracle {

namespace {

Real ten_to_minus(const PrecisionContext& ctx, int digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return Real(ctx, ExactRational(BigInt(1), p));
}

long default_cutoff(const PrecisionContext& ctx) {
  // The correction terms bottom out near e^{-2 pi N}.
  return static_cast<long>(std::ceil(0.37 * ctx.working_digits())) + 10;
}

void require_convergent(const Real& s, const char* what) {
  if (!(s > 1L)) fail(ErrorKind::domain, std::string(what) + " needs s > 1, got " + s.to_scientific(12));
}

// sum_{k=first}^{inf} f(k) with f(x) = x^{-s} or ln(x) x^{-s}.
Estimate euler_maclaurin(const PrecisionContext& ctx, const Real& s, long cutoff, long first, bool log_weight) {
  const long big_n = cutoff > 0 ? cutoff : default_cutoff(ctx);
  if (big_n <= first) fail(ErrorKind::invalid_argument, "cutoff must exceed the first summed index");

  const Real neg_s = -s;
  auto f = [&](long k) {
    const Real kk(ctx, k);
    Real v = pow(kk, neg_s);
    if (log_weight) v *= log(kk);
    return v;
  };

  Real sum(ctx);
  for (long k = first; k < big_n; ++k) sum += f(k);

  const Real nn(ctx, big_n);
  const Real ln_n = log(nn);
  const Real n_pow = pow(nn, neg_s);
  const Real s_minus_1 = s - 1L;
  Real tail(ctx);
  if (log_weight)
    tail = n_pow * nn * (ln_n / s_minus_1 + Real(ctx, 1L) / (s_minus_1 * s_minus_1));
  else
    tail = n_pow * nn / s_minus_1;
  tail += f(big_n) / 2L;

  // f^{(q)}(x) = x^{-s-q} (a_q L + b_q) with L = ln x (log weight) or 1.
  Real a(ctx, 1L);
  Real b(ctx);
  Real x_pow = n_pow;
  const Real inv_n = Real(ctx, 1L) / nn;
  const Real scale = abs(f(2));
  const Real eps = scale * ten_to_minus(ctx, ctx.working_digits() + 2);
  Real last(ctx);
  bool have_last = false;
  Real error(ctx);
  for (long q = 0;; ++q) {
    const Real factor = neg_s - q;
    b = factor * b + a;
    a = factor * a;
    x_pow *= inv_n;
    if (q % 2 != 0) continue;
    const unsigned two_j = static_cast<unsigned>(q + 2);
    const Real deriv = log_weight ? x_pow * (a * ln_n + b) : x_pow * a;
    BigInt fact = 1;
    for (unsigned i = 2; i <= two_j; ++i) fact *= i;
    const Real corr = deriv * (bernoulli_at(two_j) / ExactRational(fact));
    const Real mag = abs(corr);
    if (have_last && mag > last) {
      // Asymptotic series turned around; the remainder is below the last
      // term used.
      error = last;
      break;
    }
    tail -= corr;
    if (mag < eps) {
      error = mag;
      break;
    }
    last = mag;
    have_last = true;
  }

  Real value = sum + tail;
  // Rounding in the direct sum: one half-ulp per addition, generously.
  Real ulp = pow(Real(ctx, 2L), -static_cast<long>(ctx.bits()));
  error += ulp * (big_n + 64) * abs(value);
  return {std::move(value), std::move(error)};
}

}  // namespace

ExactRational bernoulli_at(unsigned n) {
  static std::mutex mu;
  static std::vector<ExactRational> table;
  static std::vector<ExactRational> row;  // Akiyama-Tanigawa working row
  std::lock_guard<std::mutex> lock(mu);
  for (unsigned m = static_cast<unsigned>(table.size()); m <= n; ++m) {
    row.emplace_back(BigInt(1), BigInt(m + 1));
    for (unsigned i = m; i >= 1; --i) row[i - 1] = ExactRational(i) * (row[i - 1] - row[i]);
    table.push_back(row[0]);
  }
  return table[n];
}

Estimate dirichlet_zeta_estimate(const PrecisionContext& ctx, const Real& s, long cutoff) {
  require_convergent(s, "dirichlet_zeta");
  return euler_maclaurin(ctx, ctx.convert(s), cutoff, 1, false);
}

Real dirichlet_zeta(const PrecisionContext& ctx, const Real& s) {
  return dirichlet_zeta_estimate(ctx, s).value;
}

Real dirichlet_zeta(const PrecisionContext& ctx, double s) { return dirichlet_zeta(ctx, Real(ctx, s)); }

Estimate dirichlet_zeta_minus_one_estimate(const PrecisionContext& ctx, const Real& s, long cutoff) {
  require_convergent(s, "dirichlet_zeta_minus_one");
  return euler_maclaurin(ctx, ctx.convert(s), cutoff, 2, false);
}

Real dirichlet_zeta_minus_one(const PrecisionContext& ctx, const Real& s) {
  return dirichlet_zeta_minus_one_estimate(ctx, s).value;
}

Estimate dirichlet_zeta_deriv_estimate(const PrecisionContext& ctx, const Real& s, long cutoff) {
  require_convergent(s, "dirichlet_zeta_deriv");
  Estimate e = euler_maclaurin(ctx, ctx.convert(s), cutoff, 2, true);
  e.value = -e.value;
  return e;
}

Real dirichlet_zeta_deriv(const PrecisionContext& ctx, const Real& s) {
  return dirichlet_zeta_deriv_estimate(ctx, s).value;
}

Real dirichlet_zeta_deriv(const PrecisionContext& ctx, double s) {
  return dirichlet_zeta_deriv(ctx, Real(ctx, s));
}

// ---------------------------------------------------------------------------

ExactRational zeta_eq1_exact(long j) {
  require_argument(j >= 0, "zeta_eq1_exact needs j >= 0");
  const long s = -j;
  ExactRational value = ExactRational(1) + pow(make_rational(3, 2), static_cast<unsigned long>(j + 1)) / (s - 1);
  BigInt four_k = 1;
  BigInt fact = 1;  // (2k+1)!
  for (long k = 1; s + 2 * k <= 1; ++k) {
    four_k *= 4;
    fact *= (2 * k) * (2 * k + 1);
    const ExactRational weight(BigInt(1), fact * four_k);
    if (s + 2 * k == 1) {
      // prod_{r=0}^{2k-1}(s+r) Z(s+2k) -> prod_{r=0}^{2k-2}(s+r), since
      // (s + 2k - 1) zeta(s + 2k) -> 1 at the pole.
      BigInt p = 1;
      for (long r = 0; r <= 2 * k - 2; ++r) p *= s + r;
      value -= ExactRational(p) * weight;
    } else {
      BigInt p = 1;
      for (long r = 0; r <= 2 * k - 1; ++r) p *= s + r;
      value -= ExactRational(p) * (zeta_eq1_exact(-(s + 2 * k)) - 1) * weight;
    }
  }
  return value;
}

Real zeta_eq1(const PrecisionContext& ctx, double s, long k_max) {
  if (s == 1.0) fail(ErrorKind::pole, "zeta has a pole at s = 1");
  require_argument(k_max >= 1, "zeta_eq1 needs k_max >= 1");
  if (s <= 0 && std::floor(s) == s) return Real(ctx, zeta_eq1_exact(static_cast<long>(-s)));
  if (s + 2.0 * static_cast<double>(k_max) <= 2.0)
    fail(ErrorKind::truncation_insufficient,
         "k_max = " + std::to_string(k_max) + " leaves the series unconverged at s = " + std::to_string(s));

  const Real sr(ctx, s);
  Real value = pow(Real(ctx, make_rational(2, 3)), sr - 1L) / (sr - 1L);
  value += 1L;
  Real prod(ctx, 1L);
  BigInt fact = 1;
  BigInt four_k = 1;
  for (long k = 1; k <= k_max; ++k) {
    prod *= (sr + (2 * k - 2)) * (sr + (2 * k - 1));
    fact *= (2 * k) * (2 * k + 1);
    four_k *= 4;
    const double arg = s + 2.0 * static_cast<double>(k);
    const Real z = arg > 1.0 ? dirichlet_zeta_minus_one(ctx, sr + 2 * k) : zeta_eq1(ctx, arg, k_max) - 1L;
    value -= prod * z / Real(ctx, ExactRational(fact * four_k));
  }
  return value;
}

Real zeta_deriv_minus_one(const PrecisionContext& ctx) {
  Real a(ctx, std::string_view(reference("glaisher").value));
  return Real(ctx, make_rational(1, 12)) - log(a);
}

// ---------------------------------------------------------------------------

const std::vector<ReferenceConstant>& reference_catalog() {
  static const std::vector<ReferenceConstant> catalog{
      {"zeta3", "1.2020569031595942853997381615114499907649862923405", "mpmath zeta(3), 50 digits"},
      {"zeta5", "1.0369277551433699263313654864570341680570809195019", "mpmath zeta(5), 50 digits"},
      {"zeta7", "1.0083492773819228268397975498497967595998635605652", "mpmath zeta(7), 50 digits"},
      {"zeta9", "1.0020083928260822144178527692324120604856058513949", "mpmath zeta(9), 50 digits"},
      {"zeta11", "1.0004941886041194645587022825264699364686064357582", "mpmath zeta(11), 50 digits"},
      {"pi", "3.1415926535897932384626433832795028841971693993751", "mpmath pi, 50 digits"},
      {"euler_gamma", "0.57721566490153286060651209008240243104215933593992", "mpmath euler, 50 digits"},
      {"ln2", "0.69314718055994530941723212145817656807550013436026", "mpmath log(2), 50 digits"},
      {"ln3", "1.0986122886681096913952452369225257046474905578227", "mpmath log(3), 50 digits"},
      {"glaisher", "1.282427129100622636875342568869791727767688927325", "mpmath glaisher, 49 digits"},
      {"zeta_prime_2", "-0.93754825431584375370257409456786497789786028861483",
       "mpmath zeta'(2), 50 digits"},
      {"zeta_prime_8", "-0.0029019525537106731304001066562187563905163013661661",
       "mpmath zeta'(8), 50 digits"},
      {"zeta_prime_minus1", "-0.1654211437004509292139196602427806427640363803352",
       "1/12 - ln(glaisher), 50 digits"},
  };
  return catalog;
}

const ReferenceConstant& reference(std::string_view name) {
  for (const auto& c : reference_catalog())
    if (c.name == name) return c;
  fail(ErrorKind::not_found, "no reference constant named '" + std::string(name) + "'");
}

}  // namespace oddzeta::oracle
