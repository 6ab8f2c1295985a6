#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

struct TruncationPlan;

/// C_l = 1 / (16 * 4^l * l (l+1) (2l+1) (2l+3)), the weight of zeta(2l) - 1
/// in the zeta(3) series.
ExactRational coeff_C(long l);

/// The same coefficient assembled from its four partial fractions
/// 1/(3l) - 2/(2l+1) + 1/(l+1) - 2/(3(2l+3)).
ExactRational coeff_C_partial_fractions(long l);

/// sum_{l=1}^{m} C_l (zeta(2l) - 1).
Real series_sum(const PrecisionContext& ctx, long m);

/// (1/16) [ln(2 pi)/3 + 9 ln(3/2) - 9/2].
Real const_A(const PrecisionContext& ctx);

/// The finite limit of Gamma(s) zeta(s) at s = -2, with the series cut at m.
Real phi_minus2(const PrecisionContext& ctx, long m);

/// zeta(3) = -8 pi^2 phi(-2), using plan.m series terms. The certified error
/// is at most 8 pi^2 plan.abs_bound.
Real zeta3(const PrecisionContext& ctx, const TruncationPlan& plan);
Real zeta3(const PrecisionContext& ctx, long m);

/// The zeta(3) evaluation redone the way a hand calculation at fixed
/// decimal accuracy would: A and each series term are rounded to `decimals`
/// places before being combined.
struct FixedDecimalZeta3 {
  Real a;
  std::vector<Real> terms;  // C_l Z(2l), l = 1..m, each rounded
  Real b;                   // -(sum of rounded terms)
  Real a_plus_b;
  Real zeta3;
};
FixedDecimalZeta3 zeta3_fixed_decimals(const PrecisionContext& ctx, long m, int decimals);

/// Four partial-fraction pieces of the series. sa and sb are closed
/// logarithmic forms (complete infinite sums); sc and sd are direct sums over
/// l = 1..m.
struct ReducedParts {
  Real sa;
  Real sb;
  Real sc;
  Real sd;

  Real sum() const { return sa + sb + sc + sd; }
};
ReducedParts reduced_parts(const PrecisionContext& ctx, long m);

/// Certified bound on |omitted tail of sc| + |omitted tail of sd| after m terms.
ExactRational reduced_tail_bound(long m);

/// Slowly converging infinite-product forms of sc and sd, summed as
/// logarithms over n = 2..n_max. Returns (sc_product, sd_product).
std::pair<Real, Real> slow_products(const PrecisionContext& ctx, long n_max);

/// Smallest m for which 8 pi^2 reduced_tail_bound(m) <= 10^{-digits}.
long reduced_terms_for(int digits);

/// zeta(3) = -8 pi^2 (5/12 ln 3 - 13/24 ln 2 - 3/32 - sc - sd).
Real zeta3_reduced(const PrecisionContext& ctx, long m);

enum class LogIdentity {
  /// sum zeta(2l) / ((2l+1) 4^l) = (1 - ln 2)/2
  odd_denominator,
  /// sum zeta(2l) / (l 4^l) = ln(pi/2)
  index_denominator,
};

LogIdentity parse_log_identity(std::string_view name);

/// (truncated left side over l = 1..m, closed-form right side).
std::pair<Real, Real> log_identity(const PrecisionContext& ctx, LogIdentity which, long m);

}  // namespace oddzeta
