#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

// Independent reference computations. Nothing in here calls the series,
// closed forms or Bernoulli table of the main library.
namespace oddzeta::oracle {

struct Estimate {
  Real value;
  Real error;  // bound on |value - true value|
};

/// B_n by the Akiyama-Tanigawa algorithm (B_1 = +1/2 in that convention;
/// only even n are used here).
ExactRational bernoulli_at(unsigned n);

/// Direct summation of k^{-s} below the cutoff plus an Euler-Maclaurin tail
/// (integral, half end term, derivative corrections). cutoff = 0 picks one
/// from the context's working digits.
Estimate dirichlet_zeta_estimate(const PrecisionContext& ctx, const Real& s, long cutoff = 0);
Real dirichlet_zeta(const PrecisionContext& ctx, const Real& s);
Real dirichlet_zeta(const PrecisionContext& ctx, double s);

/// zeta(s) - 1 summed from k = 2, so that it keeps full relative precision
/// when s is large.
Estimate dirichlet_zeta_minus_one_estimate(const PrecisionContext& ctx, const Real& s, long cutoff = 0);
Real dirichlet_zeta_minus_one(const PrecisionContext& ctx, const Real& s);

/// -sum ln k / k^s, same scheme.
Estimate dirichlet_zeta_deriv_estimate(const PrecisionContext& ctx, const Real& s, long cutoff = 0);
Real dirichlet_zeta_deriv(const PrecisionContext& ctx, const Real& s);
Real dirichlet_zeta_deriv(const PrecisionContext& ctx, double s);

/// zeta(s) = 1 + (2/3)^{s-1}/(s-1)
///           - sum_{k=1}^{k_max} prod_{r=0}^{2k-1}(s+r) (zeta(s+2k) - 1) / ((2k+1)! 4^k).
/// For s a non-positive integer the sum stops by itself and the result is
/// exact. Where s + 2k <= 1 the needed zeta(s+2k) comes from this same
/// formula applied recursively.
Real zeta_eq1(const PrecisionContext& ctx, double s, long k_max);

/// Exact value of the finite form at s = -j, j >= 0.
ExactRational zeta_eq1_exact(long j);

/// zeta'(-1) = 1/12 - ln A with A the Glaisher-Kinkelin constant.
Real zeta_deriv_minus_one(const PrecisionContext& ctx);

struct ReferenceConstant {
  std::string name;
  std::string value;
  std::string source;
};

/// Stored high-precision values; not_found for unknown names.
const ReferenceConstant& reference(std::string_view name);
const std::vector<ReferenceConstant>& reference_catalog();

}  // namespace oddzeta::oracle
