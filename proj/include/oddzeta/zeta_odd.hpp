#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"
#include "oddzeta/truncation.hpp"

namespace oddzeta {

/// A(n, k) = sum_{r=0}^{2k-1} 1/(2n - r), for 1 <= k <= n.
ExactRational harmonic_A(long n, long k);

/// The four pieces of zeta'(-2n) = t0 - t1 - t2 - t3.
struct TermBreakdown {
  Real t0;
  Real t1;
  Real t2;
  Real t3;
  long n = 0;
  long m = 0;  // series terms kept in t3

  Real bracket() const { return t0 - t1 - t2 - t3; }
};

/// zeta(3), zeta(5), ... built bottom-up. Level k holds zeta(2k+1) and the
/// derived zeta'(-2k); levels computed here also keep their term breakdown,
/// truncation plan and an error bound for zeta(2k+1).
class OddZetaLadder {
 public:
  struct Level {
    Real odd_value;       // zeta(2k+1)
    Real deriv_neg_even;  // zeta'(-2k)
    std::optional<TermBreakdown> terms;
    std::optional<TruncationPlan> plan;
    ExactRational error_bound;  // on odd_value
  };

  explicit OddZetaLadder(PrecisionContext ctx) : ctx_(std::move(ctx)) {}

  /// A ladder seeded with known values zeta(3), zeta(5), ..., each assumed
  /// exact up to `error`.
  static OddZetaLadder from_values(const PrecisionContext& ctx, const std::vector<Real>& odd_values,
                                   const ExactRational& error = 0);

  const PrecisionContext& context() const { return ctx_; }
  long levels() const { return static_cast<long>(levels_.size()); }

  /// 1-based level access; missing_dependency when absent.
  const Level& level(long k) const;
  const Real& odd_value(long k) const { return level(k).odd_value; }
  const Real& deriv_neg_even(long k) const { return level(k).deriv_neg_even; }

  /// Appends level levels()+1. deriv_neg_even is derived from odd_value.
  void push(Real odd_value, std::optional<TermBreakdown> terms = std::nullopt,
            std::optional<TruncationPlan> plan = std::nullopt, ExactRational error_bound = 0);

 private:
  PrecisionContext ctx_;
  std::vector<Level> levels_;
};

/// zeta'(-2l) = (2l)! (-1)^l zeta(2l+1) / (2 (2 pi)^{2l}), with zeta(2l+1)
/// taken from the ladder.
Real zeta_deriv_neg_even(const OddZetaLadder& ladder, long l);

/// Same relation for a free-standing value of zeta(2l+1).
Real zeta_deriv_neg_even(const Real& odd_value, long l);

/// Evaluates t0..t3 for level n in ctx, keeping m terms of the t3 series.
/// Needs ladder levels 1..n-1.
TermBreakdown term_breakdown(const PrecisionContext& ctx, long n, const OddZetaLadder& ladder, long m);

/// zeta(2n+1) = (-1)^n pi^{2n} 2^{2n+1} (t0 - t1 - t2 - t3) / (2n)!.
Real odd_zeta_from_terms(const PrecisionContext& ctx, const TermBreakdown& terms);
Real odd_zeta_from_bracket(const Real& bracket, long n);

/// Ladder up to level n, every level keeping m series terms. Runs in ctx
/// widened by ceil(2.2 n) guard digits; the returned ladder lives in that
/// wider context.
OddZetaLadder zeta_odd(const PrecisionContext& ctx, long n, long m);

/// Ladder up to level n where each level's term count comes from
/// plan_terms, so that zeta(2n+1) carries an error bound <= 10^{-ctx.digits()}.
OddZetaLadder zeta_odd(const PrecisionContext& ctx, long n);

/// Extra guard digits used for level n.
int ladder_extra_guard(long n);

/// psi(m) = -gamma + H_{m-1}.
Real digamma_int(const PrecisionContext& ctx, long m);

/// zeta'(2n) = -sum_{k>=2} ln k / k^{2n}, summed directly with an
/// Euler-Maclaurin tail.
Real zeta_deriv_even(const PrecisionContext& ctx, long n);

/// zeta'(2n) + zeta(2n) (psi(2n) - ln 2 pi). Its sign times (-1)^{n+1} is the
/// sign of zeta'(1-2n).
Real deriv_bracket(const PrecisionContext& ctx, long n);

/// zeta'(1-2n) = 2 (-1)^{n+1} (2n-1)! / (2 pi)^{2n} * deriv_bracket(n).
Real zeta_deriv_neg_odd(const PrecisionContext& ctx, long n);

enum class Sign { negative, zero, positive };

std::string_view to_string(Sign s);
char sign_symbol(Sign s);
Sign sign_of(const Real& x);

/// Entry n-1 is the sign of zeta'(1-2n), n = 1..n_max.
std::vector<Sign> deriv_sign_classification(const PrecisionContext& ctx, long n_max);

/// Entry n-1 is the sign of deriv_bracket(n), n = 1..n_max.
std::vector<Sign> bracket_sign_classification(const PrecisionContext& ctx, long n_max);

}  // namespace oddzeta
