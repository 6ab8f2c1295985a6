#pragma once

#include <mpfr.h>

#include <memory>
#include <string>
#include <string_view>

#include "oddzeta/error.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

class Real;

namespace detail {
struct ContextState;
}

enum class Constant { pi, euler_gamma, ln2, ln3 };

Constant parse_constant(std::string_view name);
std::string_view to_string(Constant c);

/// Working precision for a computation: the number of decimal digits the
/// caller wants in final results, plus guard digits that absorb cancellation.
/// A context is immutable; its constant cache fills lazily, once.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 10;
  static constexpr int kMinGuard = 10;

  static int default_guard(int digits);

  int digits() const;
  int guard_digits() const;
  /// digits + guard_digits.
  int working_digits() const;
  mpfr_prec_t bits() const;

  /// Same digits, guard increased by extra. Used where a formula is known to
  /// lose a predictable number of digits.
  PrecisionContext widened(int extra_guard) const;

  /// Rounds a value from any context into this one.
  Real convert(const Real& x) const;

  /// Two contexts are interchangeable iff digits and guard agree.
  bool compatible(const PrecisionContext& other) const;

  Real constant(Constant c) const;

 private:
  friend PrecisionContext make_context(int, int);
  friend class Real;
  explicit PrecisionContext(std::shared_ptr<const detail::ContextState> s)
      : state_(std::move(s)) {}

  std::shared_ptr<const detail::ContextState> state_;
};

PrecisionContext make_context(int digits);
PrecisionContext make_context(int digits, int guard_digits);

/// Arbitrary-precision real bound to a PrecisionContext. Binary operations
/// between values of incompatible contexts throw context_mismatch.
class Real {
 public:
  explicit Real(const PrecisionContext& ctx);  // zero
  Real(const PrecisionContext& ctx, long v);
  Real(const PrecisionContext& ctx, int v) : Real(ctx, static_cast<long>(v)) {}
  Real(const PrecisionContext& ctx, double v);
  Real(const PrecisionContext& ctx, const ExactRational& q);
  /// Parses a decimal string, rounding to nearest.
  Real(const PrecisionContext& ctx, std::string_view decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  PrecisionContext context() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(const ExactRational& q);
  Real& operator-=(const ExactRational& q);
  Real& operator*=(const ExactRational& q);
  Real& operator/=(const ExactRational& q);
  Real& operator+=(long v);
  Real& operator-=(long v);
  Real& operator*=(long v);
  Real& operator/=(long v);

  Real operator-() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  double to_double() const;

  /// Fixed notation with exactly `decimals` digits after the point,
  /// rounded to nearest.
  std::string to_fixed(int decimals) const;
  /// Scientific notation with `significant` digits, rounded to nearest.
  std::string to_scientific(int significant) const;

  /// Exact rational value of the stored binary number.
  ExactRational to_rational() const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  void check_same(const Real& o) const;

  std::shared_ptr<const detail::ContextState> state_;
  mpfr_t value_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
Real operator+(Real a, const ExactRational& b);
Real operator-(Real a, const ExactRational& b);
Real operator*(Real a, const ExactRational& b);
Real operator/(Real a, const ExactRational& b);
Real operator*(const ExactRational& a, Real b);
Real operator+(Real a, long b);
Real operator-(Real a, long b);
Real operator*(Real a, long b);
Real operator/(Real a, long b);
Real operator*(long a, Real b);

int compare(const Real& a, const Real& b);
int compare(const Real& a, long b);
inline bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
inline bool operator<(const Real& a, long b) { return compare(a, b) < 0; }
inline bool operator>(const Real& a, long b) { return compare(a, b) > 0; }

Real abs(Real x);
Real sqrt(Real x);
Real log(Real x);
/// ln(1 + x).
Real log1p(Real x);
Real exp(Real x);
Real pow(Real x, long e);
Real pow(Real x, const Real& e);

Real fundamental_constant(const PrecisionContext& ctx, Constant c);
Real fundamental_constant(const PrecisionContext& ctx, std::string_view name);

/// ln(pi), ln(2 pi) and ln(3/2), composed from the cached fundamentals.
Real ln_pi(const PrecisionContext& ctx);
Real ln_two_pi(const PrecisionContext& ctx);
Real ln_three_halves(const PrecisionContext& ctx);

Real to_real(const PrecisionContext& ctx, const ExactRational& q);

/// x rounded to `decimals` places after the point (nearest), kept as Real.
Real round_to_decimals(const Real& x, int decimals);

}  // namespace oddzeta
