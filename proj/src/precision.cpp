#include "oddzeta/precision.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

namespace oddzeta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_precision: return "invalid-precision";
    case ErrorKind::unsupported_constant: return "unsupported-constant";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::context_mismatch: return "context-mismatch";
    case ErrorKind::precision_mismatch: return "precision-mismatch";
    case ErrorKind::missing_dependency: return "missing-dependency";
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::truncation_insufficient: return "truncation-insufficient";
    case ErrorKind::not_found: return "not-found";
  }
  return "unknown";
}

namespace detail {

struct ContextState {
  int digits = 0;
  int guard = 0;
  mpfr_prec_t bits = 0;

  // Write-once caches, one per Constant.
  mutable std::array<std::once_flag, 4> once;
  mutable std::array<mpfr_t, 4> cache;

  ContextState(int d, int g) : digits(d), guard(g) {
    // ceil((d + g) * log2(10)) plus a few spare bits for the final digit.
    bits = static_cast<mpfr_prec_t>(std::ceil((d + g) * 3.321928094887362)) + 16;
    for (auto& c : cache) mpfr_init2(c, bits);
  }
  ~ContextState() {
    for (auto& c : cache) mpfr_clear(c);
  }
  ContextState(const ContextState&) = delete;
  ContextState& operator=(const ContextState&) = delete;

  mpfr_srcptr get(Constant c) const {
    const auto i = static_cast<std::size_t>(c);
    std::call_once(once[i], [&] {
      switch (c) {
        case Constant::pi: mpfr_const_pi(cache[i], MPFR_RNDN); break;
        case Constant::euler_gamma: mpfr_const_euler(cache[i], MPFR_RNDN); break;
        case Constant::ln2: mpfr_const_log2(cache[i], MPFR_RNDN); break;
        case Constant::ln3:
          mpfr_set_ui(cache[i], 3, MPFR_RNDN);
          mpfr_log(cache[i], cache[i], MPFR_RNDN);
          break;
      }
    });
    return cache[i];
  }
};

}  // namespace detail

Constant parse_constant(std::string_view name) {
  if (name == "pi") return Constant::pi;
  if (name == "euler_gamma") return Constant::euler_gamma;
  if (name == "ln2") return Constant::ln2;
  if (name == "ln3") return Constant::ln3;
  fail(ErrorKind::unsupported_constant, "unsupported constant '" + std::string(name) + "'");
}

std::string_view to_string(Constant c) {
  switch (c) {
    case Constant::pi: return "pi";
    case Constant::euler_gamma: return "euler_gamma";
    case Constant::ln2: return "ln2";
    case Constant::ln3: return "ln3";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// PrecisionContext

int PrecisionContext::default_guard(int digits) {
  return std::max(kMinGuard, (digits + 3) / 4);
}

PrecisionContext make_context(int digits) {
  return make_context(digits, PrecisionContext::default_guard(digits));
}

PrecisionContext make_context(int digits, int guard_digits) {
  if (digits < PrecisionContext::kMinDigits)
    fail(ErrorKind::invalid_precision,
         "digits must be at least 10, got " + std::to_string(digits));
  if (guard_digits < PrecisionContext::kMinGuard)
    fail(ErrorKind::invalid_precision,
         "guard digits must be at least 10, got " + std::to_string(guard_digits));
  return PrecisionContext(std::make_shared<const detail::ContextState>(digits, guard_digits));
}

int PrecisionContext::digits() const { return state_->digits; }
int PrecisionContext::guard_digits() const { return state_->guard; }
int PrecisionContext::working_digits() const { return state_->digits + state_->guard; }
mpfr_prec_t PrecisionContext::bits() const { return state_->bits; }

PrecisionContext PrecisionContext::widened(int extra_guard) const {
  if (extra_guard <= 0) return *this;
  return make_context(digits(), guard_digits() + extra_guard);
}

bool PrecisionContext::compatible(const PrecisionContext& other) const {
  return state_ == other.state_ ||
         (state_->digits == other.state_->digits && state_->guard == other.state_->guard);
}

Real PrecisionContext::convert(const Real& x) const {
  Real r(*this);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real PrecisionContext::constant(Constant c) const {
  Real r(*this);
  mpfr_set(r.raw(), state_->get(c), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// Real

Real::Real(const PrecisionContext& ctx) : state_(ctx.state_) {
  mpfr_init2(value_, state_->bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(const PrecisionContext& ctx, long v) : Real(ctx) {
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(const PrecisionContext& ctx, double v) : Real(ctx) {
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(const PrecisionContext& ctx, const ExactRational& q) : Real(ctx) {
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const PrecisionContext& ctx, std::string_view decimal) : Real(ctx) {
  const std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0)
    fail(ErrorKind::invalid_argument, "not a decimal number: '" + s + "'");
}

Real::Real(const Real& other) : state_(other.state_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : state_(other.state_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    state_ = other.state_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    state_ = other.state_;
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

PrecisionContext Real::context() const { return PrecisionContext(state_); }

void Real::check_same(const Real& o) const {
  if (state_ == o.state_) return;
  if (state_->digits != o.state_->digits || state_->guard != o.state_->guard)
    fail(ErrorKind::context_mismatch,
         "arithmetic between values of different precision contexts (" +
             std::to_string(state_->digits) + "+" + std::to_string(state_->guard) + " vs " +
             std::to_string(o.state_->digits) + "+" + std::to_string(o.state_->guard) + ")");
}

Real& Real::operator+=(const Real& o) {
  check_same(o);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  check_same(o);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  check_same(o);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  check_same(o);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(const ExactRational& q) {
  mpfr_add_q(value_, value_, q.get_mpq_t(), MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const ExactRational& q) {
  mpfr_sub_q(value_, value_, q.get_mpq_t(), MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const ExactRational& q) {
  mpfr_mul_q(value_, value_, q.get_mpq_t(), MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const ExactRational& q) {
  mpfr_div_q(value_, value_, q.get_mpq_t(), MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long v) {
  mpfr_add_si(value_, value_, v, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long v) {
  mpfr_sub_si(value_, value_, v, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long v) {
  mpfr_mul_si(value_, value_, v, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long v) {
  mpfr_div_si(value_, value_, v, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

int Real::sign() const { return mpfr_sgn(value_); }

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

namespace {

std::string format_mpfr(const char* fmt, int digits, mpfr_srcptr x) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt, digits, x) < 0) return "nan";
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

std::string Real::to_fixed(int decimals) const {
  std::string s = format_mpfr("%.*RNf", decimals, value_);
  // "-0.000" is an artifact of rounding a tiny negative value.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string Real::to_scientific(int significant) const {
  return format_mpfr("%.*RNe", std::max(0, significant - 1), value_);
}

ExactRational Real::to_rational() const {
  ExactRational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
Real operator+(Real a, const ExactRational& b) { return a += b; }
Real operator-(Real a, const ExactRational& b) { return a -= b; }
Real operator*(Real a, const ExactRational& b) { return a *= b; }
Real operator/(Real a, const ExactRational& b) { return a /= b; }
Real operator*(const ExactRational& a, Real b) { return b *= a; }
Real operator+(Real a, long b) { return a += b; }
Real operator-(Real a, long b) { return a -= b; }
Real operator*(Real a, long b) { return a *= b; }
Real operator/(Real a, long b) { return a /= b; }
Real operator*(long a, Real b) { return b *= a; }

int compare(const Real& a, const Real& b) {
  if (!a.context().compatible(b.context()))
    fail(ErrorKind::context_mismatch, "comparison between values of different precision contexts");
  return mpfr_cmp(a.raw(), b.raw());
}

int compare(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b); }

Real abs(Real x) {
  mpfr_abs(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}
Real sqrt(Real x) {
  mpfr_sqrt(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}
Real log(Real x) {
  if (x.sign() <= 0) fail(ErrorKind::domain, "logarithm of a non-positive value");
  mpfr_log(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}
Real log1p(Real x) {
  if (mpfr_cmp_si(x.raw(), -1) <= 0) fail(ErrorKind::domain, "log1p argument <= -1");
  mpfr_log1p(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}
Real exp(Real x) {
  mpfr_exp(x.raw(), x.raw(), MPFR_RNDN);
  return x;
}
Real pow(Real x, long e) {
  mpfr_pow_si(x.raw(), x.raw(), e, MPFR_RNDN);
  return x;
}
Real pow(Real x, const Real& e) {
  Real r(x.context());
  mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
  return r;
}

Real fundamental_constant(const PrecisionContext& ctx, Constant c) { return ctx.constant(c); }

Real fundamental_constant(const PrecisionContext& ctx, std::string_view name) {
  return ctx.constant(parse_constant(name));
}

Real ln_pi(const PrecisionContext& ctx) { return log(ctx.constant(Constant::pi)); }

Real ln_two_pi(const PrecisionContext& ctx) { return ctx.constant(Constant::ln2) + ln_pi(ctx); }

Real ln_three_halves(const PrecisionContext& ctx) {
  return ctx.constant(Constant::ln3) - ctx.constant(Constant::ln2);
}

Real to_real(const PrecisionContext& ctx, const ExactRational& q) { return Real(ctx, q); }

Real round_to_decimals(const Real& x, int decimals) {
  const auto ctx = x.context();
  return Real(ctx, std::string_view(x.to_fixed(decimals)));
}

}  // namespace oddzeta
