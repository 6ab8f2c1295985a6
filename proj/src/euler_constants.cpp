#include "oddzeta/euler_constants.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <string>

namespace oddzeta {

namespace {

class BernoulliTable {
 public:
  static BernoulliTable& instance() {
    static BernoulliTable table;
    return table;
  }

  ExactRational get(unsigned n) {
    if (n >= 3 && n % 2 == 1) return ExactRational(0);
    std::lock_guard lock(mutex_);
    while (entries_.size() <= n) extend();
    return entries_[n];
  }

 private:
  BernoulliTable() {
    entries_.emplace_back(1);
    entries_.push_back(make_rational(-1, 2));
  }

  // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m. Odd j >= 3 vanish and
  // are skipped.
  void extend() {
    const unsigned m = static_cast<unsigned>(entries_.size());
    if (m % 2 == 1) {
      entries_.emplace_back(0);
      return;
    }
    ExactRational acc = entries_[0] + ExactRational(m + 1) * entries_[1];
    for (unsigned j = 2; j < m; j += 2) {
      acc += ExactRational(binomial(m + 1, j)) * entries_[j];
    }
    entries_.push_back(-acc / (m + 1));
  }

  std::mutex mutex_;
  std::deque<ExactRational> entries_;
};

ExactRational inverse_factorial(unsigned long n) { return ExactRational(BigInt(1), factorial(n)); }

}  // namespace

ExactRational bernoulli(unsigned n) { return BernoulliTable::instance().get(n); }

std::vector<ExactRational> bernoulli_table(unsigned n_max) {
  std::vector<ExactRational> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(bernoulli(n));
  return out;
}

ExactRational zeta_neg_int(unsigned n) {
  ExactRational b = bernoulli(n + 1) / (n + 1);
  return n % 2 == 0 ? b : ExactRational(-b);
}

Real zeta_even(const PrecisionContext& ctx, long m) {
  require_argument(m >= 1, "zeta_even requires m >= 1, got " + std::to_string(m));
  const unsigned two_m = static_cast<unsigned>(2 * m);
  const ExactRational coeff = abs(bernoulli(two_m)) * inverse_factorial(two_m) / 2;
  Real two_pi = ctx.constant(Constant::pi) * 2L;
  return pow(std::move(two_pi), 2 * m) * coeff;
}

Real z_even(const PrecisionContext& ctx, long l) {
  require_argument(l >= 1, "z_even requires l >= 1, got " + std::to_string(l));
  // zeta(2l) - 1 ~ 4^{-l}: the subtraction cancels about 2l log10(2) digits.
  const int lost = static_cast<int>(std::ceil(2.0 * static_cast<double>(l) * 0.30103)) + 2;
  const PrecisionContext wide = ctx.widened(lost);
  Real z = zeta_even(wide, l) - 1L;
  return ctx.convert(z);
}

ExactRational z_bound_F(long l) {
  require_argument(l >= 1, "z_bound_F requires l >= 1, got " + std::to_string(l));
  return pow2(-2 * l) * (ExactRational(1) + make_rational(2, 2 * l - 1));
}

Real zeta_neg_odd(const PrecisionContext& ctx, long n) {
  require_argument(n >= 1, "zeta_neg_odd requires n >= 1, got " + std::to_string(n));
  Real two_pi = ctx.constant(Constant::pi) * 2L;
  Real v = zeta_even(ctx, n) * ExactRational(factorial(static_cast<unsigned long>(2 * n - 1)) * 2);
  v /= pow(std::move(two_pi), 2 * n);
  return n % 2 == 0 ? v : -v;
}

}  // namespace oddzeta
