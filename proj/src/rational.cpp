#include "oddzeta/rational.hpp"

#include <mpfr.h>

#include "oddzeta/error.hpp"

namespace oddzeta {

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::invalid_argument, "rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ExactRational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? ExactRational(BigInt(1), p) : ExactRational(p);
}

ExactRational pow(const ExactRational& base, unsigned long e) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  return ExactRational(n, d);  // already coprime
}

std::string to_string(const ExactRational& q) { return q.get_str(); }

std::string to_scientific(const ExactRational& q, int significant) {
  mpfr_t x;
  // Enough bits to round the rational correctly at `significant` digits.
  mpfr_init2(x, static_cast<mpfr_prec_t>(significant * 4 + 64));
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNe", significant > 0 ? significant - 1 : 0, x);
  std::string s(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return s;
}

}  // namespace oddzeta
