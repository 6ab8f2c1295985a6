#include "oddzeta/printed.hpp"

#include <cctype>
#include <cstdlib>

#include "oddzeta/error.hpp"

namespace oddzeta {

namespace {

ExactRational pow10(int e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? ExactRational(BigInt(1), p) : ExactRational(p);
}

BigInt to_integer(const Real& x, bool truncate) {
  Real r(x.context());
  if (truncate)
    mpfr_trunc(r.raw(), x.raw());
  else
    mpfr_round(r.raw(), x.raw());  // halves away from zero
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDN);
  return z;
}

}  // namespace

ExactRational PrintedNumber::unit() const { return pow10(exponent - decimals); }

int PrintedNumber::significant_digits() const {
  int count = 0;
  bool leading = true;
  const auto mantissa = text.substr(0, text.find_first_of("Ee"));
  for (char c : mantissa) {
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count == 0 ? 1 : count;
}

PrintedNumber parse_printed(std::string_view text) {
  PrintedNumber out;
  out.text = std::string(text);
  std::string mantissa(text);
  const auto e = mantissa.find_first_of("Ee");
  if (e != std::string::npos) {
    std::string exp_part = mantissa.substr(e + 1);
    mantissa.resize(e);
    std::string cleaned;
    for (char c : exp_part)
      if (c != '(' && c != ')') cleaned.push_back(c);
    char* end = nullptr;
    out.exponent = static_cast<int>(std::strtol(cleaned.c_str(), &end, 10));
    if (cleaned.empty() || *end != '\0')
      fail(ErrorKind::invalid_argument, "bad exponent in '" + out.text + "'");
  }
  const auto dot = mantissa.find('.');
  out.decimals = dot == std::string::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);

  std::string digits;
  for (char c : mantissa)
    if (c != '.') digits.push_back(c);
  BigInt scaled;
  if (digits.empty() || scaled.set_str(digits, 10) != 0)
    fail(ErrorKind::invalid_argument, "not a printed number: '" + out.text + "'");
  out.value = ExactRational(scaled) * pow10(out.exponent - out.decimals);
  out.value.canonicalize();
  return out;
}

PrintedMatch match_printed(const Real& value, const PrintedNumber& printed) {
  const ExactRational target = printed.value / printed.unit();
  const BigInt want = target.get_num();  // integral by construction
  const Real scaled = value / printed.unit();
  if (to_integer(scaled, false) == want) return PrintedMatch::rounded;
  if (to_integer(scaled, true) == want) return PrintedMatch::truncated;
  return PrintedMatch::mismatch;
}

PrintedMatch match_printed(const Real& value, std::string_view printed) {
  return match_printed(value, parse_printed(printed));
}

std::string_view to_string(PrintedMatch m) {
  switch (m) {
    case PrintedMatch::rounded: return "match";
    case PrintedMatch::truncated: return "match (truncated)";
    case PrintedMatch::mismatch: return "discrepant";
  }
  return "?";
}

std::string format_like(const Real& value, const PrintedNumber& printed) {
  const Real mantissa = value / pow10(printed.exponent);
  std::string s = mantissa.to_fixed(printed.decimals);
  const auto e = printed.text.find_first_of("Ee");
  if (e != std::string::npos) {
    const bool paren = printed.text.find('(') != std::string::npos;
    s += "E";
    s += paren ? "(" + std::to_string(printed.exponent) + ")" : std::to_string(printed.exponent);
  }
  return s;
}

std::string format_scientific(const Real& value, int significant) {
  std::string s = value.to_scientific(significant);  // d.ddde-07
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  const int exponent = std::atoi(s.c_str() + e + 1);
  return s.substr(0, e) + "E(" + std::to_string(exponent) + ")";
}

}  // namespace oddzeta
