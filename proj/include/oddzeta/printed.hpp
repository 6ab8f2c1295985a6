#pragma once

#include <string>
#include <string_view>

#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

/// A number as it appears in a printed table: "0.645", "-0.01488677114",
/// "219", "8.2E(-2)", "10E(-7)" or "7.4E-9". The last printed digit fixes the
/// resolution `unit` = 10^(exponent - decimals).
struct PrintedNumber {
  std::string text;
  ExactRational value;
  int exponent = 0;  // power of ten after the mantissa
  int decimals = 0;  // digits after the mantissa's decimal point

  ExactRational unit() const;
  int significant_digits() const;
};

PrintedNumber parse_printed(std::string_view text);

enum class PrintedMatch { rounded, truncated, mismatch };

/// Hand-computed tables round some entries and truncate others. A value
/// matches a printed entry when rounding it to the entry's last digit, or
/// cutting it off there, reproduces the entry.
PrintedMatch match_printed(const Real& value, const PrintedNumber& printed);
PrintedMatch match_printed(const Real& value, std::string_view printed);

inline bool matches(PrintedMatch m) { return m != PrintedMatch::mismatch; }
std::string_view to_string(PrintedMatch m);

/// `value` rendered in the layout of `printed` (same exponent and number of
/// decimals), rounded to nearest.
std::string format_like(const Real& value, const PrintedNumber& printed);

/// Normalized scientific form "d.ddE(e)" with the given significant digits.
std::string format_scientific(const Real& value, int significant);

}  // namespace oddzeta
