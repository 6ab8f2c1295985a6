#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

/// How many series terms to keep, with a certified bound on what is dropped.
///
/// For n = 1, abs_bound bounds the omitted tail of sum C_l (zeta(2l) - 1).
/// For n > 1 it bounds the omitted tail of sum (zeta(2l) - 1) / (4^l prod_{r=0}^{2n+1} (2l + r)),
/// the series inside the last term of the odd-zeta formula. value_bound is
/// the resulting error in zeta(2n+1) itself.
struct TruncationPlan {
  long m = 0;
  ExactRational abs_bound;
  ExactRational value_bound;
  int target_digits = 0;
  long n = 1;
};

/// A rational strictly above pi (355/113), used to keep bounds exact.
ExactRational pi_upper_bound();

/// Certified bound on sum_{l > m} C_l (zeta(2l) - 1):
/// (1 + 2/(2m+1)) [ sum_{l=m+1}^{n_cut} 1/(2^{4l+6} l^4) + geometric remainder ].
ExactRational abs_error_bound(long m, long n_cut);

/// The bare sum sum_{l=m+1}^{n_cut} 1/(2^{4l+6} l^4), without the prefactor
/// or remainder. This is the quantity the classic error table lists.
ExactRational truncated_error_sum(long m, long n_cut);

/// Relative error in the tabulated convention: truncated_error_sum(m, n_cut)
/// divided by the full series value (40 terms).
Real rel_error_bound(const PrecisionContext& ctx, long m, long n_cut);

/// The error table's RE: truncated_error_sum rounded to the two significant
/// digits it is listed with, over the full series value.
Real tabulated_rel_error(const PrecisionContext& ctx, long m, long n_cut);

/// sum_{l=1}^{40} C_l (zeta(2l) - 1); about 3.3746e-4.
Real full_series_value(const PrecisionContext& ctx);

/// Ratio of successive terms C_l Z(2l) / (C_{l+1} Z(2l+2)).
Real conv_ratio(const PrecisionContext& ctx, long l);

/// 4 Z(2l) (l+n+1)(2l+2n+3) / (Z(2l+2) l (2l+1)); equals conv_ratio for n = 1.
Real conv_ratio_general(const PrecisionContext& ctx, long n, long l);

/// Certified bound on the omitted tail (l > m) of the odd-zeta series for
/// level n, using zeta(2l) - 1 <= F(l).
ExactRational odd_series_tail_bound(long n, long m);

/// Bounds for a given term count, without searching.
TruncationPlan plan_for_terms(long n, long m);

/// Smallest m whose certified error in zeta(2n+1) is <= 10^{-target_digits}.
TruncationPlan plan_terms(const PrecisionContext& ctx, int target_digits, long n);

enum class TableId { table1, table2, table3, table5 };

TableId parse_table_id(std::string_view name);
std::string_view to_string(TableId id);

struct CellCheck {
  std::size_t row = 0;
  std::size_t column = 0;
  std::string expected;
  std::string actual;
  std::string status;  // "match", "match (truncated)", "discrepant"
};

struct ReportTable {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<CellCheck> checks;
  std::vector<std::string> notes;

  std::size_t discrepancies() const;
};

/// Recomputes one of the classic tables and checks every numeric cell
/// against the tabulated entry.
ReportTable table_report(const PrecisionContext& ctx, TableId which);

}  // namespace oddzeta
