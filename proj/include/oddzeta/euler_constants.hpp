#pragma once

#include <vector>

#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

/// Exact Bernoulli number B_n with B_1 = -1/2. Backed by a process-wide
/// memo table that only ever grows; safe to call from several threads.
ExactRational bernoulli(unsigned n);

/// B_0 .. B_{n_max}.
std::vector<ExactRational> bernoulli_table(unsigned n_max);

/// zeta(-n) = (-1)^n B_{n+1} / (n+1). Zero for even n >= 2.
ExactRational zeta_neg_int(unsigned n);

/// zeta(2m) = |B_{2m}| (2 pi)^{2m} / (2 (2m)!), m >= 1.
Real zeta_even(const PrecisionContext& ctx, long m);

/// zeta(2l) - 1, l >= 1. The subtraction is carried out with enough extra
/// digits that the result has full relative precision for any l.
Real z_even(const PrecisionContext& ctx, long l);

/// Upper bound for zeta(2l) - 1: 4^{-l} (1 + 2/(2l - 1)).
ExactRational z_bound_F(long l);

/// zeta(1 - 2n) = (-1)^n (2n-1)! zeta(2n) 2 / (2 pi)^{2n}, n >= 1.
Real zeta_neg_odd(const PrecisionContext& ctx, long n);

}  // namespace oddzeta
