#pragma once

#include <gmpxx.h>

#include <vector>

namespace scorpion {

/// Exact arbitrary-precision integer. Counts can exceed 2^64 already for
/// moderate inputs, and alternating sums may be negative.
using BigCount = mpz_class;

/// BigCount from a 64-bit integer (gmpxx has no long long overloads).
BigCount to_bigcount(long long value);

/// Exact binomial coefficient. Returns 0 when k < 0 or k > n.
/// Throws parameter_error when n < 0.
BigCount binomial(long long n, long long k);

/// Column of binomial coefficients: result[x] = binomial(x, r) for
/// x = 0..n. Handy when one r is probed for many set sizes.
std::vector<BigCount> binomial_column(long long n, long long r);

}  // namespace scorpion
