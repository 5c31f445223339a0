#include "scorpion/bigcount.hpp"

#include "scorpion/errors.hpp"

namespace scorpion {

BigCount to_bigcount(long long value) {
  static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
  BigCount result;
  mpz_set_si(result.get_mpz_t(), static_cast<long>(value));
  return result;
}

BigCount binomial(long long n, long long k) {
  if (n < 0) throw parameter_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigCount result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

std::vector<BigCount> binomial_column(long long n, long long r) {
  if (n < 0) throw parameter_error("binomial_column: n must be nonnegative");
  std::vector<BigCount> column(static_cast<std::size_t>(n) + 1);
  if (r < 0) return column;
  for (long long x = r; x <= n; ++x) column[x] = binomial(x, r);
  return column;
}

}  // namespace scorpion
