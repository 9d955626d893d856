#ifndef ESQ_NUMERICS_HPP
#define ESQ_NUMERICS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace esq::num {

using Int = mpz_class;
using Rat = mpq_class;

/// factorial(k) for k >= 0; std::nullopt is the ZeroReciprocal marker for
/// k < 0 (a term with such a factor in its denominator evaluates to zero).
std::optional<Int> factorial(long k);

/// Raw nonnegative factorial, memoized. Thread-safe; the memo only grows.
const Int& factorial_nonneg(unsigned long k);

/// n!/(k!(n-k)!) for 0 <= k <= n, 0 otherwise.
Int binomial(long n, long k);

/// Indicator of the even naturals, with 0 even.
int indicator_even(long n);

/// One multiplicative term of the inclusion-exclusion formulas:
///   coeff * prod(num[i]!) / prod(den[j].arg !^den[j].power).
/// A negative factorial under a positive power makes the whole term zero;
/// a zero power leaves the factor out entirely (so (-1)!^0 == 1).
/// A negative factorial among the numerator factors is a contract violation.
struct FactPow {
  long arg;
  long power;
};
Int formula_term(const Int& coeff, const std::vector<long>& num_factorials,
                 const std::vector<FactPow>& den_factorials);

/// Correctly rounded (half-even) fixed-point rendering with `digits`
/// places after the decimal point.
std::string to_decimal(const Rat& p, int digits);

/// Truncated (toward zero) fixed-point rendering.
std::string to_decimal_truncated(const Rat& p, int digits);

/// Scientific rendering with `sig` significant digits, half-even rounding,
/// e.g. "4.9047619e-01". Zero renders as "0".
std::string to_scientific(const Rat& p, int sig);

/// Natural log of a positive exact quantity, carried in log space.
struct LogApprox {
  double log_value = 0.0;
  int sign = 0;  // 0 encodes the exact quantity 0

  static LogApprox of(const Int& v);
  static LogApprox of(const Rat& v);
  double to_double() const;
};

}  // namespace esq::num

#endif
