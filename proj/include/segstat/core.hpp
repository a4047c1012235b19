#ifndef SEGSTAT_CORE_HPP
#define SEGSTAT_CORE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace segstat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a brute-force enumeration is asked for more than its configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generalized binomial coefficient a(a-1)...(a-b+1)/b! for any integer a.
/// Zero for b < 0; one for b == 0 regardless of a.
Integer gen_binomial(const Integer& a, const Integer& b);
Integer gen_binomial(long a, long b);

Integer factorial(long n);

/// total! / prod(parts_i!). Throws std::invalid_argument if the parts do not sum to total.
Integer multinomial(long total, std::span<const long> parts);

/// (-1)^e for any integer e.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// base^e with e possibly negative (base must be nonzero then).
Rational rational_pow(const Rational& base, long e);

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exact integer view of a rational; throws std::domain_error if the denominator is not 1.
Integer to_integer(const Rational& q);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace segstat

#endif  // SEGSTAT_CORE_HPP
