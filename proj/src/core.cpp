#include "segstat/core.hpp"

namespace segstat {

Integer gen_binomial(const Integer& a, const Integer& b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a >= 0 && b > a) return 0;
  if (a >= 0 && b.fits_ulong_p() && a.fits_ulong_p()) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b.get_ui());
    return r;
  }
  if (!b.fits_ulong_p()) throw std::domain_error("gen_binomial: lower index too large");
  // falling factorial over b!
  const unsigned long k = b.get_ui();
  Integer num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= a - i;
  Integer den;
  mpz_fac_ui(den.get_mpz_t(), k);
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer gen_binomial(long a, long b) { return gen_binomial(Integer(a), Integer(b)); }

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer multinomial(long total, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != total) throw std::invalid_argument("multinomial: parts do not sum to total");
  Integer r = factorial(total);
  for (long p : parts) {
    const Integer f = factorial(p);
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
  }
  return r;
}

Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: zero to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

Integer to_integer(const Rational& q) {
  if (q.get_den() != 1) throw std::domain_error("value " + q.get_str() + " is not an integer");
  return q.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace segstat
