#include "emm/rational.hpp"

#include <stdexcept>

namespace emm {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer double_factorial(long n) {
  if (n == -1 || n == 0) return 1;
  if (n < -1) throw std::domain_error("double_factorial: n < -1");
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rational_binomial(const Rational& x, unsigned long k) {
  Rational num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= x - static_cast<long>(i);
  return num / Rational(factorial(k));
}

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return 1;
  if (q == 0 && e < 0) throw std::domain_error("rational_pow: zero to negative power");
  Rational base = e < 0 ? Rational(1) / q : q;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational acc = 1;
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace emm
