#pragma once

#include <map>
#include <string>
#include <vector>

#include "emm/rational.hpp"

namespace emm {

// Dense polynomial in s over Q: coeffs[i] is the coefficient of s^i.
// Normal form has no trailing zero; the zero polynomial is the empty vector.
using SPoly = std::vector<Rational>;

namespace spoly {
void normalize(SPoly& p);
bool is_zero(const SPoly& p);
int degree(const SPoly& p);  // -1 for zero
SPoly add(const SPoly& a, const SPoly& b);
SPoly sub(const SPoly& a, const SPoly& b);
SPoly mul(const SPoly& a, const SPoly& b);
SPoly scale(const SPoly& a, const Rational& c);
// Exact division in Q[s]: quotient and remainder.
std::pair<SPoly, SPoly> divmod(const SPoly& a, const SPoly& b);
// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
SPoly gcd(const SPoly& a, const SPoly& b);
}  // namespace spoly

enum class ArithOp { add, sub, mul, div };

// Element of Q(s), the field of rational functions in s with the understanding
// t = s^2 (so half-integer powers of t are ordinary monomials in s).
// Canonical form: gcd(num, den) = 1 and den monic; equality is coefficient
// comparison.
class Scalar {
 public:
  Scalar() : num_(), den_{Rational(1)} {}
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT: implicit by design
  Scalar(const Rational& q);               // NOLINT: implicit by design
  Scalar(SPoly num, SPoly den);

  // s^k and t^k = s^{2k}; k may be negative.
  static Scalar s_power(int k);
  static Scalar t_power(int k);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  const SPoly& num() const { return num_; }
  const SPoly& den() const { return den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on /0

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;  // throws std::domain_error on zero
  Scalar pow(int e) const;

  // True when the denominator is a single monomial c*s^k, i.e. the value is a
  // Laurent polynomial in s.
  bool is_s_laurent() const;
  // Laurent expansion map s-exponent -> coefficient; requires is_s_laurent().
  std::map<int, Rational> s_coefficients() const;

  bool is_rational() const;          // no s dependence
  Rational rational_value() const;   // requires is_rational()
  bool is_t_laurent() const;         // Laurent in t: all s-exponents even

  // Canonical text form: Laurent-in-s terms ascending by exponent, even
  // s-powers printed as powers of t, e.g. "-1/8*t^-1" or "1/8*s^-1".
  std::string str() const;

 private:
  void canonicalize();
  SPoly num_, den_;
};

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

// Renders a Laurent-in-s coefficient map (exponent -> rational) canonically.
// When `as_factor` and the rendering has several terms, wraps in parentheses.
std::string render_s_coefficients(const std::map<int, Rational>& coeffs,
                                  bool as_factor);

}  // namespace emm
