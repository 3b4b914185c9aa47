#pragma once

#include <map>
#include <optional>
#include <string>

#include "emm/scalar.hpp"

namespace emm {

// Laurent polynomial in t over Q; the value domain of all correlators.
class TPoly {
 public:
  TPoly() = default;
  TPoly(long v) : TPoly(Rational(v)) {}  // NOLINT: implicit by design
  TPoly(const Rational& q);              // NOLINT: implicit by design
  static TPoly t_power(int k, const Rational& coeff = Rational(1));

  bool is_zero() const { return c_.empty(); }
  const std::map<int, Rational>& coefficients() const { return c_; }
  Rational coeff(int k) const;
  int min_degree() const;  // throws on zero
  int max_degree() const;  // throws on zero

  void add_term(int k, const Rational& c);

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const Rational& c);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
  friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
  friend TPoly operator*(const Rational& c, TPoly a) { return a *= c; }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  Scalar to_scalar() const;  // embed via t = s^2
  // Inverse embedding; empty when the scalar has odd s-powers or a
  // non-monomial denominator.
  static std::optional<TPoly> from_scalar(const Scalar& s);

  std::string str() const;

 private:
  std::map<int, Rational> c_;  // exponent -> coefficient, no zeros stored
};

}  // namespace emm
