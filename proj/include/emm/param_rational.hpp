#pragma once

#include <string>
#include <vector>

#include "emm/laurent.hpp"

namespace emm {

// Truncated Laurent expansion of a ParamRational around y_live = 0. The
// coefficient of y_live^e is itself a LaurentMulti (with the live slot zero).
struct SeriesAtZero {
  int nvars = 0;
  int live = 0;
  int min_exp = 0;                  // exponent of coeffs.front()
  std::vector<LaurentMulti> coeffs; // empty: no nonzero term up to the order

  // Coefficient of y_live^e; e below min_exp is zero, e beyond the computed
  // range throws std::out_of_range.
  LaurentMulti coeff(int e) const;
  int max_exp() const { return min_exp + static_cast<int>(coeffs.size()) - 1; }
};

// Quotient of two multivariate Laurent polynomials. No gcd reduction is
// attempted; equality and zero tests go through cross-multiplication.
class ParamRational {
 public:
  explicit ParamRational(int nvars = 0)
      : num_(nvars), den_(LaurentMulti::constant(nvars, Scalar(1L))) {}
  ParamRational(LaurentMulti num);  // NOLINT: implicit by design
  ParamRational(LaurentMulti num, LaurentMulti den);
  static ParamRational constant(int nvars, const Scalar& c);
  static ParamRational variable(int nvars, int i, int exponent = 1);

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  const LaurentMulti& num() const { return num_; }
  const LaurentMulti& den() const { return den_; }

  ParamRational operator-() const;
  ParamRational& operator+=(const ParamRational& o);
  ParamRational& operator-=(const ParamRational& o);
  ParamRational& operator*=(const ParamRational& o);
  ParamRational& operator/=(const ParamRational& o);
  ParamRational& operator*=(const Scalar& c);

  friend ParamRational operator+(ParamRational a, const ParamRational& b) { return a += b; }
  friend ParamRational operator-(ParamRational a, const ParamRational& b) { return a -= b; }
  friend ParamRational operator*(ParamRational a, const ParamRational& b) { return a *= b; }
  friend ParamRational operator/(ParamRational a, const ParamRational& b) { return a /= b; }
  friend ParamRational operator*(const Scalar& c, ParamRational a) { return a *= c; }
  friend ParamRational operator*(ParamRational a, const Scalar& c) { return a *= c; }

  bool equals(const ParamRational& o) const;  // cross-multiplied comparison

  ParamRational derivative(int var) const;  // quotient rule

  // Substitute y_var := sign * y_target in numerator and denominator; throws
  // std::domain_error when the denominator vanishes identically afterwards.
  ParamRational substitute(int var, int target, int sign) const;

  // The value as a Laurent polynomial (exact_quotient of num by den).
  LaurentMulti as_laurent() const;

  bool depends_on(int var) const;

  // Laurent expansion around y_live = 0 through exponent `order`, obtained by
  // factoring den = y_live^k * Q with Q|_{live=0} an invertible monomial and
  // inverting Q by a truncated geometric series. Throws std::domain_error
  // when Q|_{live=0} is not a single monomial.
  SeriesAtZero series_coefficients_at_zero(int live, int order) const;

  // Coefficient of y_live^{-1} in the expansion at y_live = 0.
  LaurentMulti residue_at_zero(int live) const;

  std::string str() const;

 private:
  LaurentMulti num_, den_;
};

}  // namespace emm
