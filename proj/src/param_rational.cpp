#include "emm/param_rational.hpp"

#include <stdexcept>
#include <utility>

namespace emm {

LaurentMulti SeriesAtZero::coeff(int e) const {
  if (e < min_exp) return LaurentMulti(nvars);
  if (e > max_exp())
    throw std::out_of_range("SeriesAtZero: exponent beyond computed order");
  return coeffs[static_cast<size_t>(e - min_exp)];
}

ParamRational::ParamRational(LaurentMulti num)
    : num_(std::move(num)),
      den_(LaurentMulti::constant(num_.nvars(), Scalar(1L))) {}

ParamRational::ParamRational(LaurentMulti num, LaurentMulti den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars())
    throw std::logic_error("ParamRational: variable count mismatch");
  if (den_.is_zero()) throw std::domain_error("ParamRational: zero denominator");
  if (num_.is_zero()) den_ = LaurentMulti::constant(num_.nvars(), Scalar(1L));
}

ParamRational ParamRational::constant(int nvars, const Scalar& c) {
  return ParamRational(LaurentMulti::constant(nvars, c));
}

ParamRational ParamRational::variable(int nvars, int i, int exponent) {
  return ParamRational(LaurentMulti::variable(nvars, i, exponent));
}

ParamRational ParamRational::operator-() const {
  ParamRational r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamRational& ParamRational::operator+=(const ParamRational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  if (num_.is_zero()) den_ = LaurentMulti::constant(nvars(), Scalar(1L));
  return *this;
}

ParamRational& ParamRational::operator-=(const ParamRational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  if (num_.is_zero()) den_ = LaurentMulti::constant(nvars(), Scalar(1L));
  return *this;
}

ParamRational& ParamRational::operator*=(const ParamRational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  if (num_.is_zero()) den_ = LaurentMulti::constant(nvars(), Scalar(1L));
  return *this;
}

ParamRational& ParamRational::operator/=(const ParamRational& o) {
  if (o.is_zero()) throw std::domain_error("ParamRational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  if (num_.is_zero()) den_ = LaurentMulti::constant(nvars(), Scalar(1L));
  return *this;
}

ParamRational& ParamRational::operator*=(const Scalar& c) {
  num_ *= c;
  if (num_.is_zero()) den_ = LaurentMulti::constant(nvars(), Scalar(1L));
  return *this;
}

bool ParamRational::equals(const ParamRational& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

ParamRational ParamRational::derivative(int var) const {
  return ParamRational(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                       den_ * den_);
}

ParamRational ParamRational::substitute(int var, int target, int sign) const {
  LaurentMulti d = den_.substitute(var, target, sign);
  if (d.is_zero())
    throw std::domain_error("ParamRational: substitution made denominator zero");
  return ParamRational(num_.substitute(var, target, sign), std::move(d));
}

LaurentMulti ParamRational::as_laurent() const { return exact_quotient(num_, den_); }

bool ParamRational::depends_on(int var) const {
  return num_.depends_on(var) || den_.depends_on(var);
}

SeriesAtZero ParamRational::series_coefficients_at_zero(int live, int order) const {
  SeriesAtZero out;
  out.nvars = nvars();
  out.live = live;
  if (num_.is_zero()) {
    out.min_exp = order + 1;  // every requested exponent reads as zero
    return out;
  }

  const int k = den_.min_exponent(live);
  LaurentMulti Q = den_.shifted(live, -k);
  LaurentMulti Q0 = Q.coefficient_of(live, 0);
  if (Q0.term_count() != 1)
    throw std::domain_error(
        "series: denominator constant term in the live variable is not a "
        "monomial");

  const int mn = num_.min_exponent(live) - k;
  if (mn > order) {
    out.min_exp = mn;
    return out;
  }
  // 1/den = y^{-k} / (Q0 + T) = y^{-k} * invQ0 * sum_m (-T * invQ0)^m, where
  // every term of T has live exponent >= 1, so live order L suffices.
  const int L = order + k - num_.min_exponent(live);
  LaurentMulti invQ0 = Q0.pow(-1);
  LaurentMulti P = (-(Q - Q0) * invQ0).truncate_above(live, L);
  LaurentMulti S = invQ0;
  LaurentMulti X = invQ0;
  for (int m = 1; m <= L && !X.is_zero(); ++m) {
    X = (X * P).truncate_above(live, L);
    S += X;
  }
  LaurentMulti full =
      (num_ * S).truncate_above(live, order + k).shifted(live, -k);

  out.min_exp = mn;
  out.coeffs.reserve(static_cast<size_t>(order - mn) + 1);
  for (int e = mn; e <= order; ++e) out.coeffs.push_back(full.coefficient_of(live, e));
  return out;
}

LaurentMulti ParamRational::residue_at_zero(int live) const {
  return series_coefficients_at_zero(live, -1).coeff(-1);
}

std::string ParamRational::str() const {
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace emm
