#include "emm/tpoly.hpp"

#include <stdexcept>
#include <utility>

namespace emm {

TPoly::TPoly(const Rational& q) {
  if (q != 0) c_[0] = q;
}

TPoly TPoly::t_power(int k, const Rational& coeff) {
  TPoly p;
  if (coeff != 0) p.c_[k] = coeff;
  return p;
}

Rational TPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rational(0) : it->second;
}

int TPoly::min_degree() const {
  if (c_.empty()) throw std::logic_error("min_degree of zero");
  return c_.begin()->first;
}

int TPoly::max_degree() const {
  if (c_.empty()) throw std::logic_error("max_degree of zero");
  return c_.rbegin()->first;
}

void TPoly::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

TPoly TPoly::operator-() const {
  TPoly r;
  for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (const auto& [k, v] : o.c_) add_term(k, v);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (const auto& [k, v] : o.c_) add_term(k, -v);
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  TPoly r;
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_) r.add_term(ka + kb, va * vb);
  c_ = std::move(r.c_);
  return *this;
}

TPoly& TPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [k, v] : c_) v *= c;
  return *this;
}

Scalar TPoly::to_scalar() const {
  Scalar r;
  for (const auto& [k, v] : c_) r += Scalar(v) * Scalar::t_power(k);
  return r;
}

std::optional<TPoly> TPoly::from_scalar(const Scalar& s) {
  if (!s.is_t_laurent()) return std::nullopt;
  TPoly r;
  for (const auto& [e, v] : s.s_coefficients()) r.c_.emplace(e / 2, v);
  return r;
}

std::string TPoly::str() const {
  std::map<int, Rational> as_s;
  for (const auto& [k, v] : c_) as_s.emplace(2 * k, v);
  return render_s_coefficients(as_s, /*as_factor=*/false);
}

}  // namespace emm
