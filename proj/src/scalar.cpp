#include "emm/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace emm {

namespace spoly {

void normalize(SPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const SPoly& p) { return p.empty(); }

int degree(const SPoly& p) { return static_cast<int>(p.size()) - 1; }

SPoly add(const SPoly& a, const SPoly& b) {
  SPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

SPoly sub(const SPoly& a, const SPoly& b) {
  SPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

SPoly mul(const SPoly& a, const SPoly& b) {
  if (a.empty() || b.empty()) return {};
  SPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

SPoly scale(const SPoly& a, const Rational& c) {
  if (c == 0) return {};
  SPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<SPoly, SPoly> divmod(const SPoly& a, const SPoly& b) {
  if (is_zero(b)) throw std::domain_error("polynomial division by zero");
  SPoly rem = a;
  if (degree(a) < degree(b)) return {SPoly{}, rem};
  SPoly quot(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (int i = degree(rem); i >= degree(b); --i) {
    size_t ui = static_cast<size_t>(i);
    if (rem[ui] == 0) continue;
    Rational c = rem[ui] / lead;
    size_t shift = ui - (b.size() - 1);
    quot[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
  }
  normalize(rem);
  normalize(quot);
  return {quot, rem};
}

SPoly gcd(const SPoly& a, const SPoly& b) {
  SPoly x = a, y = b;
  normalize(x);
  normalize(y);
  while (!is_zero(y)) {
    SPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty() && x.back() != 1) {
    Rational inv = Rational(1) / x.back();
    for (auto& c : x) c *= inv;
  }
  return x;
}

}  // namespace spoly

Scalar::Scalar(const Rational& q) : den_{Rational(1)} {
  if (q != 0) num_ = {q};
}

Scalar::Scalar(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {
  spoly::normalize(num_);
  spoly::normalize(den_);
  if (spoly::is_zero(den_)) throw std::domain_error("Scalar: zero denominator");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.empty()) {
    den_ = {Rational(1)};
    return;
  }
  SPoly g = spoly::gcd(num_, den_);
  if (spoly::degree(g) > 0) {
    num_ = spoly::divmod(num_, g).first;
    den_ = spoly::divmod(den_, g).first;
  }
  if (den_.back() != 1) {
    Rational inv = Rational(1) / den_.back();
    num_ = spoly::scale(num_, inv);
    den_ = spoly::scale(den_, inv);
  }
}

Scalar Scalar::s_power(int k) {
  Scalar r;
  if (k >= 0) {
    r.num_.assign(static_cast<size_t>(k) + 1, Rational(0));
    r.num_.back() = 1;
    r.den_ = {Rational(1)};
  } else {
    r.num_ = {Rational(1)};
    r.den_.assign(static_cast<size_t>(-k) + 1, Rational(0));
    r.den_.back() = 1;
  }
  return r;
}

Scalar Scalar::t_power(int k) { return s_power(2 * k); }

bool Scalar::is_one() const {
  return num_.size() == 1 && num_[0] == 1 && den_.size() == 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  num_ = spoly::add(spoly::mul(num_, o.den_), spoly::mul(o.num_, den_));
  den_ = spoly::mul(den_, o.den_);
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  num_ = spoly::sub(spoly::mul(num_, o.den_), spoly::mul(o.num_, den_));
  den_ = spoly::mul(den_, o.den_);
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ = spoly::mul(num_, o.num_);
  den_ = spoly::mul(den_, o.den_);
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar division by zero");
  num_ = spoly::mul(num_, o.den_);
  den_ = spoly::mul(den_, o.num_);
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return Scalar(1L);
  Scalar base = e < 0 ? inverse() : *this;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  Scalar acc(1L);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

bool Scalar::is_s_laurent() const {
  size_t nonzero = 0;
  for (const auto& c : den_)
    if (c != 0) ++nonzero;
  return nonzero == 1;
}

std::map<int, Rational> Scalar::s_coefficients() const {
  if (!is_s_laurent())
    throw std::domain_error("Scalar: not a Laurent polynomial in s");
  int shift = spoly::degree(den_);  // den = s^shift (monic monomial)
  std::map<int, Rational> out;
  for (size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) out[static_cast<int>(i) - shift] = num_[i];
  return out;
}

bool Scalar::is_rational() const {
  return den_.size() == 1 && num_.size() <= 1;
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("Scalar: not rational");
  return num_.empty() ? Rational(0) : num_[0];
}

bool Scalar::is_t_laurent() const {
  if (is_zero()) return true;
  if (!is_s_laurent()) return false;
  for (const auto& [e, c] : s_coefficients())
    if (e % 2 != 0) return false;
  return true;
}

std::string render_s_coefficients(const std::map<int, Rational>& coeffs,
                                  bool as_factor) {
  std::vector<std::string> parts;
  for (const auto& [e, c] : coeffs) {
    if (c == 0) continue;
    std::string power;
    if (e != 0) {
      if (e % 2 == 0) {
        int k = e / 2;
        power = k == 1 ? "t" : "t^" + std::to_string(k);
      } else {
        power = e == 1 ? "s" : "s^" + std::to_string(e);
      }
    }
    if (power.empty())
      parts.push_back(to_string(c));
    else if (c == 1)
      parts.push_back(power);
    else if (c == -1)
      parts.push_back("-" + power);
    else
      parts.push_back(to_string(c) + "*" + power);
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  for (size_t pos = 0; (pos = out.find("+ -", pos)) != std::string::npos;)
    out.replace(pos, 3, "- ");
  if (as_factor && parts.size() > 1) return "(" + out + ")";
  return out;
}

std::string Scalar::str() const {
  if (is_s_laurent()) return render_s_coefficients(s_coefficients(), false);
  // General rational function; only reachable for non-monomial denominators,
  // which never appear in canonical outputs.
  auto poly_str = [](const SPoly& p) {
    std::map<int, Rational> m;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) m[static_cast<int>(i)] = p[i];
    return render_s_coefficients(m, true);
  };
  return poly_str(num_) + "/" + poly_str(den_);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("scalar_arith: bad op");
}

}  // namespace emm
