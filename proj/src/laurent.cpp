#include "emm/laurent.hpp"

#include <algorithm>
#include <utility>

namespace emm {

namespace {

std::string var_str(int i, int e) {
  std::string v = "y" + std::to_string(i);
  return e == 1 ? v : v + "^" + std::to_string(e);
}

}  // namespace

LaurentMulti LaurentMulti::constant(int nvars, const Scalar& c) {
  LaurentMulti r(nvars);
  if (!c.is_zero()) r.terms_.emplace(ExpVec(nvars, 0), c);
  return r;
}

LaurentMulti LaurentMulti::variable(int nvars, int i, int exponent) {
  if (i < 0 || i >= nvars) throw std::logic_error("variable index out of range");
  LaurentMulti r(nvars);
  ExpVec e(nvars, 0);
  e[i] = exponent;
  r.terms_.emplace(std::move(e), Scalar(1L));
  return r;
}

LaurentMulti LaurentMulti::monomial(int nvars, const ExpVec& exps, const Scalar& c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw std::logic_error("monomial: exponent vector size mismatch");
  LaurentMulti r(nvars);
  if (!c.is_zero()) r.terms_.emplace(exps, c);
  return r;
}

Scalar LaurentMulti::coeff(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Scalar() : it->second;
}

void LaurentMulti::add_term(const ExpVec& exps, const Scalar& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::logic_error("add_term: exponent vector size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentMulti::check_same_shape(const LaurentMulti& o) const {
  if (nvars_ != o.nvars_)
    throw std::logic_error("LaurentMulti: variable count mismatch");
}

LaurentMulti LaurentMulti::operator-() const {
  LaurentMulti r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentMulti& LaurentMulti::operator+=(const LaurentMulti& o) {
  check_same_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentMulti& LaurentMulti::operator-=(const LaurentMulti& o) {
  check_same_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentMulti& LaurentMulti::operator*=(const LaurentMulti& o) {
  check_same_shape(o);
  LaurentMulti r(nvars_);
  ExpVec e(static_cast<size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

LaurentMulti& LaurentMulti::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentMulti& LaurentMulti::operator/=(const Scalar& c) {
  if (c.is_zero()) throw std::domain_error("LaurentMulti: division by zero scalar");
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

LaurentMulti LaurentMulti::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1)
      throw std::domain_error("LaurentMulti::pow: negative power of a sum");
    const auto& [exps, c] = *terms_.begin();
    ExpVec ne(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) ne[i] = exps[i] * e;
    return monomial(nvars_, ne, c.pow(e));
  }
  LaurentMulti acc = constant(nvars_, Scalar(1L));
  LaurentMulti base = *this;
  unsigned n = static_cast<unsigned>(e);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

LaurentMulti LaurentMulti::derivative(int var) const {
  LaurentMulti r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec ne = e;
    ne[var] -= 1;
    r.add_term(ne, c * Scalar(Rational(e[var])));
  }
  return r;
}

LaurentMulti LaurentMulti::substitute(int var, int target, int sign) const {
  LaurentMulti r(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    int k = ne[var];
    ne[var] = 0;
    ne[target] += k;
    r.add_term(ne, (sign < 0 && (k & 1)) ? -c : c);
  }
  return r;
}

LaurentMulti LaurentMulti::shifted(int var, int delta) const {
  LaurentMulti r(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    ne[var] += delta;
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

LaurentMulti LaurentMulti::with_nvars(int new_nvars,
                                      const std::vector<int>& slot_map) const {
  if (static_cast<int>(slot_map.size()) != nvars_)
    throw std::logic_error("with_nvars: slot map size mismatch");
  LaurentMulti r(new_nvars);
  for (const auto& [e, c] : terms_) {
    ExpVec ne(static_cast<size_t>(new_nvars), 0);
    for (int i = 0; i < nvars_; ++i) {
      if (slot_map[i] < 0) {
        if (e[i] != 0)
          throw std::logic_error("with_nvars: dropped variable occurs");
        continue;
      }
      ne[slot_map[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

LaurentMulti LaurentMulti::coefficient_of(int var, int k) const {
  LaurentMulti r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    ExpVec ne = e;
    ne[var] = 0;
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

LaurentMulti LaurentMulti::truncate_above(int var, int maxexp) const {
  LaurentMulti r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[var] <= maxexp) r.terms_.emplace(e, c);
  return r;
}

bool LaurentMulti::depends_on(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

int LaurentMulti::min_exponent(int var) const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero");
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

int LaurentMulti::max_exponent(int var) const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero");
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

std::string LaurentMulti::str() const {
  std::vector<std::string> parts;
  for (const auto& [e, c] : terms_) {
    std::string vpart;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!vpart.empty()) vpart += "*";
      vpart += var_str(i, e[i]);
    }
    if (!c.is_s_laurent()) {
      parts.push_back(vpart.empty() ? c.str() : "(" + c.str() + ")*" + vpart);
      continue;
    }
    auto smap = c.s_coefficients();
    if (vpart.empty()) {
      parts.push_back(render_s_coefficients(smap, /*as_factor=*/false));
      continue;
    }
    if (smap.size() == 1 && smap.begin()->first == 0) {
      const Rational& q = smap.begin()->second;
      if (q == 1) {
        parts.push_back(vpart);
        continue;
      }
      if (q == -1) {
        parts.push_back("-" + vpart);
        continue;
      }
    }
    parts.push_back(render_s_coefficients(smap, /*as_factor=*/true) + "*" + vpart);
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  for (size_t pos = 0; (pos = out.find("+ -", pos)) != std::string::npos;)
    out.replace(pos, 3, "- ");
  return out;
}

LaurentMulti exact_quotient(const LaurentMulti& a, const LaurentMulti& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero");
  const int nv = a.nvars();
  if (nv != b.nvars())
    throw std::logic_error("exact_quotient: variable count mismatch");
  LaurentMulti q(nv);
  if (a.is_zero()) return q;

  // In a Laurent domain the per-variable minimum and maximum exponents are
  // additive under multiplication, so any exact quotient lives in this box.
  std::vector<int> qmin(static_cast<size_t>(nv)), qmax(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) {
    qmin[i] = a.min_exponent(i) - b.min_exponent(i);
    qmax[i] = a.max_exponent(i) - b.max_exponent(i);
  }

  const auto& blead = *b.terms().rbegin();  // lex-greatest term of b
  LaurentMulti r = a;
  LaurentMulti::ExpVec qe(static_cast<size_t>(nv));
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    bool inside = true;
    for (int i = 0; i < nv; ++i) {
      qe[i] = rlead.first[i] - blead.first[i];
      if (qe[i] < qmin[i] || qe[i] > qmax[i]) inside = false;
    }
    if (!inside)
      throw ExactDivisionError("exact_quotient: division is not exact", r);
    LaurentMulti qterm = LaurentMulti::monomial(nv, qe, rlead.second / blead.second);
    q += qterm;
    r -= qterm * b;
  }
  return q;
}

}  // namespace emm
