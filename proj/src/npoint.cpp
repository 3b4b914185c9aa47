#include "emm/npoint.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace emm {

namespace {

// (1 - 16 y_i^2) as a Laurent polynomial in an nvars workspace.
LaurentMulti one_minus_16y2(int nvars, int i) {
  LaurentMulti p = LaurentMulti::constant(nvars, Scalar(1L));
  p += LaurentMulti::variable(nvars, i, 2) * Scalar(-16L);
  return p;
}

// prod_j (1 - 16 y_j^2)^2 over the first npts slots.
LaurentMulti branch_factor_sq(int nvars, int npts) {
  LaurentMulti p = LaurentMulti::constant(nvars, Scalar(1L));
  for (int j = 0; j < npts; ++j) p *= one_minus_16y2(nvars, j).pow(2);
  return p;
}

// Embeds an m-variable Laurent value into an nvars workspace; slots[i] is
// the destination of variable i (several sources may share a destination).
LaurentMulti embed(const LaurentMulti& f, int nvars, const std::vector<int>& slots) {
  return f.with_nvars(nvars, slots);
}

bool stable_pair(int g, int n) { return 2 * g - 2 + n >= 1; }

}  // namespace

LaurentMulti unstable_G01() {
  LaurentMulti p = LaurentMulti::constant(1, Scalar(Rational(1, 8)));
  p += LaurentMulti::variable(1, 0, 1);
  p += LaurentMulti::variable(1, 0, 2) * Scalar(2L);
  return p;
}

ParamRational unstable_G02(int nvars, int i, int j) {
  LaurentMulti num = one_minus_16y2(nvars, i).pow(2) * one_minus_16y2(nvars, j).pow(2);
  LaurentMulti sum_ij = LaurentMulti::variable(nvars, i) + LaurentMulti::variable(nvars, j);
  LaurentMulti den = LaurentMulti::variable(nvars, i) *
                     LaurentMulti::variable(nvars, j) * sum_ij.pow(2) *
                     Scalar::t_power(2) * Scalar(16384L);
  return ParamRational(std::move(num), std::move(den));
}

ParamRational op_E(const ParamRational& f, int u_slot, int v_slot) {
  ParamRational g = f.substitute(u_slot, 0, +1).substitute(v_slot, 0, +1);
  ParamRational half(LaurentMulti::constant(g.nvars(), Scalar(-1L)),
                     LaurentMulti::variable(g.nvars(), 0) * Scalar(2L));
  return g * half;
}

LaurentMulti op_E(const LaurentMulti& f, int u_slot, int v_slot) {
  LaurentMulti g = f.substitute(u_slot, 0, +1).substitute(v_slot, 0, +1);
  return g.shifted(0, -1) * Scalar(Rational(-1, 2));
}

ParamRational op_D(const ParamRational& f, int j) {
  const int nv = f.nvars();
  ParamRational f_at_y0 = f.substitute(j, 0, +1);
  ParamRational y0sq_minus_yjsq(LaurentMulti::variable(nv, 0, 2) -
                                LaurentMulti::variable(nv, j, 2));
  ParamRational bracket =
      ParamRational(LaurentMulti::variable(nv, j) * Scalar(2L)) * (f_at_y0 - f) -
      y0sq_minus_yjsq * f.derivative(j);
  LaurentMulti pref_num =
      -(one_minus_16y2(nv, 0).pow(2) * one_minus_16y2(nv, j).pow(2));
  LaurentMulti pref_den = LaurentMulti::variable(nv, 0) *
                          LaurentMulti::variable(nv, j) * Scalar::t_power(2) *
                          Scalar(16384L);
  ParamRational pref(std::move(pref_num), std::move(pref_den));
  return pref * bracket / (y0sq_minus_yjsq * y0sq_minus_yjsq);
}

LaurentMulti NPointTable::build_G(int g, int npts) {
  if (g < 0 || npts < 1)
    throw std::invalid_argument("build_G: need g >= 0 and npts >= 1");
  if (!stable_pair(g, npts))
    throw std::invalid_argument("build_G: (g,n) must be stable (2g-2+n >= 1)");
  std::pair<int, int> key{g, npts};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  LaurentMulti value = compute(g, npts);
  std::unique_lock lock(mutex_);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

LaurentMulti NPointTable::compute(int g, int npts) {
  const int n = npts - 1;           // non-spectral arguments y1..yn
  const int nv = npts + 2;          // + two spectral work slots
  const int u = npts, v = npts + 1;

  if (g == 0 && npts == 3) {
    // Every contribution involves an unstable (0,2) factor; collapse the
    // whole sum as one rational function.
    ParamRational total = op_D(unstable_G02(nv, 1, 2), 1) +
                          op_D(unstable_G02(nv, 1, 2), 2) +
                          op_E(unstable_G02(nv, u, 1) * unstable_G02(nv, v, 2), u, v) *
                              Scalar(2L);
    return total.as_laurent().with_nvars(npts, {0, 1, 2, -1, -1});
  }

  LaurentMulti total(nv);

  // Per-slot buckets: the D term and the two mirrored E terms carrying a
  // (0,2) factor against the same y_j share their poles at y0 = +-y_j and
  // only their sum is polynomial, so they collapse together.
  for (int j = 1; j <= n; ++j) {
    std::vector<int> op_slots(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) op_slots[static_cast<size_t>(i)] = 1 + i;
    ParamRational operand(embed(build_G(g, n), nv, op_slots));
    ParamRational bucket = op_D(operand, j);

    std::vector<int> partner_slots;
    partner_slots.push_back(0);  // spectral argument, already collapsed to y0
    for (int i = 1; i <= n; ++i)
      if (i != j) partner_slots.push_back(i);
    ParamRational partner(embed(build_G(g, n), nv, partner_slots));
    ParamRational eterm = unstable_G02(nv, 0, j) * partner;
    ParamRational half(LaurentMulti::constant(nv, Scalar(-1L)),
                       LaurentMulti::variable(nv, 0) * Scalar(2L));
    bucket += eterm * half * Scalar(2L);  // both orderings of the splitting

    total += bucket.as_laurent();
  }

  // Stable x stable splittings (ordered), spectral slots already collapsed.
  for (int g1 = 0; g1 <= g; ++g1) {
    const int g2 = g - g1;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      std::vector<int> slots_a{0}, slots_b{0};
      for (int i = 0; i < n; ++i)
        (mask >> i & 1 ? slots_a : slots_b).push_back(1 + i);
      const int n1 = static_cast<int>(slots_a.size());
      const int n2 = static_cast<int>(slots_b.size());
      if (!stable_pair(g1, n1) || !stable_pair(g2, n2)) continue;
      LaurentMulti prod = embed(build_G(g1, n1), nv, slots_a) *
                          embed(build_G(g2, n2), nv, slots_b);
      total += prod.shifted(0, -1) * Scalar(Rational(-1, 2));
    }
  }

  // E applied to G_{g-1, n+2}.
  if (g >= 1) {
    if (g - 1 == 0 && n == 0) {
      // E on the unstable (0,2) coefficient has an immediate closed form:
      // -(1-16y0^2)^4 / (2^17 t^2 y0^5).
      LaurentMulti num = -one_minus_16y2(nv, 0).pow(4);
      LaurentMulti den = LaurentMulti::variable(nv, 0, 5) * Scalar::t_power(2) *
                         Scalar(131072L);
      total += ParamRational(std::move(num), std::move(den)).as_laurent();
    } else {
      std::vector<int> slots{0, 0};
      for (int i = 0; i < n; ++i) slots.push_back(1 + i);
      LaurentMulti inner = embed(build_G(g - 1, n + 2), nv, slots);
      total += inner.shifted(0, -1) * Scalar(Rational(-1, 2));
    }
  }

  // Constant-curvature source term of the genus-one one-point coefficient.
  if (g == 1 && n == 0) {
    LaurentMulti num = one_minus_16y2(nv, 0).pow(2);
    LaurentMulti den =
        LaurentMulti::variable(nv, 0) * Scalar::t_power(2) * Scalar(512L);
    total += ParamRational(std::move(num), std::move(den)).as_laurent();
  }

  std::vector<int> strip(static_cast<size_t>(nv));
  for (int i = 0; i < npts; ++i) strip[static_cast<size_t>(i)] = i;
  strip[static_cast<size_t>(u)] = -1;
  strip[static_cast<size_t>(v)] = -1;
  return total.with_nvars(npts, strip);
}

size_t NPointTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

NPointTable& global_npoint_table() {
  static NPointTable table;
  return table;
}

LaurentMulti build_G(int g, int npts) {
  return global_npoint_table().build_G(g, npts);
}

std::map<std::vector<int>, TPoly> to_x_series(int g, int npts, int bound) {
  if (bound < npts)
    throw std::invalid_argument("to_x_series: bound below the insertion count");
  const LaurentMulti G = build_G(g, npts);
  const int wmax = bound - npts + 2;  // largest useful power of any w_j

  // The branch substitution acts one variable at a time, so the expansion of
  // a monomial of G is an outer product of single-variable series and never
  // mixes variables.  Split G into monomials with the coefficient flattened
  // to its s-Laurent map; every extracted coefficient is then a short sum of
  // rational products instead of a multivariate polynomial product.
  struct Term {
    std::vector<int> exps;
    std::vector<std::pair<int, Rational>> coeff;  // s-exponent -> value
  };
  std::vector<Term> terms;
  terms.reserve(G.terms().size());
  for (const auto& [exps, c] : G.terms()) {
    if (!c.is_s_laurent())
      throw std::logic_error("to_x_series: coefficient is not Laurent in s");
    Term term{exps, {}};
    for (const auto& [se, r] : c.s_coefficients()) term.coeff.emplace_back(se, r);
    terms.push_back(std::move(term));
  }

  // Cache of the w-expansions of y^e on the branch y = -(1/4) sqrt(1-4tw):
  // y^e = (-1/4)^e sum_k binom(e/2, k) (-4t)^k w^k.  Entry k holds the
  // rational part; the attached power of t is t^k.
  std::map<int, std::vector<Rational>> expansion;
  auto series_for = [&](int e) -> const std::vector<Rational>& {
    auto it = expansion.find(e);
    if (it != expansion.end()) return it->second;
    std::vector<Rational> ser;
    ser.reserve(static_cast<size_t>(wmax) + 1);
    Rational front = rational_pow(Rational(-1, 4), e);
    for (int k = 0; k <= wmax; ++k)
      ser.push_back(front * rational_binomial(ratio(e, 2), k) *
                    rational_pow(Rational(-4), k));
    return expansion.emplace(e, std::move(ser)).first->second;
  };

  // Coefficient of prod_j w_j^{k_j}, as a map s-exponent -> rational.
  auto extract = [&](const std::vector<int>& k) {
    std::map<int, Rational> acc;
    int ksum = 0;
    for (int x : k) ksum += x;
    for (const auto& term : terms) {
      Rational prod(1);
      bool vanished = false;
      for (int j = 0; j < npts; ++j) {
        const auto& ser = series_for(term.exps[static_cast<size_t>(j)]);
        const Rational& f = ser[static_cast<size_t>(k[static_cast<size_t>(j)])];
        if (f == 0) {
          vanished = true;
          break;
        }
        prod *= f;
      }
      if (vanished) continue;
      for (const auto& [se, r] : term.coeff) {
        const int key = se + 2 * ksum;
        Rational& slot = acc[key];
        slot += prod * r;
        if (slot == 0) acc.erase(key);
      }
    }
    return acc;
  };

  // The expansion theorem forbids any power of w_j below 2.  Because the
  // monomials in the remaining variables stay linearly independent, the
  // exact form of that statement is that for each variable, each low power,
  // and each residual exponent pattern the matched terms cancel.
  for (int j = 0; j < npts; ++j) {
    for (int low = 0; low <= 1; ++low) {
      std::map<std::vector<int>, std::map<int, Rational>> slice;
      for (const auto& term : terms) {
        const Rational& f =
            series_for(term.exps[static_cast<size_t>(j)])[static_cast<size_t>(low)];
        if (f == 0) continue;
        std::vector<int> pattern;
        pattern.reserve(static_cast<size_t>(npts) - 1);
        for (int i = 0; i < npts; ++i)
          if (i != j) pattern.push_back(term.exps[static_cast<size_t>(i)]);
        auto& cell = slice[std::move(pattern)];
        for (const auto& [se, r] : term.coeff) {
          Rational& slot = cell[se];
          slot += f * r;
          if (slot == 0) cell.erase(se);
        }
      }
      for (const auto& [pattern, cell] : slice)
        if (!cell.empty())
          throw std::logic_error(
              "to_x_series: unexpected low-order term in the w-expansion");
    }
  }

  std::map<std::vector<int>, TPoly> out;
  std::vector<int> a(static_cast<size_t>(npts), 1);
  std::vector<int> key(static_cast<size_t>(npts));
  while (true) {
    int sum = 0;
    for (int x : a) sum += x;
    if (sum <= bound) {
      for (int j = 0; j < npts; ++j)
        key[static_cast<size_t>(j)] = a[static_cast<size_t>(j)] + 1;
      TPoly poly;
      for (const auto& [se, r] : extract(key)) {
        if (se % 2 != 0)
          throw std::logic_error(
              "to_x_series: coefficient is not a t-polynomial");
        poly.add_term(se / 2, r);
      }
      out.emplace(a, std::move(poly));
    }
    // Advance the odometer over a_j >= 1 with sum <= bound.
    int pos = npts - 1;
    while (pos >= 0) {
      ++a[static_cast<size_t>(pos)];
      int total = 0;
      for (int x : a) total += x;
      if (total <= bound) break;
      a[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::string StructureReport::str() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " structure [odd " << (odd_ok ? "ok" : "BAD")
     << ", symmetric " << (symmetric_ok ? "ok" : "BAD") << ", basis "
     << (basis_ok ? "ok" : "BAD") << "]";
  if (!basis.empty()) {
    os << " basis {";
    bool first = true;
    for (const auto& [a, b] : basis) {
      os << (first ? "" : ", ") << "(" << a << "," << b << ")";
      first = false;
    }
    os << "}";
  }
  if (!offending.empty()) os << " offending: " << offending;
  return os.str();
}

StructureReport structure_check_value(const LaurentMulti& G, int npts) {
  StructureReport rep;

  rep.symmetric_ok = true;
  for (int i = 0; i + 1 < npts && rep.symmetric_ok; ++i) {
    std::vector<int> perm(static_cast<size_t>(npts));
    for (int k = 0; k < npts; ++k) perm[static_cast<size_t>(k)] = k;
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
    if (G.with_nvars(npts, perm) != G) {
      rep.symmetric_ok = false;
      rep.offending = "not symmetric under swap of slots " + std::to_string(i) +
                      "," + std::to_string(i + 1);
    }
  }

  LaurentMulti shifted = G;
  for (int j = 0; j < npts; ++j) shifted = shifted.shifted(j, 3);
  try {
    LaurentMulti R = exact_quotient(shifted, branch_factor_sq(npts, npts));
    rep.odd_ok = true;
    for (const auto& [exps, c] : R.terms()) {
      for (int e : exps) {
        if (e % 2 != 0 || e > 0) {
          rep.odd_ok = false;
          if (rep.offending.empty())
            rep.offending = "reduced exponent " + std::to_string(e) +
                            " is not an even non-positive integer";
        }
      }
    }
    if (npts == 1 && rep.odd_ok)
      for (const auto& [exps, c] : R.terms())
        rep.basis.insert({2, -exps[0] / 2 + 1});
  } catch (const ExactDivisionError&) {
    rep.odd_ok = false;
    if (rep.offending.empty())
      rep.offending = "branch-factor reduction is not exact";
  }

  rep.basis_ok = rep.odd_ok;
  if (npts == 1 && rep.odd_ok)
    for (const auto& [a, b] : rep.basis)
      if (a != 2 || b < 1) rep.basis_ok = false;
  rep.pass = rep.odd_ok && rep.symmetric_ok && rep.basis_ok;
  return rep;
}

StructureReport structure_check(int g, int npts) {
  return structure_check_value(build_G(g, npts), npts);
}

Report verify_structure(int max) {
  Report report{"structure", {}};
  CheckRunner runner(report);
  for (int g = 0; 2 * g - 2 + 1 <= max; ++g) {
    for (int n = 1; 2 * g - 2 + n <= max; ++n) {
      if (!stable_pair(g, n)) continue;
      runner.run("structure-g" + std::to_string(g) + "-n" + std::to_string(n),
                 [g, n] {
                   StructureReport rep = structure_check(g, n);
                   return std::pair(rep.pass, rep.str());
                 });
    }
  }
  runner.run("negative-control-division", [] {
    LaurentMulti bad = build_G(1, 1) + LaurentMulti::variable(1, 0, -4);
    StructureReport rep = structure_check_value(bad, 1);
    return std::pair(!rep.pass, rep.str());
  });
  runner.run("negative-control-parity", [] {
    LaurentMulti even = one_minus_16y2(1, 0).pow(2).shifted(0, -4);
    LaurentMulti bad = build_G(1, 1) + even;
    StructureReport rep = structure_check_value(bad, 1);
    return std::pair(!rep.pass, rep.str());
  });
  return report;
}

}  // namespace emm
