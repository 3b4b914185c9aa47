#include "emm/eo.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "emm/correlators.hpp"
#include "emm/npoint.hpp"

namespace emm {

namespace {

bool stable_pair(int g, int n) { return 2 * g - 2 + n >= 1; }

// Embeds a one-variable rational function at slot `slot` of an nvars space.
ParamRational embed_rational(const ParamRational& f, int nvars, int slot) {
  std::vector<int> slots{slot};
  return ParamRational(f.num().with_nvars(nvars, slots),
                       f.den().with_nvars(nvars, slots));
}

void check_curve(const SpectralCurve& c) {
  const ParamRational& x = c.x_of_u;
  if (!x.substitute(0, 0, -1).equals(x))
    throw std::logic_error("spectral curve: x(u) must be even");
  if (!c.x_prime.equals(x.derivative(0)))
    throw std::logic_error("spectral curve: x_prime must equal dx/du");
  SeriesAtZero xp = c.x_prime.series_coefficients_at_zero(0, 1);
  if (!xp.coeff(0).is_zero() || !xp.coeff(-1).is_zero())
    throw std::logic_error("spectral curve: x'(0) must vanish");
  if (xp.coeff(1).is_zero())
    throw std::logic_error("spectral curve: x''(0) must not vanish");
}

}  // namespace

SpectralCurve curve_even_coupling() {
  LaurentMulti den = LaurentMulti::constant(1, Scalar(1L)) +
                     LaurentMulti::variable(1, 0, 2) * Scalar(-16L);
  SpectralCurve c;
  c.name = "even-coupling";
  c.x_of_u = ParamRational(LaurentMulti::constant(1, Scalar::t_power(1) * Scalar(4L)), den);
  c.y_of_u = ParamRational(LaurentMulti::variable(1, 0));
  c.x_prime = ParamRational(
      LaurentMulti::variable(1, 0) * (Scalar::t_power(1) * Scalar(128L)),
      den.pow(2));
  check_curve(c);
  return c;
}

SpectralCurve curve_airy() {
  SpectralCurve c;
  c.name = "airy";
  c.x_of_u = ParamRational(LaurentMulti::variable(1, 0, 2) * Scalar(Rational(1, 2)));
  c.y_of_u = ParamRational(LaurentMulti::variable(1, 0));
  c.x_prime = ParamRational(LaurentMulti::variable(1, 0));
  check_curve(c);
  return c;
}

ParamRational w01_fixture(const SpectralCurve& curve) {
  return curve.y_of_u * curve.x_prime;
}

ParamRational w02_fixture() {
  LaurentMulti diff = LaurentMulti::variable(2, 0) - LaurentMulti::variable(2, 1);
  return ParamRational(LaurentMulti::constant(2, Scalar(1L)), diff.pow(2));
}

EOEngine::EOEngine(SpectralCurve curve) : curve_(std::move(curve)) {
  check_curve(curve_);
}

LaurentMulti EOEngine::eo_omega(int g, int npts) {
  if (g < 0 || npts < 1)
    throw std::invalid_argument("eo_omega: need g >= 0 and npts >= 1");
  if (!stable_pair(g, npts))
    throw std::invalid_argument("eo_omega: (g,n) must be stable (2g-2+n >= 1)");
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

LaurentMulti EOEngine::compute(int g, int npts) {
  const int n = npts - 1;
  const int nv = npts + 1;  // one live slot for the residue variable
  const int u = npts;

  // Recursion kernel K(y0, u) = u / ((y0^2-u^2)(y(u)-y(-u)) x'(u)).
  ParamRational y_u = embed_rational(curve_.y_of_u, nv, u);
  ParamRational y_diff = y_u - y_u.substitute(u, u, -1);
  ParamRational xp_u = embed_rational(curve_.x_prime, nv, u);
  LaurentMulti y0sq_minus_usq =
      LaurentMulti::variable(nv, 0, 2) - LaurentMulti::variable(nv, u, 2);
  ParamRational kernel = ParamRational::variable(nv, u) /
                         (ParamRational(y0sq_minus_usq) * y_diff * xp_u);

  // Each integrand piece carries one sign flip on the -u slot; residues are
  // taken term by term since Res(sum) = sum(Res).
  LaurentMulti total(nv);
  auto take_residue = [&](const ParamRational& piece) {
    total += (kernel * piece).residue_at_zero(u);
  };

  auto embedded_w = [&](int gg, int kk, const std::vector<int>& slots) {
    return eo_omega(gg, kk).with_nvars(nv, slots);
  };

  if (g >= 1) {
    if (g - 1 == 0 && n == 0) {
      // w_{0,2}(u, -u) = 1/(2u)^2.
      ParamRational w02_diag(LaurentMulti::constant(nv, Scalar(-1L)),
                             LaurentMulti::variable(nv, u, 2) * Scalar(4L));
      take_residue(w02_diag);
    } else {
      LaurentMulti inner = eo_omega(g - 1, n + 2).substitute(1, 0, -1);
      std::vector<int> slots(static_cast<size_t>(n) + 2);
      slots[0] = u;
      slots[1] = -1;
      for (int i = 0; i < n; ++i) slots[static_cast<size_t>(i) + 2] = 1 + i;
      take_residue(ParamRational(-inner.with_nvars(nv, slots)));
    }
  }

  for (int g1 = 0; g1 <= g; ++g1) {
    const int g2 = g - g1;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      std::vector<int> slots_a{u}, slots_b{u};
      for (int i = 0; i < n; ++i)
        (mask >> i & 1 ? slots_a : slots_b).push_back(1 + i);
      const int n1 = static_cast<int>(slots_a.size());
      const int n2 = static_cast<int>(slots_b.size());
      if ((g1 == 0 && n1 == 1) || (g2 == 0 && n2 == 1)) continue;

      auto factor = [&](int gg, const std::vector<int>& slots, int sign)
          -> ParamRational {
        const int kk = static_cast<int>(slots.size());
        if (gg == 0 && kk == 2) {
          // w_{0,2}(sign*u, y_j) = 1/(u - sign*y_j)^2.
          LaurentMulti diff = LaurentMulti::variable(nv, u) -
                              LaurentMulti::variable(nv, slots[1]) *
                                  Scalar(static_cast<long>(sign));
          return ParamRational(LaurentMulti::constant(nv, Scalar(1L)),
                               diff.pow(2));
        }
        LaurentMulti w = embedded_w(gg, kk, slots);
        return ParamRational(sign < 0 ? w.substitute(u, u, -1) : w);
      };

      ParamRational piece = factor(g1, slots_a, +1) * factor(g2, slots_b, -1);
      take_residue(-piece);
    }
  }

  std::vector<int> strip(static_cast<size_t>(nv));
  for (int i = 0; i < npts; ++i) strip[static_cast<size_t>(i)] = i;
  strip[static_cast<size_t>(u)] = -1;
  return total.with_nvars(npts, strip);
}

LaurentMulti w_from_G(int g, int npts) {
  LaurentMulti G = build_G(g, npts);
  LaurentMulti den = LaurentMulti::constant(npts, Scalar(1L));
  Scalar lead(1L);
  for (int j = 0; j < npts; ++j) {
    G = G.shifted(j, 1);  // numerator factor y_j of x'(y_j)
    LaurentMulti b = LaurentMulti::constant(npts, Scalar(1L)) +
                     LaurentMulti::variable(npts, j, 2) * Scalar(-16L);
    den *= b.pow(2);
    lead *= Scalar::t_power(1) * Scalar(128L);
  }
  return exact_quotient(G * lead, den);
}

Report verify_main1(int max) {
  Report report{"main1", {}};
  CheckRunner runner(report);
  EOEngine engine(curve_even_coupling());
  for (int g = 0; 2 * g - 2 + 1 <= max; ++g) {
    for (int n = 1; 2 * g - 2 + n <= max; ++n) {
      if (!stable_pair(g, n)) continue;
      runner.run("main1-g" + std::to_string(g) + "-n" + std::to_string(n),
                 [&engine, g, n] {
                   LaurentMulti lhs = engine.eo_omega(g, n);
                   LaurentMulti rhs = w_from_G(g, n);
                   if (lhs == rhs)
                     return std::pair(true, std::string());
                   return std::pair(false, "eo " + lhs.str() + " vs G-side " +
                                               rhs.str());
                 });
    }
  }
  return report;
}

namespace {

LaurentMulti truncate_total_degree(const LaurentMulti& p, int maxdeg) {
  LaurentMulti r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg <= maxdeg) r.add_term(e, c);
  }
  return r;
}

}  // namespace

SpecialDeformation special_deformation_solver(int M, int D, int N) {
  if (M < 1 || D < 0 || N < 0)
    throw std::invalid_argument("special_deformation_solver: bad shape");

  // A(x) = -1/4 + sum_k (k/2) s_{2k} x^{k-1} + t/(2x), kept as a map from the
  // x-power to a coupling polynomial.
  std::map<int, LaurentMulti> A;
  auto add_A = [&](int xpow, const LaurentMulti& c) {
    auto [it, inserted] = A.emplace(xpow, c);
    if (!inserted) it->second += c;
  };
  add_A(0, LaurentMulti::constant(M, Scalar(Rational(-1, 4))));
  add_A(-1, LaurentMulti::constant(M, Scalar::t_power(1) * Scalar(Rational(1, 2))));
  for (int k = 1; k <= M; ++k)
    add_A(k - 1, LaurentMulti::variable(M, k - 1) * Scalar(ratio(k, 2)));

  std::map<int, LaurentMulti> A2;  // x-power -> coefficient of A(x)^2
  for (const auto& [pa, ca] : A)
    for (const auto& [pb, cb] : A) {
      auto [it, inserted] = A2.emplace(pa + pb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  auto A2_at = [&](int xpow) {
    auto it = A2.find(xpow);
    return it == A2.end() ? LaurentMulti(M) : it->second;
  };

  SpecialDeformation sol{M, D, N, std::vector<LaurentMulti>(
                                      static_cast<size_t>(N) + 1, LaurentMulti(M))};
  auto& w = sol.w;

  bool settled = false;
  for (int sweep = 0; sweep < D + 2 && !settled; ++sweep) {
    std::vector<LaurentMulti> before = w;
    for (int n = 0; n <= N; ++n) {
      // Coefficient of x^{-n-2} in 2A^2 + 4 P_+ w + 2 t w / x + 2 w^2,
      // with P_+ = sum_k (k/2) s_{2k} x^{k-1} and w = sum_m w_m x^{-m-2}.
      LaurentMulti rhs = A2_at(-n - 2) * Scalar(2L);
      for (int k = 1; k <= M; ++k) {
        int m = n + k - 1;
        if (m > N) continue;
        rhs += LaurentMulti::variable(M, k - 1) * w[static_cast<size_t>(m)] *
               Scalar(ratio(k, 2)) * Scalar(4L);
      }
      if (n >= 1)
        rhs += w[static_cast<size_t>(n - 1)] * (Scalar::t_power(1) * Scalar(2L));
      for (int m1 = 0; m1 <= n - 2; ++m1) {
        int m2 = n - 2 - m1;
        rhs += w[static_cast<size_t>(m1)] * w[static_cast<size_t>(m2)] * Scalar(2L);
      }
      w[static_cast<size_t>(n)] = truncate_total_degree(rhs, D);
    }
    settled = std::equal(w.begin(), w.end(), before.begin());
  }
  if (!settled)
    throw std::runtime_error("special_deformation_solver: no fixpoint reached");
  return sol;
}

Report verify_special_deformation() {
  Report report{"special-deformation", {}};
  CheckRunner runner(report);
  SpecialDeformation sol = special_deformation_solver(3, 1);

  auto coupling_free = [](const LaurentMulti& p, int M) {
    return p.coeff(std::vector<int>(static_cast<size_t>(M), 0));
  };

  runner.run("one-point-through-6", [&] {
    for (int n = 1; n <= 6; ++n) {
      Scalar got = coupling_free(sol.w[static_cast<size_t>(n - 1)], sol.M);
      Scalar want = correlator(0, {n}).to_scalar();
      if (got != want)
        return std::pair(false, "n=" + std::to_string(n) + " got " + got.str() +
                                    " want " + want.str());
    }
    return std::pair(true, std::string("6 values"));
  });

  runner.run("two-point-first-order", [&] {
    int checked = 0;
    for (int m = 1; m <= sol.M; ++m)
      for (int n = 1; m + n <= 6; ++n) {
        LaurentMulti d = sol.w[static_cast<size_t>(n - 1)].derivative(m - 1);
        Scalar got = coupling_free(d, sol.M);
        Scalar want = correlator(0, {m, n}).to_scalar();
        if (got != want)
          return std::pair(false, "(m,n)=(" + std::to_string(m) + "," +
                                      std::to_string(n) + ") got " + got.str() +
                                      " want " + want.str());
        ++checked;
      }
    return std::pair(true, std::to_string(checked) + " derivatives");
  });

  return report;
}

}  // namespace emm
