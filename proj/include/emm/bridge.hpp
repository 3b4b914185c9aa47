#pragma once

#include <string>
#include <vector>

#include "emm/laurent.hpp"
#include "emm/report.hpp"

namespace emm {

// Branch-point time t_{2n+3} = (-1)^n (2n-1)!! / (n! 2^{3n+3} s^{2n+1}).
Scalar airy_times(int n);

// Conjugate times from the formal logarithm of the normalized E-series.
struct TtildeData {
  Scalar exp_ttilde0;           // 1/(2 t_3) = 4s
  std::vector<Scalar> ttilde;   // ttilde[k-1] holds the order-k coefficient
};
TtildeData ttilde_data(int kmax);

// Bergman kernel expansion coefficient B_{2k,2l} and its normalized form.
Scalar bergman_coeff(int k, int l);
Scalar bhat_coeff(int k, int l);

// Odd basis function zeta_k as a Laurent polynomial in one variable y
// (exponents -(2k+1), ..., -1), and its derivative d(zeta_k)/dy.
LaurentMulti zeta_closed(int k);
LaurentMulti dzeta(int k);

// R_n(a, x): the polynomial-over-monomial kernel of the sqrt integration
// rule, as a two-variable Laurent value (a = slot 0, x = slot 1). Satisfies
// (1 + 4ax) dR/dx + 2a R = x^n.
LaurentMulti integrate_power_over_sqrt(int n);

// Stable correlation templates on the even-coupling side, expanded over the
// zeta basis: supported for (g,n) in {(0,3), (1,1), (0,4)}.
LaurentMulti template_omega(int g, int npts);

// Local-model values assembled from the intersection-number table:
// (-1)^n sum_{|d| = 3g-3+n} prod_i (2d_i+1)!! y_i^{-2d_i-2} <tau_d>.
LaurentMulti airy_omega_template(int g, int npts);

// {"t": {"3": ...}, "B": {"(0,0)": ...}, "Bhat": {...}} with exact string
// values, keyed by the printed subscripts.
std::string ladder_json(int kmax);

// Suite "bridge": dual derivations of the ladders (times, conjugate times,
// Bergman coefficients, zeta series), the integration lemma, the w-algebra
// reconstruction of zeta_k, the stable templates against the recursion
// engine, the psi-coefficient consistency (with a perturbed negative
// control), and the local-model control values.
Report verify_bridge(int kmax = 4);

}  // namespace emm
