#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "emm/param_rational.hpp"
#include "emm/report.hpp"

namespace emm {

// A genus-zero spectral curve parameterized by a single coordinate u with the
// hyperelliptic involution u -> -u around the branch point u = 0. All three
// members are one-variable rational functions of u.
struct SpectralCurve {
  std::string name;
  ParamRational x_of_u;
  ParamRational y_of_u;
  ParamRational x_prime;  // dx/du
};

// x = 4t/(1-16u^2), y = u. Throws std::logic_error if the curve data fails
// its invariants (even x, x'(0) = 0, x''(0) != 0, x_prime == dx/du).
SpectralCurve curve_even_coupling();

// x = u^2/2, y = u; the local model at the branch point.
SpectralCurve curve_airy();

// Correlation differentials of the unstable levels, as coefficient functions
// of du (resp. du1 du2): w01 = y(u) x'(u), w02 = 1/(u1-u2)^2.
ParamRational w01_fixture(const SpectralCurve& curve);
ParamRational w02_fixture();

// The residue recursion for the stable coefficients w_{g,n}(y0..y_{n-1}).
// Memoized and thread-safe.
class EOEngine {
 public:
  explicit EOEngine(SpectralCurve curve);

  const SpectralCurve& curve() const { return curve_; }

  // Requires 2g-2+npts >= 1; throws std::invalid_argument otherwise.
  LaurentMulti eo_omega(int g, int npts);

 private:
  LaurentMulti compute(int g, int npts);

  SpectralCurve curve_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, LaurentMulti> memo_;
};

// w_{g,n} predicted from the n-point coefficient: G_{g,n} * prod_j x'(y_j),
// an exact Laurent computation on the even-coupling curve.
LaurentMulti w_from_G(int g, int npts);

// Suite "main1": eo_omega on the even-coupling curve against w_from_G for
// all stable (g,n) with 2g-2+n <= max.
Report verify_main1(int max);

// One coefficient w_n of the special deformation: a polynomial in the
// couplings s_2..s_{2M} (slot k-1 holds s_{2k}) truncated to total degree D,
// with t-dependent scalar coefficients.
struct SpecialDeformation {
  int M = 0;       // number of couplings
  int D = 0;       // truncation order in the couplings
  int N = 0;       // highest computed x-power index
  std::vector<LaurentMulti> w;  // w[n] multiplies x^{-n-2}, n = 0..N
};

// Solves the planar loop equation for the deformed one-form coefficient by
// in-place sweeps (at most D+2) to a fixpoint; throws std::runtime_error if
// the iteration does not settle. Exact for w[n] up to coupling degree d
// whenever n <= N - d(M-1).
SpecialDeformation special_deformation_solver(int M, int D, int N = 10);

// Suite "special-deformation": with M = 3, D = 1, the coupling-free part of
// w[n-1] must equal <p_{2n}>_0 for n <= 6 and the first-order coupling
// derivatives must reproduce the two-point correlators with m + n <= 6.
Report verify_special_deformation();

}  // namespace emm
