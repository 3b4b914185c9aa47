#pragma once

#include <map>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "emm/param_rational.hpp"
#include "emm/report.hpp"
#include "emm/tpoly.hpp"

namespace emm {

// Unstable one-point coefficient: (1 + 4y)^2 / 8, a polynomial in one
// variable.
LaurentMulti unstable_G01();

// Unstable two-point coefficient in slots (i, j) of an nvars workspace:
// (1-16yi^2)^2 (1-16yj^2)^2 / (2^14 t^2 yi yj (yi+yj)^2).
ParamRational unstable_G02(int nvars, int i, int j);

// E operator: f(.., y_u, .., y_v, ..) -> -f(y0, y0)/(2 y0), collapsing the
// two spectral slots onto y0 (slot 0).
ParamRational op_E(const ParamRational& f, int u_slot, int v_slot);
LaurentMulti op_E(const LaurentMulti& f, int u_slot, int v_slot);

// D operator in slot j against y0 (slot 0):
//   -(1-16y0^2)^2 (1-16yj^2)^2 / (2^14 t^2 y0 yj)
//     * [2 yj (f(y0) - f(yj)) - (y0^2 - yj^2) f'(yj)] / (y0^2 - yj^2)^2
// where f(y0) substitutes slot j by y0.
ParamRational op_D(const ParamRational& f, int j);

// Memoized evaluation of the loop-insertion recursion for the stable
// n-point coefficients G_{g,n}(y0..y_{n-1}). Thread-safe like
// CorrelatorTable.
class NPointTable {
 public:
  // Requires 2g-2+npts >= 1 (the unstable (0,1)/(0,2) coefficients live in
  // unstable_G01/unstable_G02); throws std::invalid_argument otherwise.
  LaurentMulti build_G(int g, int npts);

  size_t size() const;

 private:
  LaurentMulti compute(int g, int npts);

  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, LaurentMulti> memo_;
};

NPointTable& global_npoint_table();
LaurentMulti build_G(int g, int npts);

// Re-expands G_{g,n} on the x-branch y_j = -(1/4) sqrt(1 - 4t/x_j) as a
// series in w_j = 1/x_j and reads off correlators: the coefficient of
// prod_j w_j^{a_j + 1} is <prod_j p_{2a_j}>_g. Returns all entries with
// a_j >= 1 and sum(a) <= bound; throws std::logic_error if any term with a
// w-power below 2 survives (the expansion theorem forbids them).
std::map<std::vector<int>, TPoly> to_x_series(int g, int npts, int bound);

// Structure theorem check: G * prod_j y_j^3 / (1-16y_j^2)^2 must be a
// Laurent polynomial whose exponents are all even and <= 0, and G must be
// symmetric. For one-point coefficients the surviving exponents -2c are
// recorded as basis entries (a, b) = (2, c+1).
struct StructureReport {
  bool pass = false;
  bool odd_ok = false;        // reduction exact, exponents even and <= 0
  bool symmetric_ok = false;
  bool basis_ok = false;
  std::set<std::pair<int, int>> basis;
  std::string offending;
  std::string str() const;
};

StructureReport structure_check_value(const LaurentMulti& G, int npts);
StructureReport structure_check(int g, int npts);

// Suite "structure": structure_check over all stable (g,n) with
// 2g-2+n <= max, plus negative controls (an injected even-power monomial
// must be rejected either by inexact division or by a parity offender).
Report verify_structure(int max);

}  // namespace emm
