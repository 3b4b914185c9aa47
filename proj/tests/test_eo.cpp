#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <string>
#include <vector>

#include "emm/correlators.hpp"
#include "emm/eo.hpp"

using namespace emm;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(EMM_GOLDEN_DIR) + "/" + name + ".txt");
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == ' '))
    text.pop_back();
  return text;
}

const std::pair<int, int> kStableKeys[] = {{0, 3}, {0, 4}, {0, 5},
                                           {1, 1}, {1, 2}, {2, 1}};

std::string key_name(const std::string& prefix, int g, int n) {
  return prefix + "_" + std::to_string(g) + "_" + std::to_string(n);
}

}  // namespace

TEST_CASE("spectral curve invariants") {
  SpectralCurve even = curve_even_coupling();
  CHECK(even.x_of_u.substitute(0, 0, -1).equals(even.x_of_u));
  CHECK(even.x_prime.equals(even.x_of_u.derivative(0)));
  SeriesAtZero x_series = even.x_of_u.series_coefficients_at_zero(0, 2);
  CHECK(x_series.coeff(0) ==
        LaurentMulti::constant(1, Scalar::t_power(1) * Scalar(4L)));
  CHECK(x_series.coeff(1).is_zero());
  CHECK(x_series.coeff(2) ==
        LaurentMulti::constant(1, Scalar::t_power(1) * Scalar(64L)));
  CHECK(even.y_of_u.equals(ParamRational::variable(1, 0)));

  SpectralCurve airy = curve_airy();
  CHECK(airy.x_of_u.as_laurent() ==
        LaurentMulti::variable(1, 0, 2) * Scalar(Rational(1, 2)));
  CHECK(airy.x_prime.as_laurent() == LaurentMulti::variable(1, 0));

  SpectralCurve bad = even;
  bad.x_of_u = ParamRational::variable(1, 0);  // odd in u
  bad.x_prime = ParamRational::constant(1, Scalar(1L));
  CHECK_THROWS_AS(EOEngine{bad}, std::logic_error);
}

TEST_CASE("unstable fixtures") {
  SpectralCurve even = curve_even_coupling();
  ParamRational w01 = w01_fixture(even);
  CHECK(w01.equals(even.y_of_u * even.x_prime));
  ParamRational u1 = ParamRational::variable(2, 0);
  ParamRational u2 = ParamRational::variable(2, 1);
  CHECK(w02_fixture().equals(ParamRational::constant(2, Scalar(1L)) /
                             ((u1 - u2) * (u1 - u2))));
}

TEST_CASE("recursion values against goldens, even curve") {
  EOEngine engine(curve_even_coupling());
  for (auto [g, n] : kStableKeys) {
    CAPTURE(g);
    CAPTURE(n);
    CHECK(engine.eo_omega(g, n).str() == golden(key_name("omega_even", g, n)));
  }
  CHECK_THROWS_AS(engine.eo_omega(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(engine.eo_omega(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(engine.eo_omega(-1, 5), std::invalid_argument);
}

TEST_CASE("recursion values against goldens, local model") {
  EOEngine engine(curve_airy());
  for (auto [g, n] : kStableKeys) {
    CAPTURE(g);
    CAPTURE(n);
    CHECK(engine.eo_omega(g, n).str() == golden(key_name("omega_airy", g, n)));
  }
}

TEST_CASE("n-point side predicts the same differentials") {
  for (auto [g, n] : kStableKeys) {
    CAPTURE(g);
    CAPTURE(n);
    CHECK(w_from_G(g, n).str() == golden(key_name("omega_even", g, n)));
  }
}

TEST_CASE("pipeline equality at low complexity") {
  Report report = verify_main1(2);
  CAPTURE(report.text());
  CHECK(report.all_pass());
  CHECK(report.suite == "main1");
  REQUIRE(report.checks.size() == 4);
  CHECK(report.checks[0].name == "main1-g0-n3");
  CHECK(report.checks[1].name == "main1-g0-n4");
  CHECK(report.checks[2].name == "main1-g1-n1");
  CHECK(report.checks[3].name == "main1-g1-n2");
}

TEST_CASE("special deformation solver") {
  SpecialDeformation sol = special_deformation_solver(3, 1);
  REQUIRE(sol.w.size() == static_cast<size_t>(sol.N) + 1);
  // Coupling-free parts are the planar one-point values.
  CHECK(sol.w[0].coeff({0, 0, 0}) == correlator(0, {1}).to_scalar());
  CHECK(sol.w[1].coeff({0, 0, 0}) == correlator(0, {2}).to_scalar());
  CHECK(sol.w[5].coeff({0, 0, 0}) == correlator(0, {6}).to_scalar());
  // First derivative in s_4 at zero couplings is the planar two-point value.
  CHECK(sol.w[0].derivative(1).coeff({0, 0, 0}) ==
        correlator(0, {2, 1}).to_scalar());

  // Degree-zero truncation already carries the coupling-free data.
  SpecialDeformation flat = special_deformation_solver(2, 0, 8);
  for (int n = 1; n <= 8; ++n)
    CHECK(flat.w[static_cast<size_t>(n - 1)].coeff({0, 0}) ==
          correlator(0, {n}).to_scalar());

  Report report = verify_special_deformation();
  CAPTURE(report.text());
  CHECK(report.all_pass());
  CHECK(report.suite == "special-deformation");
}
