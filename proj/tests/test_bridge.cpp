#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <string>

#include "json.hpp"

#include "emm/bridge.hpp"
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

}  // namespace

TEST_CASE("branch-point times") {
  CHECK(airy_times(0).str() == "1/8*s^-1");
  CHECK(airy_times(1).str() == "-1/64*s^-3");
  CHECK(airy_times(2).str() == "3/1024*s^-5");
  // t_5 / t_3 equals the leading Bergman coefficient.
  CHECK(airy_times(1) / airy_times(0) == bergman_coeff(0, 0));
}

TEST_CASE("conjugate times") {
  TtildeData td = ttilde_data(3);
  REQUIRE(td.ttilde.size() == 3);
  CHECK(td.exp_ttilde0.str() == "4*s");
  CHECK(td.ttilde[0].str() == "3/8*t^-1");
  // Every conjugate time is a rational multiple of a t-power.
  for (const auto& tk : td.ttilde) CHECK(tk.is_t_laurent());
}

TEST_CASE("bergman coefficients") {
  CHECK(bergman_coeff(0, 0).str() == "-1/8*t^-1");
  CHECK(bergman_coeff(0, 1).str() == "3/128*t^-2");
  CHECK(bergman_coeff(1, 0) == bergman_coeff(0, 1));
  CHECK(bhat_coeff(0, 0).str() == "-1/16*t^-1");
  CHECK(bhat_coeff(1, 1) ==
        Scalar(Rational(1, 8)) * bergman_coeff(1, 1));
}

TEST_CASE("zeta basis closed forms") {
  CHECK(zeta_closed(0).str() == "1/8*s^-1*y0^-1");
  CHECK(dzeta(0).str() == "-1/8*s^-1*y0^-2");
  CHECK(zeta_closed(1).str() == "1/1024*s^-3*y0^-3 - 3/128*s^-3*y0^-1");
  CHECK(dzeta(1).str() == "-3/1024*s^-3*y0^-4 + 3/128*s^-3*y0^-2");
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(zeta_closed(k).min_exponent(0) == -(2 * k + 1));
    CHECK(zeta_closed(k).max_exponent(0) == -1);
    CHECK(dzeta(k).min_exponent(0) == -(2 * k + 2));
  }
}

TEST_CASE("integration rule") {
  // R_0 = 1/(2a) and the defining ODE for a range of powers.
  CHECK(integrate_power_over_sqrt(0) ==
        LaurentMulti::monomial(2, {-1, 0}, Scalar(Rational(1, 2))));
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    LaurentMulti R = integrate_power_over_sqrt(n);
    LaurentMulti dR = R.derivative(1);
    LaurentMulti lhs = dR + dR.shifted(0, 1).shifted(1, 1) * Scalar(4L) +
                       R.shifted(0, 1) * Scalar(2L);
    CHECK(lhs == LaurentMulti::monomial(2, {0, n}, Scalar(1L)));
  }
}

TEST_CASE("even-curve templates match the recursion") {
  EOEngine engine(curve_even_coupling());
  CHECK(template_omega(1, 1).str() == golden("omega_even_1_1"));
  CHECK(template_omega(0, 3) == engine.eo_omega(0, 3));
  CHECK(template_omega(0, 4) == engine.eo_omega(0, 4));
  CHECK_THROWS_AS(template_omega(1, 2), std::invalid_argument);
}

TEST_CASE("local model templates") {
  CHECK(airy_omega_template(0, 3).str() == golden("omega_airy_0_3"));
  CHECK(airy_omega_template(1, 1).str() == golden("omega_airy_1_1"));
  CHECK(airy_omega_template(0, 4).str() == golden("omega_airy_0_4"));
  CHECK(airy_omega_template(0, 5).str() == golden("omega_airy_0_5"));
  CHECK(airy_omega_template(1, 2).str() == golden("omega_airy_1_2"));
  CHECK(airy_omega_template(2, 1).str() == golden("omega_airy_2_1"));
}

TEST_CASE("ladder export") {
  nlohmann::json j = nlohmann::json::parse(ladder_json(4));
  CHECK(j["t"]["3"] == "1/8*s^-1");
  CHECK(j["t"]["5"] == "-1/64*s^-3");
  CHECK(j["B"]["(0,0)"] == "-1/8*t^-1");
  CHECK(j["Bhat"]["(0,0)"] == "-1/16*t^-1");
  CHECK(j["t"].size() == 5);
  CHECK(j["B"].size() == 25);
  CHECK(j["Bhat"].size() == 25);
  std::set<std::string> t_keys;
  for (const auto& [key, value] : j["t"].items()) t_keys.insert(key);
  CHECK(t_keys == std::set<std::string>{"11", "3", "5", "7", "9"});
}

TEST_CASE("bridge suite is green") {
  Report report = verify_bridge();
  CAPTURE(report.text());
  CHECK(report.all_pass());
  CHECK(report.suite == "bridge");
  // The named checks the suite must contain.
  std::set<std::string> names;
  for (const auto& c : report.checks) names.insert(c.name);
  for (const char* required :
       {"times-dual-derivation", "conjugate-times", "bergman-dual-derivation",
        "zeta-ladder-series", "zeta-pole-orders", "zeta-x-forms",
        "integration-lemma", "w-algebra-g_k", "template-0-3", "template-1-1",
        "template-0-4", "psi-consistency", "psi-negative-control",
        "airy-control-0-3", "airy-control-1-1"})
    CHECK(names.count(required) == 1);
}
