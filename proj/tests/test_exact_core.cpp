#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "emm/laurent.hpp"
#include "emm/param_rational.hpp"
#include "emm/rational.hpp"
#include "emm/scalar.hpp"
#include "emm/tpoly.hpp"

using namespace emm;

namespace {

// Small random scalars: Laurent-ish numerators and denominators in s with
// single-digit coefficients so products stay readable under the hood.
Scalar random_scalar(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(0, 3);
  for (;;) {
    SPoly num(static_cast<size_t>(deg(rng)) + 1);
    SPoly den(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : num) c = coeff(rng);
    for (auto& c : den) c = coeff(rng);
    spoly::normalize(num);
    spoly::normalize(den);
    if (spoly::is_zero(den)) continue;
    Scalar out(num, den);
    if (nonzero && out.is_zero()) continue;
    return out;
  }
}

LaurentMulti random_laurent(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> nterms(1, 4);
  LaurentMulti out(nvars);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<size_t>(nvars));
    for (auto& x : e) x = exp(rng);
    out.add_term(e, random_scalar(rng));
  }
  return out;
}

Scalar eighth_inverse_s() { return Scalar(Rational(1, 8)) * Scalar::s_power(-1); }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(8) == 384);
  CHECK(binomial(6, 2) == 15);
  CHECK(rational_binomial(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(rational_binomial(Rational(1, 2), 3) == Rational(1, 16));
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(ratio(4, 6) == Rational(2, 3));
  CHECK(ratio(-4, 2) == Rational(-2));
  CHECK_THROWS_AS(ratio(1, 0), std::domain_error);
  CHECK(to_string(Rational(-1, 8)) == "-1/8");
  CHECK(to_string(Rational(42)) == "42");
}

TEST_CASE("scalar field axioms on random triples") {
  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_scalar(rng);
    Scalar b = random_scalar(rng);
    Scalar c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    Scalar d = random_scalar(rng, /*nonzero=*/true);
    CHECK((a / d) * d == a);
    CHECK(d * d.inverse() == Scalar(1L));
  }
}

TEST_CASE("scalar canonical form") {
  // (s^2 - 1)/(s + 1) reduces to s - 1 with a monic denominator.
  Scalar reduced(SPoly{Rational(-1), Rational(0), Rational(1)},
                 SPoly{Rational(1), Rational(1)});
  CHECK(reduced == Scalar(SPoly{Rational(-1), Rational(1)}, SPoly{Rational(1)}));
  // Scaling numerator and denominator together is invisible.
  Scalar scaled(SPoly{Rational(0), Rational(6)}, SPoly{Rational(4)});
  CHECK(scaled == Scalar(Rational(3, 2)) * Scalar::s_power(1));
  CHECK(scaled.den() == SPoly{Rational(1)});
}

TEST_CASE("spoly cauchy product") {
  SPoly a{Rational(1), Rational(2)};           // 1 + 2s
  SPoly b{Rational(3), Rational(0), Rational(1)};  // 3 + s^2
  CHECK(spoly::mul(a, b) ==
        SPoly{Rational(3), Rational(6), Rational(1), Rational(2)});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar x = random_scalar(rng);
    Scalar y = random_scalar(rng);
    CHECK(scalar_arith(x, y, ArithOp::mul) == x * y);
  }
}

TEST_CASE("square root of t") {
  CHECK(Scalar::s_power(1) * Scalar::s_power(1) == Scalar::t_power(1));
  CHECK(eighth_inverse_s() / eighth_inverse_s() == Scalar(1L));
  CHECK(eighth_inverse_s() * (Scalar(4L) * Scalar::s_power(1)) ==
        Scalar(Rational(1, 2)));
  CHECK(Scalar::s_power(3).is_s_laurent());
  CHECK(!Scalar::s_power(3).is_t_laurent());
  CHECK(Scalar::s_power(4).is_t_laurent());
  CHECK(Scalar::t_power(-2).s_coefficients() ==
        std::map<int, Rational>{{-4, Rational(1)}});
}

TEST_CASE("scalar rendering") {
  CHECK(eighth_inverse_s().str() == "1/8*s^-1");
  CHECK((Scalar(Rational(-1, 8)) * Scalar::t_power(-1)).str() == "-1/8*t^-1");
  CHECK((Scalar(4L) * Scalar::t_power(2)).str() == "4*t^2");
  CHECK(Scalar::t_power(3).str() == "t^3");
  CHECK(Scalar(Rational(-1, 8)).str() == "-1/8");
  CHECK(Scalar(0L).str() == "0");
  CHECK(Scalar::s_power(1).str() == "s");
  CHECK((-Scalar::t_power(1)).str() == "-t");
}

TEST_CASE("tpoly arithmetic and rendering") {
  TPoly a = TPoly::t_power(2, Rational(1, 2));
  TPoly b = TPoly::t_power(3);
  CHECK((a + b).str() == "1/2*t^2 + t^3");
  CHECK((a * b).str() == "1/2*t^5");
  CHECK((a - a).is_zero());
  CHECK(TPoly().str() == "0");
  CHECK(TPoly(-1).str() == "-1");
  CHECK(a.min_degree() == 2);
  CHECK((a + b).max_degree() == 3);
  TPoly c = TPoly::t_power(-1, Rational(-1, 8));
  CHECK(c.str() == "-1/8*t^-1");
  CHECK(TPoly::from_scalar(c.to_scalar()).value() == c);
  CHECK(!TPoly::from_scalar(Scalar::s_power(1)).has_value());
}

TEST_CASE("laurent arithmetic basics") {
  std::mt19937 rng(20240518);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentMulti a = random_laurent(rng, 2);
    LaurentMulti b = random_laurent(rng, 2);
    LaurentMulti c = random_laurent(rng, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
  LaurentMulti y0 = LaurentMulti::variable(2, 0);
  LaurentMulti y1 = LaurentMulti::variable(2, 1);
  CHECK((y0 * y1).str() == "y0*y1");
  CHECK(y0.pow(-2).str() == "y0^-2");
  CHECK((y0 + y1).pow(2) == y0.pow(2) + y0 * y1 * Scalar(2L) + y1.pow(2));
  CHECK_THROWS_AS((y0 + y1).pow(-1), std::domain_error);
}

TEST_CASE("laurent substitutions and slots") {
  LaurentMulti y0 = LaurentMulti::variable(2, 0);
  LaurentMulti y1 = LaurentMulti::variable(2, 1);
  LaurentMulti f = y0.pow(3) * y1 + y0;
  CHECK(f.substitute(0, 0, -1) == -y0.pow(3) * y1 - y0);
  CHECK(f.substitute(1, 0, 1) == y0.pow(4) + y0);
  CHECK(f.derivative(0) == y0.pow(2) * y1 * Scalar(3L) + LaurentMulti::constant(2, Scalar(1L)));
  CHECK(f.shifted(0, -1) == y0.pow(2) * y1 + LaurentMulti::constant(2, Scalar(1L)));
  CHECK(f.coefficient_of(0, 3) == y1);
  CHECK(f.truncate_above(0, 1) == y0);
  // Widening embeds; colliding slots add exponents.
  LaurentMulti g = LaurentMulti::variable(1, 0, 2);
  CHECK(g.with_nvars(3, {1}) == LaurentMulti::variable(3, 1, 2));
  LaurentMulti h = LaurentMulti::variable(2, 0) * LaurentMulti::variable(2, 1, 3);
  CHECK(h.with_nvars(1, {0, 0}) == LaurentMulti::variable(1, 0, 4));
  CHECK(f.min_exponent(0) == 1);
  CHECK(f.max_exponent(0) == 3);
  CHECK(f.depends_on(1));
  CHECK(!y0.depends_on(1));
}

TEST_CASE("laurent rendering grammar") {
  LaurentMulti one_term =
      LaurentMulti::monomial(3, {-2, -2, -2},
                             Scalar(Rational(-1, 128)) * Scalar::t_power(-1));
  CHECK(one_term.str() == "-1/128*t^-1*y0^-2*y1^-2*y2^-2");
  LaurentMulti bare = LaurentMulti::variable(2, 1, -5);
  CHECK(bare.str() == "y1^-5");
  CHECK((-bare).str() == "-y1^-5");
  LaurentMulti mixed = LaurentMulti::monomial(1, {2}, Scalar::s_power(1)) +
                       LaurentMulti::constant(1, Scalar(Rational(1, 8)));
  CHECK(mixed.str() == "1/8 + s*y0^2");
  // A multi-term scalar coefficient is parenthesized as a factor.
  LaurentMulti sums = LaurentMulti::monomial(
      1, {1}, Scalar(1L) + Scalar::t_power(1));
  CHECK(sums.str() == "(1 + t)*y0");
  CHECK(LaurentMulti(2).str() == "0");
}

TEST_CASE("unstable one-point square") {
  // (1/8)(1+4y)^2 squared against (1/64)(1+4y)^4, expanded exactly.
  LaurentMulti g01 = LaurentMulti::constant(1, Scalar(Rational(1, 8))) +
                     LaurentMulti::variable(1, 0) +
                     LaurentMulti::variable(1, 0, 2) * Scalar(2L);
  LaurentMulti base = LaurentMulti::constant(1, Scalar(1L)) +
                      LaurentMulti::variable(1, 0) * Scalar(4L);
  CHECK(g01 * g01 == base.pow(4) * Scalar(Rational(1, 64)));
}

TEST_CASE("exact quotient") {
  std::mt19937 rng(20240519);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentMulti b = random_laurent(rng, 2);
    LaurentMulti q = random_laurent(rng, 2);
    if (b.is_zero()) continue;
    CHECK(exact_quotient(b * q, b) == q);
  }
  LaurentMulti y0 = LaurentMulti::variable(2, 0);
  LaurentMulti y1 = LaurentMulti::variable(2, 1);
  // Laurent division absorbs monomial factors.
  CHECK(exact_quotient(y0 + y1 * y0.pow(-1), y0) ==
        LaurentMulti::constant(2, Scalar(1L)) + y1 * y0.pow(-2));
  CHECK_THROWS_AS(exact_quotient(y0, LaurentMulti(2)), std::domain_error);
  try {
    exact_quotient(y0 + y1, y0 + y1 * Scalar(2L));
    CHECK(false);
  } catch (const ExactDivisionError& e) {
    CHECK(!e.remainder().is_zero());
  }
}

TEST_CASE("param rational arithmetic") {
  ParamRational y0 = ParamRational::variable(2, 0);
  ParamRational y1 = ParamRational::variable(2, 1);
  ParamRational one = ParamRational::constant(2, Scalar(1L));
  ParamRational f = one / (y0 - y1);
  CHECK((f * (y0 - y1)).equals(one));
  CHECK((f - f).is_zero());
  CHECK(f.derivative(0).equals(-(one / ((y0 - y1) * (y0 - y1)))));
  CHECK(f.substitute(0, 0, -1).equals(-(one / (y0 + y1))));
  ParamRational g = (y0 * y0 - y1 * y1) / (y0 - y1);
  CHECK(g.equals(y0 + y1));
  CHECK(g.as_laurent() ==
        LaurentMulti::variable(2, 0) + LaurentMulti::variable(2, 1));
  CHECK_THROWS_AS(f.substitute(0, 1, 1), std::domain_error);
}

TEST_CASE("series expansion at zero") {
  // Geometric series: 1/(1 - y) = 1 + y + y^2 + ...
  ParamRational geo =
      ParamRational::constant(1, Scalar(1L)) /
      (ParamRational::constant(1, Scalar(1L)) - ParamRational::variable(1, 0));
  SeriesAtZero s = geo.series_coefficients_at_zero(0, 5);
  CHECK(s.min_exp == 0);
  for (int e = 0; e <= 5; ++e)
    CHECK(s.coeff(e) == LaurentMulti::constant(1, Scalar(1L)));
  CHECK_THROWS_AS(s.coeff(6), std::out_of_range);

  // 1/(y (y - y1)^2) has residue 1/y1^2 at y = 0.
  ParamRational y = ParamRational::variable(2, 0);
  ParamRational y1 = ParamRational::variable(2, 1);
  ParamRational f = ParamRational::constant(2, Scalar(1L)) / (y * (y - y1) * (y - y1));
  CHECK(f.residue_at_zero(0) == LaurentMulti::variable(2, 1, -2));

  // (1 - 16y^2)^2 / y^3 = y^-3 - 32 y^-1 + 256 y.
  LaurentMulti b16 = LaurentMulti::constant(1, Scalar(1L)) +
                     LaurentMulti::variable(1, 0, 2) * Scalar(-16L);
  ParamRational g(b16.pow(2), LaurentMulti::variable(1, 0, 3));
  SeriesAtZero gs = g.series_coefficients_at_zero(0, 1);
  CHECK(gs.min_exp == -3);
  CHECK(gs.coeff(-3) == LaurentMulti::constant(1, Scalar(1L)));
  CHECK(gs.coeff(-2).is_zero());
  CHECK(gs.coeff(-1) == LaurentMulti::constant(1, Scalar(-32L)));
  CHECK(gs.coeff(0).is_zero());
  CHECK(gs.coeff(1) == LaurentMulti::constant(1, Scalar(256L)));
  CHECK(g.residue_at_zero(0) == LaurentMulti::constant(1, Scalar(-32L)));

  // A denominator whose constant live term is not a monomial is rejected.
  ParamRational bad =
      ParamRational::constant(2, Scalar(1L)) /
      (ParamRational::variable(2, 0) *
       (ParamRational::variable(2, 1) + ParamRational::constant(2, Scalar(1L))));
  CHECK_THROWS_AS(bad.series_coefficients_at_zero(0, 0), std::domain_error);

  // Zero numerator: every requested coefficient reads zero.
  ParamRational zero(2);
  SeriesAtZero zs = zero.series_coefficients_at_zero(0, 3);
  CHECK(zs.coeff(-5).is_zero());
  CHECK(zs.coeff(3).is_zero());
}
