#include <doctest.h>

#include <cmath>

#include "discord/discord.hpp"
#include "discord/families.hpp"
#include "test_support.hpp"

using namespace discord;
using namespace discord::families;

TEST_CASE("family names and ranges") {
  CHECK(parse_family("werner") == Family::kWerner);
  CHECK(parse_family("zurek") == Family::kZurek);
  CHECK_THROWS_AS(parse_family("bell"), std::invalid_argument);
  CHECK(to_string(Family::kZurek) == "zurek");
  CHECK(physical_range(Family::kWerner).hi == doctest::Approx(1.0 / 3.0));
  CHECK(physical_range(Family::kZurek).lo == -1.0);
}

TEST_CASE("family states are validated") {
  CHECK_NOTHROW(werner(-1.0));
  CHECK_NOTHROW(werner(1.0 / 3.0));
  CHECK_NOTHROW(werner(0.3333333333333333));
  CHECK_NOTHROW(zurek(-1.0));
  try {
    (void)werner(0.5);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.violation() == Violation::kNegativeEigenvalue);
    CHECK(e.magnitude() == doctest::Approx(0.125));
  }
  CHECK_THROWS_AS(werner(-1.1), ValidationError);
  CHECK_THROWS_AS(zurek(1.2), ValidationError);
  CHECK(werner(0.1).require_split() == Split{2, 2});
}

TEST_CASE("reference curves at landmark parameters") {
  CHECK(alpha_werner_reference(0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(alpha_werner_reference(1.0 / 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(alpha_werner_reference(-1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(alpha_zurek_reference(0.0) == 0.0);
  CHECK(alpha_zurek_reference(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(alpha_zurek_reference(-1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(alpha_zurek_reference(0.5) == doctest::Approx(1.0 - 0.811278124459132863909695792039).epsilon(1e-14));
}

TEST_CASE("closed form reproduces the family curves") {
  for (int k = 0; k <= 12; ++k) {
    const double x = -1.0 + (4.0 / 3.0) * k / 12.0;
    CHECK(alpha_closed_form(werner(x)).value == doctest::Approx(alpha_werner_reference(x)).epsilon(1e-9));
  }
  for (int k = 0; k <= 10; ++k) {
    const double z = -1.0 + 0.2 * k;
    CHECK(alpha_closed_form(zurek(z)).value == doctest::Approx(alpha_zurek_reference(z)).epsilon(1e-9));
  }
}

TEST_CASE("werner symmetric discord equals its quantum discord") {
  for (double x : {-0.8, -0.3, 0.1, 0.2, 1.0 / 3.0}) {
    const auto rho = werner(x);
    CHECK(delta_opt(rho).value == doctest::Approx(alpha_closed_form(rho).value).epsilon(1e-8));
  }
}
