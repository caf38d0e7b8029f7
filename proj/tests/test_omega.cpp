#include <cmath>

#include "coeffbounds/omega.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coeffbounds;

TEST_CASE("omega closed form examples") {
  const auto one = omega_closed_form({0, 0, 0, 1});
  CHECK(one.value == 1.0);
  CHECK(one.branch == OmegaBranch::kAlignedPeak);

  const auto sum = omega_closed_form({1, 1, 0, 0});
  CHECK(sum.value == 2.0);
  CHECK(sum.branch == OmegaBranch::kAlignedSum);

  const auto peak = omega_closed_form({1, 0, 0, 2});
  CHECK(peak.value == 3.0);
  CHECK(peak.branch == OmegaBranch::kAlignedPeak);
  CHECK(oracle::omega_grid(1, 0, 0, 2) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("omega oracle examples") {
  CHECK(std::abs(omega_oracle({0, 0, 0, 1}, 64).value - 1) < 1e-6);
  CHECK(std::abs(omega_oracle({1, 1, 0, 0}, 64).value - 2) < 1e-6);
  const OmegaInput shape{1, -7.0 / 3 * (1 + 2 * -0.7), 0.7, 1};
  CHECK(std::abs(omega_oracle(shape, 64).value - omega_closed_form(shape).value) < 1e-6);
}

TEST_CASE("vanishing denominator routes to a finite branch") {
  const OmegaInput cases[] = {{1, 0.5, 1, 1}, {1, 0.5, -1, 1}, {-2, 3, 1, -1}, {0.3, 0, -2, 2}};
  for (const auto& in : cases) {
    const auto v = omega_closed_form(in);
    CHECK(std::isfinite(v.value));
    CHECK(std::abs(v.value - omega_oracle(in, 64).value) < 1e-6);
    CHECK(std::abs(v.value - oracle::omega_grid(in.a, in.b, in.c, in.m)) < 1e-3);
  }
}

TEST_CASE("omega probe lower bound and homogeneity") {
  const auto sample = stratified_omega_inputs(11, 700);
  const Complex probes[] = {0, 1, -1, Complex(0, 1), Complex(0, -1)};
  for (const auto& in : sample.inputs) {
    const double v = omega_closed_form(in).value;
    for (Complex p : probes) CHECK(v >= omega_objective(in, p) - 1e-12);
    if (in.m == 0) {
      for (double lambda : {-2.0, 0.5}) {
        const double scaled = omega_closed_form({lambda * in.a, lambda * in.b, lambda * in.c, 0}).value;
        CHECK(std::abs(scaled - std::abs(lambda) * v) < 1e-9);
      }
    }
  }
}

TEST_CASE("stratified sampling") {
  const auto s = stratified_omega_inputs(42, 10000);
  REQUIRE(s.inputs.size() == 10000);
  for (int h : s.hits) CHECK(h >= 500);
  for (std::size_t i = 0; i < s.inputs.size(); ++i) CHECK(omega_closed_form(s.inputs[i]).branch == s.branches[i]);
  const auto again = stratified_omega_inputs(42, 10000);
  CHECK(again.inputs.back().a == s.inputs.back().a);
}

TEST_CASE("closed form matches the oracle on every branch") {
  const auto s = stratified_omega_inputs(5, 1400);
  std::array<double, kOmegaBranchCount> worst{};
  for (std::size_t i = 0; i < s.inputs.size(); ++i) {
    const double d = std::abs(omega_closed_form(s.inputs[i]).value - omega_oracle(s.inputs[i], 64).value);
    auto& w = worst[static_cast<int>(s.branches[i])];
    w = std::max(w, d);
  }
  for (int b = 0; b < kOmegaBranchCount; ++b) {
    CAPTURE(to_string(static_cast<OmegaBranch>(b)));
    CHECK(worst[b] < 1e-6);
  }
}

TEST_CASE("library oracle agrees with an independent grid") {
  const auto s = stratified_omega_inputs(3, 35);
  for (const auto& in : s.inputs) {
    const double lib = omega_oracle(in, 64).value;
    const double grid = oracle::omega_grid(in.a, in.b, in.c, in.m);
    CHECK(lib >= grid - 1e-12);
    CHECK(lib - grid < 2e-3 * std::max(1.0, lib));
  }
}
