#include <cmath>
#include <cstdlib>
#include <limits>

#include "coeffbounds/bounds.hpp"
#include "coeffbounds/commands.hpp"
#include "coeffbounds/errors.hpp"
#include "coeffbounds/optimizer.hpp"
#include "doctest.h"

using namespace coeffbounds;

namespace {

SearchSpace interval_space(double lo, double hi) {
  SearchSpace s;
  s.dims = {RealInterval{lo, hi}};
  return s;
}

bool same(const SearchResult& a, const SearchResult& b) {
  return a.max_value == b.max_value && a.argmax == b.argmax && a.evaluations == b.evaluations;
}

}  // namespace

TEST_CASE("search space validation") {
  SearchSpace empty;
  CHECK_THROWS_AS(empty.validate(), ConfigError);
  auto s = interval_space(1, 1);
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = interval_space(0, 1);
  s.budget.grid_n = 4;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.budget.grid_n = 8;
  s.budget.multistart_k = 0;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  SearchSpace mixed;
  mixed.dims = {RealInterval{-1, 1}, UnitDisk{}, UnitDisk{}};
  CHECK(mixed.ambient_size() == 5);
}

TEST_CASE("maximize 1 - x^2") {
  const auto r = maximize([](const Point& p) { return 1 - p[0] * p[0]; }, interval_space(-1, 1));
  CHECK(std::abs(r.max_value - 1) < 1e-8);
  CHECK(std::abs(r.argmax[0]) < 1e-4);
  CHECK(r.evaluations > 0);
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace.front().iteration == 0);
  CHECK(r.trace.back().best == r.max_value);
}

TEST_CASE("maximize phi1") {
  SearchSpace s;
  s.dims = {RealInterval{0, 2}, RealInterval{-1, 1}};
  const auto r = maximize(
      [](const Point& p) {
        CaseFunctionArgs a;
        a.p = p[0];
        a.q = p[1];
        return case_function(CaseFunction::phi1, a);
      },
      s);
  CHECK(std::abs(r.max_value - 17.0 / 2) < 1e-6);
  CHECK(r.argmax[0] == doctest::Approx(2));
  CHECK(r.argmax[1] == doctest::Approx(1));
}

TEST_CASE("maximize |delta4| for F1") {
  const auto check = verify_bound(ClassName::F1, 4, SearchBudget{}, 42);
  CHECK(std::abs(check.search.max_value - 49.0 / 8) < 1e-4 * 49.0 / 8);
  CHECK(check.status == BoundStatus::sharp_match);
  CHECK(check.argmax.zeta1.imag() == 0.0);
}

TEST_CASE("result value matches the objective at the argmax") {
  SearchSpace s;
  s.dims = {UnitDisk{}, RealInterval{0, 3}};
  const Objective f = [](const Point& p) {
    return std::sin(3 * p[0]) + std::cos(2 * p[1]) * p[2] - 0.1 * p[2] * p[2];
  };
  const auto r = maximize(f, s);
  CHECK(std::abs(r.max_value - f(r.argmax)) <= 1e-12);
  CHECK(r.argmax[0] * r.argmax[0] + r.argmax[1] * r.argmax[1] <= 1 + 1e-15);
}

TEST_CASE("determinism across thread counts") {
  SearchSpace s;
  s.dims = {RealInterval{-1, 1}, UnitDisk{}};
  s.budget.grid_n = 12;
  const Objective f = [](const Point& p) {
    return std::cos(5 * p[0]) * p[1] + std::sin(7 * p[2]) + p[0] * p[2];
  };
  const auto one = maximize(f, s, 1);
  const auto four = maximize(f, s, 4);
  const auto again = maximize(f, s, 3);
  CHECK(same(one, four));
  CHECK(same(one, again));

  // A lattice above the scan limit is subsampled from the seed.
  s.budget.max_grid_points = 500;
  const auto sub1 = maximize(f, s, 1);
  const auto sub4 = maximize(f, s, 4);
  CHECK(same(sub1, sub4));
}

TEST_CASE("non-finite objective raises with the point") {
  const Objective f = [](const Point& p) {
    return p[0] > 0.5 ? std::numeric_limits<double>::quiet_NaN() : p[0];
  };
  try {
    maximize(f, interval_space(0, 1));
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    REQUIRE(e.point().size() == 1);
    CHECK(e.point()[0] > 0.5);
  }
}

TEST_CASE("grid includes boundaries") {
  // Objectives that are only positive at an exact boundary point.
  const auto end = maximize([](const Point& p) { return p[0] == 1.0 ? 1.0 : 0.0; }, interval_space(-1, 1));
  CHECK(end.max_value == 1.0);
  SearchSpace disk;
  disk.dims = {UnitDisk{}};
  const auto rim = maximize(
      [](const Point& p) { return p[0] == 1.0 && p[1] == 0.0 ? 1.0 : 0.0; }, disk);
  CHECK(rim.max_value == 1.0);
  const auto centre = maximize([](const Point& p) { return p[0] == 0.0 && p[1] == 0.0 ? 1.0 : 0.0; }, disk);
  CHECK(centre.max_value == 1.0);
}

TEST_CASE("doubling grid_n does not decrease the maximum") {
  SearchSpace s;
  s.dims = {RealInterval{-2, 2}, RealInterval{-2, 2}};
  s.budget.refine_iters = 0;
  const Objective f = [](const Point& p) {
    return std::sin(4 * p[0]) * std::cos(3 * p[1]) + 0.2 * p[0];
  };
  double prev = -1e300;
  for (int g : {8, 16, 32, 64}) {
    s.budget.grid_n = g;
    const double v = maximize(f, s).max_value;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("thread limit") {
  ::setenv("COEFF_BOUNDS_THREADS", "3", 1);
  CHECK(thread_limit() == 3);
  ::unsetenv("COEFF_BOUNDS_THREADS");
  CHECK(thread_limit() >= 1);
}
