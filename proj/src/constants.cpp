#include "coeffbounds/constants.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "coeffbounds/errors.hpp"
#include "coeffbounds/optimizer.hpp"

namespace coeffbounds {

bool PublishedConstant::matches() const { return std::abs(recomputed - printed) <= tolerance; }

std::vector<double> sign_change_roots(const std::function<double(double)>& h, double lo, double hi,
                                      int samples) {
  std::vector<double> roots;
  // (x0, h0) is the last sample with h != 0, so touching zeros are skipped.
  double x0 = lo, h0 = h(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x1 = lo + (hi - lo) * i / samples;
    const double h1 = h(x1);
    if (h1 == 0) continue;
    if (h0 == 0) {
      x0 = x1;
      h0 = h1;
      continue;
    }
    if (h0 * h1 < 0) {
      std::uintmax_t iters = 200;
      const auto [a, b] = boost::math::tools::toms748_solve(
          h, x0, x1, h0, h1, boost::math::tools::eps_tolerance<double>(52), iters);
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    h0 = h1;
  }
  return roots;
}

double argmax_1d(const std::function<double(double)>& f, double lo, double hi, int samples) {
  int best = 0;
  double best_val = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double v = f(lo + (hi - lo) * i / samples);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double a = lo + (hi - lo) * std::max(best - 1, 0) / samples;
  const double b = lo + (hi - lo) * std::min(best + 1, samples) / samples;
  const auto [x, neg] = boost::math::tools::brent_find_minima(
      [&](double t) { return -f(t); }, a, b, std::numeric_limits<double>::digits / 2);
  return -neg >= best_val ? x : lo + (hi - lo) * best / samples;
}

namespace {

double h_family_delta(int n, double t) {
  const auto c = coeffs_from_extremal(ExtremalParams::h_family(t, Complex(-1, 0)));
  return std::abs(delta_from_bc(class_spec(ClassName::F2), c)[n]);
}

// Omega branch guards of the delta4 reduction for one class.
struct Guards {
  const ClassSpec& spec;

  OmegaInput at(double x) const { return delta4_psi_params(spec, x); }

  double ac(double x) const {
    const auto in = at(x);
    return in.a * in.c;
  }
  // |AB| - |C|(|B| - 4|A|): the spread_minus guard.
  double spread_minus(double x) const {
    const auto in = at(x);
    return std::abs(in.a * in.b) - std::abs(in.c) * (std::abs(in.b) - 4 * std::abs(in.a));
  }
  // |C|(|B| + 4|A|) - |AB|: the spread_plus guard.
  double spread_plus(double x) const {
    const auto in = at(x);
    return std::abs(in.c) * (std::abs(in.b) + 4 * std::abs(in.a)) - std::abs(in.a * in.b);
  }
  // -4AC(M^2 - C^2) - B^2 C^2: the opposed_minus guard.
  double opposed_minus(double x) const {
    const auto in = at(x);
    return -4 * in.a * in.c * (in.m * in.m - in.c * in.c) - in.b * in.b * in.c * in.c;
  }
  // B^2 + 4AC(M^2 / C^2 - 1): the opposed_plus guard.
  double opposed_plus(double x) const {
    const auto in = at(x);
    return in.b * in.b + 4 * in.a * in.c * (in.m * in.m / (in.c * in.c) - 1);
  }
};

constexpr double kEdge = 1e-9;
constexpr double kRootTol = 1e-5;

double pick(const std::vector<double>& roots, std::size_t i) {
  return i < roots.size() ? roots[i] : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::vector<PublishedConstant> published_constants() {
  std::vector<PublishedConstant> out;
  auto add = [&](std::string name, ClassName c, double printed, double recomputed, bool exact,
                 std::string condition, double tol) {
    out.push_back({std::move(name), c, printed, recomputed, exact, std::move(condition), tol});
  };

  {
    const Guards g{class_spec(ClassName::F1)};
    const auto ac = sign_change_roots([&](double x) { return g.ac(x); }, -1 + kEdge, -kEdge);
    const double r1 = pick(ac, 0);
    add("r1", ClassName::F1, -0.968128, r1, false, "A*C changes sign, first root on (-1,0)", kRootTol);
    add("r2", ClassName::F1, -0.361546, pick(ac, 1), false, "A*C changes sign, second root on (-1,0)",
        kRootTol);
    add("r3", ClassName::F1, -0.0549415, pick(ac, 2), false, "A*C changes sign, third root on (-1,0)",
        kRootTol);
    const auto s = sign_change_roots([&](double x) { return g.spread_minus(x); }, -1 + kEdge, r1);
    add("r4", ClassName::F1, -0.983158, pick(s, 0), false, "|AB| = |C|(|B|-4|A|) on (-1,r1)", kRootTol);
  }
  {
    const Guards g{class_spec(ClassName::F2)};
    const auto ac = sign_change_roots([&](double x) { return g.ac(x); }, -1 + kEdge, 1 - kEdge);
    const double r1 = pick(ac, 0);
    const double exact = std::sqrt(7.0 / 13);
    add("r1", ClassName::F2, -exact, r1, true, "A*C changes sign on (-1,0)", 1e-12);
    add("r2", ClassName::F2, exact, pick(ac, 1), true, "A*C changes sign on (0,1)", 1e-12);
    const auto s1 = sign_change_roots([&](double x) { return g.spread_plus(x); }, -1 + kEdge, r1);
    add("r3", ClassName::F2, -0.907485, pick(s1, 0), false, "|C|(|B|+4|A|) = |AB| on (-1,r1)",
        kRootTol);
    const auto s2 = sign_change_roots([&](double x) { return g.spread_minus(x); }, -1 + kEdge, r1);
    add("r4", ClassName::F2, -0.767772, pick(s2, 0), false, "|AB| = |C|(|B|-4|A|) on (-1,r1)",
        kRootTol);
  }
  {
    const Guards g{class_spec(ClassName::F3)};
    const auto ac = sign_change_roots([&](double x) { return g.ac(x); }, -1 + kEdge, -kEdge);
    const double r1 = pick(ac, 0);
    add("r1", ClassName::F3, -0.257982, r1, false, "A*C changes sign on (-1,0)", kRootTol);
    const auto om = sign_change_roots([&](double x) { return g.opposed_minus(x); }, -1 + kEdge, r1);
    add("r2", ClassName::F3, -0.29465, pick(om, 0), false, "-4AC(M^2-C^2) = B^2 C^2 on (-1,r1)",
        kRootTol);
  }
  {
    const Guards g{class_spec(ClassName::F4)};
    const auto ac = sign_change_roots([&](double x) { return g.ac(x); }, -1 + kEdge, -kEdge);
    const double r1 = pick(ac, 0);
    add("r1", ClassName::F4, -0.318042, r1, false, "A*C changes sign on (-1,0)", kRootTol);
    const auto op = sign_change_roots([&](double x) { return g.opposed_plus(x); }, -1 + kEdge, r1);
    const double r2 = pick(op, 0);
    add("r2", ClassName::F4, -0.67332, r2, false, "B^2 + 4AC(M^2/C^2-1) = 0 on (-1,r1)", kRootTol);
    const auto s = sign_change_roots([&](double x) { return g.spread_minus(x); }, r2, r1);
    add("r3", ClassName::F4, -0.395298, pick(s, 0), false, "|AB| = |C|(|B|-4|A|) on (r2,r1)",
        kRootTol);
  }
  add("t1", ClassName::F2, (14 - std::sqrt(105.0)) / 56, f2_delta5_t1(), true,
      "argmax of |delta5| over H_{t,-1}, t in [0,1/2]", 1e-6);
  return out;
}

double f2_delta4_t0() {
  return argmax_1d([](double t) { return h_family_delta(4, t); }, 0, 0.5);
}

double f2_delta5_t1() {
  return argmax_1d([](double t) { return h_family_delta(5, t); }, 0, 0.5);
}

namespace {

CaseMaximum box_maximum(CaseFunction f, const std::array<RealInterval, 3>& box, int grid_n,
                        const std::function<CaseFunctionArgs(const Point&)>& args) {
  SearchSpace space;
  space.dims.assign(box.begin(), box.end());
  space.budget.grid_n = grid_n;
  const auto res = maximize([&](const Point& p) { return case_function(f, args(p)); }, space);
  return {res.max_value, {res.argmax[0], res.argmax[1], res.argmax[2]}};
}

}  // namespace

CaseMaximum q_maximum(int grid_n) {
  return box_maximum(CaseFunction::Q, {RealInterval{-1, 1}, RealInterval{0, 1}, RealInterval{-1, 1}},
                     grid_n, [](const Point& p) {
                       CaseFunctionArgs a;
                       a.zeta1 = p[0];
                       a.r = p[1];
                       a.d = p[2];
                       return a;
                     });
}

CaseMaximum g_maximum(int grid_n) {
  return box_maximum(CaseFunction::G, {RealInterval{-1, 1}, RealInterval{0, 1}, RealInterval{0, 1}},
                     grid_n, [](const Point& p) {
                       CaseFunctionArgs a;
                       a.zeta1 = p[0];
                       a.r = p[1];
                       a.q3 = p[2];
                       return a;
                     });
}

}  // namespace coeffbounds
