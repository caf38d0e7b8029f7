// Acceptance checks. Each criterion prints one PASS/FAIL line; pass criterion
// names (c1..c8) as arguments to run a subset. Exit status 0 iff all selected pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "coeffbounds/bounds.hpp"
#include "coeffbounds/caratheodory.hpp"
#include "coeffbounds/commands.hpp"
#include "coeffbounds/constants.hpp"
#include "coeffbounds/omega.hpp"
#include "coeffbounds/series.hpp"

using namespace coeffbounds;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kSamples = 10000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome sharp_bounds() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  double worst_rel = 0, worst_ext = 0;
  for (ClassName c : {ClassName::F1, ClassName::F3, ClassName::F4}) {
    for (int n = 2; n <= 5; ++n) {
      const auto bc = verify_bound(c, n, SearchBudget{}, kSeed);
      const double bound = bc.bound.value;
      const double rel = std::abs(bc.search.max_value - bound) / bound;
      const double ext = std::abs(named_extremal(c, n).abs_delta - bound);
      worst_rel = std::max(worst_rel, rel);
      worst_ext = std::max(worst_ext, ext);
      if (!(rel <= 1e-4 && ext <= 1e-9)) {
        o.pass = false;
        o.detail += fmt::format(" {} n={} searched={:.17g};", to_string(c), n, bc.search.max_value);
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 60) o.pass = false;
  o.detail = fmt::format("worst relative gap {:.3g}, worst extremal deviation {:.3g}, {:.1f} s", worst_rel,
                         worst_ext, secs) +
             o.detail;
  return o;
}

Outcome f2_bounds() {
  Outcome o;
  std::vector<std::string> parts;
  for (int n = 2; n <= 5; ++n) {
    const double v = verify_bound(ClassName::F2, n, SearchBudget{}, kSeed).search.max_value;
    bool ok = false;
    if (n <= 3) ok = std::abs(v - 1) <= 1e-6;
    if (n == 4) {
      const double b = 16 / (3 * std::sqrt(15.0));
      ok = std::abs(v - b) <= 1e-4 * b;
    }
    if (n == 5) ok = v >= 791.0 / 392 - 1e-12 && v <= 2.947584 + 1e-8;
    o.pass = o.pass && ok;
    parts.push_back(fmt::format("n={} {:.12g}", n, v));
  }
  const auto ext = named_extremal(ClassName::F2, 5);
  const bool attained = std::abs(ext.abs_delta - 791.0 / 392) <= 1e-9;
  o.pass = o.pass && attained;
  o.detail = fmt::format("{}; H_(t1,-1) gives {:.12g}", fmt::join(parts, ", "), ext.abs_delta);
  return o;
}

Outcome omega_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg;
  cfg.command = Command::omega_check;
  cfg.seed = kSeed;
  cfg.samples = kSamples;
  cfg.grid = 64;
  const auto res = cmd_omega_check(cfg);
  double worst = 0;
  std::int64_t min_hits = kSamples;
  for (const auto& row : res.report.table.rows) {
    min_hits = std::min(min_hits, std::get<std::int64_t>(row[1]));
    worst = std::max(worst, std::get<double>(row[2]));
  }
  const double secs = seconds_since(t0);
  return {worst < 1e-6 && min_hits >= 500 && secs < 30,
          fmt::format("max deviation {:.3g}, fewest branch hits {}, {:.1f} s", worst, min_hits, secs)};
}

Outcome c4_identity() {
  double worst = 0, tampered = 0;
  for (const auto& z : sample_schur(kSeed, kSamples, false)) {
    worst = std::max(worst, verify_c4_identity(z));
    tampered = std::max(tampered, verify_c4_identity(z, c4_tampered));
  }
  return {worst < 1e-9 && tampered >= 1e-9,
          fmt::format("worst residual {:.3g}, negative control {:.3g}", worst, tampered)};
}

Outcome membership() {
  double det = 1e300, slack = 1e300;
  for (bool real : {false, true}) {
    for (const auto& z : sample_schur(kSeed, kSamples, real)) {
      const auto c = coeffs_from_schur(z);
      const auto d = toeplitz_validity(c);
      det = std::min(det, *std::min_element(d.begin(), d.end()));
      slack = std::min(slack, coefficient_slacks(c).worst());
    }
  }
  return {det >= -1e-9 && slack >= -1e-9, fmt::format("min determinant {:.3g}, min slack {:.3g}", det, slack)};
}

Outcome two_path() {
  double worst = 0;
  for (const auto& z : sample_schur(kSeed, kSamples, false)) {
    const auto c = coeffs_from_schur(z);
    for (const auto& spec : all_classes()) {
      const auto& b = spec.b;
      const auto direct = delta_from_bc(spec, c);
      const auto via = invert_series(series_from_ode(GeneratorCoeffs<Complex>{b.b2, b.b3, b.b4, b.b5}, c));
      for (int n = 2; n <= 5; ++n) {
        worst = std::max(worst, std::abs(direct[n] - via[n]) / std::max(1.0, std::abs(via[n])));
      }
    }
  }
  return {worst <= 1e-12, fmt::format("worst relative difference {:.3g}", worst)};
}

Outcome case_functions() {
  Outcome o;
  auto expect = [&](const std::string& name, double got, double want) {
    const bool ok = std::abs(got - want) <= 1e-9;
    o.pass = o.pass && ok;
    if (!ok) o.detail += fmt::format(" {}={:.17g} expected {:.17g};", name, got, want);
  };
  CaseFunctionArgs at21;
  at21.p = 2;
  at21.q = 1;
  expect("phi1(2,1)", case_function(CaseFunction::phi1, at21), 17.0 / 2);
  expect("phi3(2,1)", case_function(CaseFunction::phi3, at21), 19.0 / 2);
  expect("phi4(2,1)", case_function(CaseFunction::phi4, at21), 15);

  auto theta_max = [](CaseFunction f) {
    double best = -1e300;
    for (int i = 0; i <= 20000; ++i) {
      CaseFunctionArgs a;
      a.x = -1.0 + i / 10000.0;
      best = std::max(best, case_function(f, a));
    }
    return best;
  };
  expect("max theta_F1", theta_max(CaseFunction::theta_f1), 158.0 / 15);
  expect("max theta_F3", theta_max(CaseFunction::theta_f3), 68.0 / 5);
  expect("max theta_F4", theta_max(CaseFunction::theta_f4), 436.0 / 15);

  const double q = q_maximum().value;
  const bool q_ok = q >= 791.0 / 392 - 1e-6;
  o.pass = o.pass && q_ok;
  o.detail = fmt::format("phi and theta checkpoints exact, Q grid max {:.12g}", q) + o.detail;
  return o;
}

Outcome constants() {
  Outcome o;
  std::vector<std::string> misses;
  std::size_t count = 0;
  for (const auto& k : published_constants()) {
    ++count;
    if (!k.matches()) {
      o.pass = false;
      misses.push_back(fmt::format("{} {} recomputed {:.9g} vs printed {:.9g}", to_string(k.cls), k.name,
                                   k.recomputed, k.printed));
    }
  }
  o.detail = fmt::format("{}/{} reproduced", count - misses.size(), count);
  if (!misses.empty()) o.detail += fmt::format("; {}", fmt::join(misses, "; "));
  return o;
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"c1", "sharp bounds for F1, F3, F4", sharp_bounds},
      {"c2", "F2 bounds", f2_bounds},
      {"c3", "Omega closed form vs oracle", omega_equivalence},
      {"c4", "c4 identity and negative control", c4_identity},
      {"c5", "Caratheodory membership", membership},
      {"c6", "two-path inverse coefficients", two_path},
      {"c7", "case-function checkpoints", case_functions},
      {"c8", "recomputed interval constants", constants},
  };
  std::set<std::string> wanted(argv + 1, argv + argc);
  bool all_pass = true;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << o.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
