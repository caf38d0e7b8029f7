#include "coeffbounds/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coeffbounds/constants.hpp"
#include "coeffbounds/errors.hpp"
#include "coeffbounds/omega.hpp"
#include "coeffbounds/parallel.hpp"
#include "coeffbounds/series.hpp"

namespace coeffbounds {

Command parse_command(const std::string& s) {
  if (s == "verify") return Command::verify;
  if (s == "identities") return Command::identities;
  if (s == "extremals") return Command::extremals;
  if (s == "omega-check") return Command::omega_check;
  throw ConfigError("unknown command '" + s + "'");
}

void RunConfig::validate() const {
  if (n && (*n < 2 || *n > 5)) throw ConfigError("--n must be in 2..5");
  if (grid && *grid < 8) throw ConfigError("--grid must be at least 8");
  if (refine && *refine < 0) throw ConfigError("--refine must be non-negative");
  if (multistart && *multistart < 1) throw ConfigError("--multistart must be at least 1");
  if (samples && *samples < 1) throw ConfigError("--samples must be at least 1");
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::sharp_match: return "sharp_match";
    case BoundStatus::within_range: return "within_range";
    case BoundStatus::shortfall: return "shortfall";
    case BoundStatus::violation: return "violation";
  }
  return "?";
}

SearchSpace bound_search_space(ClassName c, int n, const SearchBudget& budget, std::uint64_t seed) {
  if (n < 2 || n > 5) throw DomainError("n must be in 2..5");
  SearchSpace s;
  s.budget = budget;
  s.seed = seed;
  if (requires_real_zeta1(c, n)) {
    s.dims.push_back(RealInterval{-1, 1});
  } else {
    s.dims.push_back(UnitDisk{});
  }
  // delta_n involves zeta_1 .. zeta_{n-1}.
  for (int k = 2; k < n; ++k) s.dims.push_back(UnitDisk{});
  return s;
}

SchurParams schur_from_point(ClassName c, int n, const Point& p) {
  SchurParams z;
  int k = 0;
  if (requires_real_zeta1(c, n)) {
    z.zeta1 = Complex(p[k++], 0.0);
    z.real_zeta1 = true;
  } else {
    z.zeta1 = Complex(p[0], p[1]);
    k = 2;
  }
  Complex* rest[] = {&z.zeta2, &z.zeta3, &z.zeta4};
  for (int j = 0; j < n - 2; ++j, k += 2) *rest[j] = Complex(p[k], p[k + 1]);
  return z;
}

BoundStatus classify(ClassName c, int n, double searched) {
  const PublishedBound b = published_bound(c, n);
  if (searched > b.value + kTolerances.bound) return BoundStatus::violation;
  if (!b.sharp) {
    return searched >= b.lower - 1e-4 ? BoundStatus::within_range : BoundStatus::shortfall;
  }
  const bool absolute = c == ClassName::F2 && n <= 3;
  const double tol = absolute ? 1e-6 : 1e-4 * b.value;
  return std::abs(searched - b.value) <= tol ? BoundStatus::sharp_match : BoundStatus::shortfall;
}

BoundCheck verify_bound(ClassName c, int n, const SearchBudget& budget, std::uint64_t seed) {
  const ClassSpec& spec = class_spec(c);
  BoundCheck out;
  out.cls = c;
  out.n = n;
  out.bound = published_bound(c, n);
  const SearchSpace space = bound_search_space(c, n, budget, seed);
  out.search = maximize([&](const Point& p) { return delta_objective(spec, n, schur_from_point(c, n, p)); },
                        space);
  out.argmax = schur_from_point(c, n, out.search.argmax);
  out.status = classify(c, n, out.search.max_value);
  return out;
}

ExtremalCheck named_extremal(ClassName c, int n) {
  if (n < 2 || n > 5) throw DomainError("n must be in 2..5");
  ExtremalCheck e;
  e.label = "P_{1,0}";
  e.params = ExtremalParams::p_family(1.0, 0.0);
  if (c == ClassName::F2 && n == 3) {
    e.label = "P_{0,0}";
    e.params = ExtremalParams::p_family(0.0, 0.0);
  } else if (c == ClassName::F2 && n == 4) {
    e.label = "H_{t0,-1}";
    e.params = ExtremalParams::h_family(f2_delta4_t0(), Complex(-1, 0));
    e.derived = true;
  } else if (c == ClassName::F2 && n == 5) {
    e.label = "H_{t1,-1}";
    e.params = ExtremalParams::h_family((14 - std::sqrt(105.0)) / 56, Complex(-1, 0));
  }
  e.c = coeffs_from_extremal(e.params);
  const auto& b = class_spec(c).b;
  const auto f = series_from_ode(GeneratorCoeffs<Complex>{b.b2, b.b3, b.b4, b.b5}, e.c);
  for (int k = 0; k < 4; ++k) e.a[k] = f[k + 2];
  e.abs_delta = std::abs(invert_series(f)[n]);
  e.target = published_bound(c, n).lower;
  return e;
}

Complex c4_tampered(const SchurParams& z) {
  const double s1 = 1 - std::norm(z.zeta1), s2 = 1 - std::norm(z.zeta2), s3 = 1 - std::norm(z.zeta3);
  return c4_from_schur(z) - 4.0 * s1 * s2 * s3 * z.zeta4;
}

namespace {

SearchBudget budget_from(const RunConfig& cfg) {
  SearchBudget b;
  if (cfg.grid) b.grid_n = *cfg.grid;
  if (cfg.refine) b.refine_iters = *cfg.refine;
  if (cfg.multistart) b.multistart_k = *cfg.multistart;
  return b;
}

std::vector<ClassName> selected_classes(const RunConfig& cfg) {
  if (cfg.cls) return {*cfg.cls};
  return {ClassName::F1, ClassName::F2, ClassName::F3, ClassName::F4};
}

std::vector<int> selected_orders(const RunConfig& cfg) {
  if (cfg.n) return {*cfg.n};
  return {2, 3, 4, 5};
}

std::string cls_str(ClassName c) { return std::string(to_string(c)); }

// Consecutive stretches of zeta1 in (-1, 1) on which the Omega branch of the
// delta4 reduction is constant, with the largest reduced bound on each.
CaseTable delta4_case_table(ClassName c) {
  const ClassSpec& spec = class_spec(c);
  CaseTable ct;
  ct.title = cls_str(c) + " delta4 by zeta1 interval: (1 - zeta1^2)/2 Omega(A, B, C, 1)";
  ct.table.columns = {"from", "to", "branch", "max_delta4"};
  constexpr int kSteps = 20000;
  double start = -1, best = 0;
  OmegaBranch current{};
  bool open = false;
  for (int i = 1; i < kSteps; ++i) {
    const double x = -1 + 2.0 * i / kSteps;
    const OmegaBranch br = omega_closed_form(delta4_psi_params(spec, x)).branch;
    const double v = delta4_reduced(spec, x);
    if (open && br != current) {
      ct.table.rows.push_back({start, x, std::string(to_string(current)), best});
      open = false;
    }
    if (!open) {
      start = i == 1 ? -1.0 : x;
      current = br;
      best = v;
      open = true;
    }
    best = std::max(best, v);
  }
  ct.table.rows.push_back({start, 1.0, std::string(to_string(current)), best});
  return ct;
}

}  // namespace

CommandResult cmd_verify_bounds(const RunConfig& cfg) {
  cfg.validate();
  const SearchBudget budget = budget_from(cfg);
  Report r;
  r.command = "verify";
  r.seed = cfg.seed;
  r.meta = {{"grid_n", std::int64_t{budget.grid_n}},
            {"refine_iters", std::int64_t{budget.refine_iters}},
            {"multistart_k", std::int64_t{budget.multistart_k}},
            {"max_grid_points", static_cast<std::int64_t>(budget.max_grid_points)}};
  r.table.columns = {"class",     "n",         "paper_bound", "paper_lower", "searched_max", "gap",
                     "status",    "zeta1_re",  "zeta1_im",    "zeta2_re",    "zeta2_im",     "zeta3_re",
                     "zeta3_im",  "zeta4_re",  "zeta4_im",    "evaluations", "extremal",     "extremal_value"};
  for (const ClassName c : selected_classes(cfg)) {
    for (const int n : selected_orders(cfg)) {
      const BoundCheck bc = verify_bound(c, n, budget, cfg.seed);
      const ExtremalCheck ex = named_extremal(c, n);
      const auto& z = bc.argmax;
      r.table.rows.push_back({cls_str(c), std::int64_t{n}, bc.bound.value, bc.bound.lower,
                              bc.search.max_value, bc.bound.value - bc.search.max_value,
                              std::string(to_string(bc.status)), z.zeta1.real(), z.zeta1.imag(),
                              z.zeta2.real(), z.zeta2.imag(), z.zeta3.real(), z.zeta3.imag(),
                              z.zeta4.real(), z.zeta4.imag(),
                              static_cast<std::int64_t>(bc.search.evaluations), ex.label, ex.abs_delta});
      if (bc.status == BoundStatus::violation || bc.status == BoundStatus::shortfall) r.passed = false;
    }
  }
  if (cfg.format == Format::text) {
    const auto orders = selected_orders(cfg);
    if (std::find(orders.begin(), orders.end(), 4) != orders.end()) {
      for (const ClassName c : selected_classes(cfg)) {
        if (c != ClassName::F1) r.case_tables.push_back(delta4_case_table(c));
      }
    }
  }
  const int code = r.passed ? 0 : 2;
  return {std::move(r), code};
}

CommandResult cmd_identity_suite(const RunConfig& cfg, const C4Formula& c4) {
  cfg.validate();
  const std::size_t count = cfg.samples.value_or(10000);
  const int oracle_grid = cfg.grid.value_or(64);
  const int threads = thread_limit();
  const Tolerances& tol = kTolerances;

  Report r;
  r.command = "identities";
  r.seed = cfg.seed;
  r.meta = {{"samples", static_cast<std::int64_t>(count)}, {"oracle_grid", std::int64_t{oracle_grid}}};
  r.table.columns = {"check", "samples", "worst", "tolerance", "passed"};
  auto add = [&](const std::string& name, std::size_t n, double worst, double limit, bool ok) {
    r.table.rows.push_back({name, static_cast<std::int64_t>(n), worst, limit, ok});
    r.passed = r.passed && ok;
  };

  const auto interior = sample_schur(cfg.seed, count, false);
  std::vector<double> c4_res(count), toep(count), slack(count), two_path(count);
  parallel_for(count, threads, [&](std::uint64_t i, int) {
    const SchurParams& z = interior[i];
    c4_res[i] = verify_c4_identity(z, c4);
    const auto c = coeffs_from_schur(z);
    const auto d = toeplitz_validity(c);
    toep[i] = *std::min_element(d.begin(), d.end());
    slack[i] = coefficient_slacks(c).worst();
    double worst = 0;
    for (const auto& spec : all_classes()) {
      const auto direct = delta_from_bc(spec, c);
      const auto& b = spec.b;
      const auto via = invert_series(series_from_ode(GeneratorCoeffs<Complex>{b.b2, b.b3, b.b4, b.b5}, c));
      for (int n = 2; n <= 5; ++n) {
        worst = std::max(worst, std::abs(direct[n] - via[n]) / std::max(1.0, std::abs(via[n])));
      }
    }
    two_path[i] = worst;
  });
  const double c4_worst = *std::max_element(c4_res.begin(), c4_res.end());
  add("c4_identity", count, c4_worst, tol.c4_identity, c4_worst < tol.c4_identity);
  const double toep_worst = *std::min_element(toep.begin(), toep.end());
  add("toeplitz_min_determinant", count, toep_worst, -tol.toeplitz, toep_worst >= -tol.toeplitz);
  const double slack_worst = *std::min_element(slack.begin(), slack.end());
  add("coefficient_inequality_slack", count, slack_worst, -tol.inequality_slack, slack_worst >= -tol.inequality_slack);
  const double tp_worst = *std::max_element(two_path.begin(), two_path.end());
  add("two_path_delta", count, tp_worst, tol.two_path, tp_worst <= tol.two_path);

  const StratifiedSample omega = stratified_omega_inputs(cfg.seed, count);
  std::vector<double> dev(count);
  parallel_for(count, threads, [&](std::uint64_t i, int) {
    dev[i] = std::abs(omega_closed_form(omega.inputs[i]).value - omega_oracle(omega.inputs[i], oracle_grid).value);
  });
  const double omega_worst = *std::max_element(dev.begin(), dev.end());
  add("omega_closed_form_vs_oracle", count, omega_worst, tol.omega, omega_worst < tol.omega);

  const int code = r.passed ? 0 : 2;
  return {std::move(r), code};
}

CommandResult cmd_extremals(const RunConfig& cfg) {
  cfg.validate();
  Report r;
  r.command = "extremals";
  r.seed = cfg.seed;
  r.table.columns = {"class", "n", "extremal", "t", "derived", "a2", "a3", "a4", "a5",
                     "abs_delta", "target", "deviation", "attains"};
  for (const ClassName c : selected_classes(cfg)) {
    for (const int n : selected_orders(cfg)) {
      const ExtremalCheck e = named_extremal(c, n);
      const double dev = std::abs(e.abs_delta - e.target);
      const bool ok = dev <= 1e-9;
      r.table.rows.push_back({cls_str(c), std::int64_t{n}, e.label, e.params.t, e.derived, e.a[0].real(),
                              e.a[1].real(), e.a[2].real(), e.a[3].real(), e.abs_delta, e.target, dev, ok});
      r.passed = r.passed && ok;
    }
  }
  const int code = r.passed ? 0 : 2;
  return {std::move(r), code};
}

CommandResult cmd_omega_check(const RunConfig& cfg) {
  cfg.validate();
  const std::size_t count = cfg.samples.value_or(10000);
  const int grid = cfg.grid.value_or(64);
  const StratifiedSample s = stratified_omega_inputs(cfg.seed, count);
  std::vector<double> dev(count);
  parallel_for(count, thread_limit(), [&](std::uint64_t i, int) {
    dev[i] = std::abs(omega_closed_form(s.inputs[i]).value - omega_oracle(s.inputs[i], grid).value);
  });
  std::array<double, kOmegaBranchCount> worst{};
  for (std::size_t i = 0; i < count; ++i) {
    auto& w = worst[static_cast<std::size_t>(s.branches[i])];
    w = std::max(w, dev[i]);
  }

  Report r;
  r.command = "omega-check";
  r.seed = cfg.seed;
  r.meta = {{"samples", static_cast<std::int64_t>(count)}, {"grid", std::int64_t{grid}},
            {"tolerance", kTolerances.omega}};
  r.table.columns = {"branch", "hits", "max_deviation", "passed"};
  for (int b = 0; b < kOmegaBranchCount; ++b) {
    const bool ok = worst[b] < kTolerances.omega && s.hits[b] > 0;
    r.table.rows.push_back({std::string(to_string(static_cast<OmegaBranch>(b))), std::int64_t{s.hits[b]},
                            worst[b], ok});
    r.passed = r.passed && ok;
  }
  const int code = r.passed ? 0 : 2;
  return {std::move(r), code};
}

CommandResult run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::verify: return cmd_verify_bounds(cfg);
    case Command::identities:
      return cfg.negative_control ? cmd_identity_suite(cfg, c4_tampered) : cmd_identity_suite(cfg);
    case Command::extremals: return cmd_extremals(cfg);
    case Command::omega_check: return cmd_omega_check(cfg);
  }
  throw ConfigError("unknown command");
}

}  // namespace coeffbounds
