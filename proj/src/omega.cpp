#include "coeffbounds/omega.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <tuple>

#include "coeffbounds/errors.hpp"
#include "coeffbounds/random.hpp"

namespace coeffbounds {

std::string_view to_string(OmegaBranch b) {
  switch (b) {
    case OmegaBranch::kAlignedSum: return "aligned_sum";
    case OmegaBranch::kAlignedPeak: return "aligned_peak";
    case OmegaBranch::kOpposedMinus: return "opposed_minus";
    case OmegaBranch::kOpposedPlus: return "opposed_plus";
    case OmegaBranch::kSpreadPlus: return "spread_plus";
    case OmegaBranch::kSpreadMinus: return "spread_minus";
    case OmegaBranch::kSpreadRoot: return "spread_root";
  }
  return "unknown";
}

double omega_objective(const OmegaInput& in, Complex v) {
  return std::abs(in.m) * (1.0 - std::norm(v)) + std::abs(in.a + in.b * v + in.c * v * v);
}

OmegaValue omega_closed_form(const OmegaInput& in) {
  const double a = in.a, b = in.b, c = in.c, m = in.m;
  const double abs_a = std::abs(a), abs_b = std::abs(b), abs_c = std::abs(c), abs_m = std::abs(m);
  const double bb = b * b;

  if (a * c >= 0) {
    // |B| < 2(|M| - |C|) forces |M| > |C|, so the denominator is positive.
    if (abs_b >= 2.0 * (abs_m - abs_c)) return {abs_a + abs_b + abs_c, OmegaBranch::kAlignedSum};
    return {abs_m + abs_a + bb / (4.0 * (abs_m - abs_c)), OmegaBranch::kAlignedPeak};
  }

  // AC < 0, hence C != 0.
  if (-4.0 * a * c * (m * m - c * c) <= bb * c * c && abs_b < 2.0 * (abs_m - abs_c)) {
    return {abs_m - abs_a + bb / (4.0 * (abs_m - abs_c)), OmegaBranch::kOpposedMinus};
  }
  const double outer = 4.0 * (abs_m + abs_c) * (abs_m + abs_c);
  const double inner = -4.0 * a * c * (m * m / (c * c) - 1.0);
  if (bb < std::min(outer, inner)) {
    return {abs_m + abs_a + bb / (4.0 * (abs_m + abs_c)), OmegaBranch::kOpposedPlus};
  }

  if (abs_c * (abs_b + 4.0 * abs_a) <= abs_a * abs_b) {
    return {abs_a + abs_b - abs_c, OmegaBranch::kSpreadPlus};
  }
  if (abs_a * abs_b <= abs_c * (abs_b - 4.0 * abs_a)) {
    return {-abs_a + abs_b + abs_c, OmegaBranch::kSpreadMinus};
  }
  const double radicand = 1.0 - bb / (4.0 * a * c);
  assert(radicand >= 1.0);
  return {(abs_c + abs_a) * std::sqrt(radicand), OmegaBranch::kSpreadRoot};
}

namespace {

Complex project(Complex v) {
  const double r = std::abs(v);
  return r > 1.0 ? v / r : v;
}

// Compass search with projection onto the disk; returns the local maximum.
std::pair<double, Complex> refine(const OmegaInput& in, Complex start, double step) {
  constexpr double h = std::numbers::sqrt2 / 2;
  static const std::array<Complex, 8> kDirs = {Complex(1, 0),  Complex(-1, 0), Complex(0, 1),
                                               Complex(0, -1), Complex(h, h),  Complex(-h, h),
                                               Complex(h, -h), Complex(-h, -h)};
  Complex best = start;
  double best_val = omega_objective(in, best);
  for (int iter = 0; iter < 20000 && step > 1e-13; ++iter) {
    Complex cand_best = best;
    double cand_val = best_val;
    for (const Complex& d : kDirs) {
      const Complex trial = project(best + step * d);
      const double val = omega_objective(in, trial);
      if (val > cand_val) {
        cand_val = val;
        cand_best = trial;
      }
    }
    if (cand_val > best_val) {
      best = cand_best;
      best_val = cand_val;
    } else {
      step *= 0.5;
    }
  }
  return {best_val, best};
}

}  // namespace

OracleResult omega_oracle(const OmegaInput& in, int grid_n) {
  if (grid_n < 2) throw DomainError("omega_oracle needs grid_n >= 2");
  const int n_r = grid_n;
  const int n_t = 4 * grid_n;
  std::vector<double> values(static_cast<std::size_t>(n_r) * n_t);
  auto at = [&](int i, int j) -> double& { return values[static_cast<std::size_t>(i) * n_t + j]; };
  auto point = [&](int i, int j) {
    return std::polar(static_cast<double>(i) / (n_r - 1), 2.0 * std::numbers::pi * j / n_t);
  };
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n_t; ++j) at(i, j) = i == 0 ? omega_objective(in, 0.0) : omega_objective(in, point(i, j));
  }

  // Grid local maxima (8-neighbourhood, periodic in angle), best first.
  std::vector<std::tuple<double, int, int>> peaks;
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < (i == 0 ? 1 : n_t); ++j) {
      const double v = at(i, j);
      bool is_peak = true;
      for (int di = -1; di <= 1 && is_peak; ++di) {
        const int ii = i + di;
        if (ii < 0 || ii >= n_r) continue;
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (at(ii, (j + dj + n_t) % n_t) > v) {
            is_peak = false;
            break;
          }
        }
      }
      if (is_peak) peaks.emplace_back(v, i, j);
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
    return std::tie(std::get<1>(x), std::get<2>(x)) < std::tie(std::get<1>(y), std::get<2>(y));
  });

  OracleResult best;
  best.value = -1.0;
  const double step = 2.0 / grid_n;
  const std::size_t starts = std::min<std::size_t>(peaks.size(), 6);
  for (std::size_t k = 0; k < starts; ++k) {
    const auto [v, i, j] = peaks[k];
    const auto [val, arg] = refine(in, i == 0 ? Complex(0.0) : point(i, j), step);
    if (val > best.value) best = {val, arg};
  }
  return best;
}

StratifiedSample stratified_omega_inputs(std::uint64_t seed, std::size_t count) {
  std::array<std::size_t, kOmegaBranchCount> quota{};
  for (int b = 0; b < kOmegaBranchCount; ++b) {
    quota[b] = count / kOmegaBranchCount + (static_cast<std::size_t>(b) < count % kOmegaBranchCount ? 1 : 0);
  }
  StratifiedSample out;
  out.inputs.reserve(count);
  out.branches.reserve(count);
  const std::uint64_t max_draws = 4000 * static_cast<std::uint64_t>(count) + 1000000;
  auto eng = stream_engine(seed, 0);
  for (std::uint64_t draw = 0; out.inputs.size() < count; ++draw) {
    if (draw >= max_draws) throw Error("stratified_omega_inputs: a branch quota could not be filled");
    OmegaInput in;
    in.a = 20.0 * uniform01(eng) - 10.0;
    in.b = 20.0 * uniform01(eng) - 10.0;
    in.c = 20.0 * uniform01(eng) - 10.0;
    const double pick = uniform01(eng);
    const double m_draw = 10.0 * uniform01(eng);
    in.m = pick < 1.0 / 3.0 ? 0.0 : (pick < 2.0 / 3.0 ? 1.0 : m_draw);
    const OmegaBranch br = omega_closed_form(in).branch;
    const int idx = static_cast<int>(br);
    if (static_cast<std::size_t>(out.hits[idx]) >= quota[idx]) continue;
    ++out.hits[idx];
    out.inputs.push_back(in);
    out.branches.push_back(br);
  }
  return out;
}

}  // namespace coeffbounds
