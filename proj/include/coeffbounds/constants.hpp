#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "coeffbounds/bounds.hpp"

namespace coeffbounds {

/// A printed constant next to the value re-derived from its defining condition.
struct PublishedConstant {
  std::string name;
  ClassName cls = ClassName::F1;
  double printed = 0;
  double recomputed = 0;
  bool exact = false;  // printed as a closed form
  std::string condition;
  double tolerance = 0;

  bool matches() const;
};

/// Interval endpoints r_i of the delta4 case analysis and t1 of the F2 delta5
/// extremal, each recomputed by root finding or maximization.
std::vector<PublishedConstant> published_constants();

/// Roots of h on (lo, hi): sign changes on a uniform scan of `samples`
/// points, each refined by TOMS 748.
std::vector<double> sign_change_roots(const std::function<double(double)>& h, double lo, double hi,
                                      int samples = 4000);

/// Argmax of f on [lo, hi]: scan, then Brent on the bracketing cell.
double argmax_1d(const std::function<double(double)>& f, double lo, double hi, int samples = 2000);

/// t maximizing |delta4| of F2 over H_{t,-1}, t in [0, 1/2].
double f2_delta4_t0();

/// t maximizing |delta5| of F2 over H_{t,-1}, t in [0, 1/2].
double f2_delta5_t1();

struct CaseMaximum {
  double value = 0;
  std::array<double, 3> argmax{};
};

/// Max of Q over {zeta1 in [-1,1], r in [0,1], d in [-1,1]}.
CaseMaximum q_maximum(int grid_n = 64);

/// Max of G over {zeta1 in [-1,1], r in [0,1], q3 in [0,1]}.
CaseMaximum g_maximum(int grid_n = 64);

}  // namespace coeffbounds
