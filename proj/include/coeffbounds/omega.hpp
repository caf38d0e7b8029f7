#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "coeffbounds/types.hpp"

namespace coeffbounds {

/// Real parameters of  max_{|v| <= 1} |M| (1 - |v|^2) + |A + B v + C v^2|.
struct OmegaInput {
  double a = 0, b = 0, c = 0, m = 0;
};

/// Which piece of the closed form produced the value.
enum class OmegaBranch : int {
  kAlignedSum = 0,   // AC >= 0:  |A| + |B| + |C|
  kAlignedPeak,      // AC >= 0:  |M| + |A| + B^2 / (4(|M| - |C|))
  kOpposedMinus,     // AC < 0:   |M| - |A| + B^2 / (4(|M| - |C|))
  kOpposedPlus,      // AC < 0:   |M| + |A| + B^2 / (4(|M| + |C|))
  kSpreadPlus,       // S:        |A| + |B| - |C|
  kSpreadMinus,      // S:        -|A| + |B| + |C|
  kSpreadRoot,       // S:        (|C| + |A|) sqrt(1 - B^2 / (4AC))
};

inline constexpr int kOmegaBranchCount = 7;

std::string_view to_string(OmegaBranch b);

struct OmegaValue {
  double value = 0;
  OmegaBranch branch = OmegaBranch::kAlignedSum;
};

/// Objective at one point of the closed disk.
double omega_objective(const OmegaInput& in, Complex v);

/// Piecewise closed form. Guards are tested in the listed order and ties go to
/// the earlier case; a guard whose denominator |M| - |C| vanishes cannot hold,
/// so the value always comes from a finite branch.
OmegaValue omega_closed_form(const OmegaInput& in);

struct OracleResult {
  double value = 0;
  Complex argmax{};
};

/// Brute force: polar grid of grid_n radii by 4 grid_n angles (boundary and
/// centre included), then pattern-search refinement from the best grid maxima.
OracleResult omega_oracle(const OmegaInput& in, int grid_n);

/// `count` inputs with A, B, C uniform on [-10, 10] and M drawn from {0, 1,
/// U[0, 10]}, filled so each branch receives count / 7 of them (rounded up).
struct StratifiedSample {
  std::vector<OmegaInput> inputs;
  std::vector<OmegaBranch> branches;
  std::array<int, kOmegaBranchCount> hits{};
};

StratifiedSample stratified_omega_inputs(std::uint64_t seed, std::size_t count);

}  // namespace coeffbounds
