#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "coeffbounds/bounds.hpp"
#include "coeffbounds/caratheodory.hpp"
#include "coeffbounds/optimizer.hpp"
#include "coeffbounds/report.hpp"

namespace coeffbounds {

enum class Command { verify, identities, extremals, omega_check };

Command parse_command(const std::string& s);

struct RunConfig {
  Command command = Command::verify;
  std::optional<ClassName> cls;
  std::optional<int> n;
  std::uint64_t seed = 42;
  std::optional<int> grid;
  std::optional<int> refine;
  std::optional<int> multistart;
  std::optional<std::size_t> samples;
  Format format = Format::json;
  std::optional<std::filesystem::path> out;
  bool negative_control = false;  // identities only: swap in a tampered c4 formula

  /// Throws ConfigError for out-of-range filters or budgets.
  void validate() const;
};

enum class BoundStatus { sharp_match, within_range, shortfall, violation };

std::string_view to_string(BoundStatus s);

/// Ambient layout of a (class, n) search: zeta1 as a disk, or as [-1, 1]
/// when it must be real, followed by the disks of the zeta_k that delta_n uses.
SearchSpace bound_search_space(ClassName c, int n, const SearchBudget& budget, std::uint64_t seed);
SchurParams schur_from_point(ClassName c, int n, const Point& p);

struct BoundCheck {
  ClassName cls = ClassName::F1;
  int n = 2;
  PublishedBound bound;
  SearchResult search;
  SchurParams argmax;
  BoundStatus status = BoundStatus::shortfall;
};

BoundStatus classify(ClassName c, int n, double searched_max);

BoundCheck verify_bound(ClassName c, int n, const SearchBudget& budget, std::uint64_t seed);

/// The extremal named for (class, n) and the |delta_n| it attains.
struct ExtremalCheck {
  std::string label;
  ExtremalParams params;
  bool derived = false;  // parameter found numerically
  CaratheodoryCoeffs<> c;
  std::array<Complex, 4> a{};  // a2..a5
  double abs_delta = 0;
  double target = 0;
};

ExtremalCheck named_extremal(ClassName c, int n);

/// The tampered formula used by the negative control: sign of the zeta4 term flipped.
Complex c4_tampered(const SchurParams& z);

struct CommandResult {
  Report report;
  int exit_code = 0;
};

CommandResult cmd_verify_bounds(const RunConfig& cfg);
CommandResult cmd_identity_suite(const RunConfig& cfg, const C4Formula& c4 = c4_from_schur);
CommandResult cmd_extremals(const RunConfig& cfg);
CommandResult cmd_omega_check(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandResult run(const RunConfig& cfg);

}  // namespace coeffbounds
