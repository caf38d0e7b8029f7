#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace coeffbounds {

struct RealInterval {
  double lo = 0, hi = 1;
};

/// Closed unit disk; occupies two ambient coordinates (real, imaginary).
struct UnitDisk {};

using Dimension = std::variant<RealInterval, UnitDisk>;

struct SearchBudget {
  int grid_n = 24;        // intervals per real dimension; disks use grid_n radii x 4 grid_n angles
  int refine_iters = 300; // polls per multistart
  int multistart_k = 8;
  std::size_t max_grid_points = std::size_t{1} << 23;  // larger lattices are subsampled
};

struct SearchSpace {
  std::vector<Dimension> dims;
  SearchBudget budget;
  std::uint64_t seed = 42;

  /// Throws ConfigError on an empty space, grid_n < 8, multistart_k < 1 or lo >= hi.
  void validate() const;
  int ambient_size() const;
};

/// Ambient coordinates: one per interval, two per disk, in dimension order.
using Point = Eigen::VectorXd;

using Objective = std::function<double(const Point&)>;

struct TraceEntry {
  int iteration = 0;  // 0 after the grid scan, k after the k-th multistart
  double best = 0;
};

struct SearchResult {
  double max_value = 0;
  Point argmax;
  std::uint64_t evaluations = 0;
  std::vector<TraceEntry> trace;
};

/// Parallelism from COEFF_BOUNDS_THREADS, else the hardware concurrency.
int thread_limit();

/// Grid scan, then pattern search from the best well-separated grid points.
/// Bit-identical for a fixed (objective, space) whatever the thread count.
/// Throws EvaluationError carrying the point if the objective is not finite.
SearchResult maximize(const Objective& objective, const SearchSpace& space, int threads = 0);

}  // namespace coeffbounds
