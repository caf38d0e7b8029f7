#include "coeffbounds/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "coeffbounds/errors.hpp"
#include "coeffbounds/parallel.hpp"
#include "coeffbounds/random.hpp"

namespace coeffbounds {

void SearchSpace::validate() const {
  if (dims.empty()) throw ConfigError("search space has no dimensions");
  if (budget.grid_n < 8) throw ConfigError("grid_n must be at least 8");
  if (budget.multistart_k < 1) throw ConfigError("multistart_k must be at least 1");
  if (budget.refine_iters < 0) throw ConfigError("refine_iters must be non-negative");
  if (budget.max_grid_points < 1) throw ConfigError("max_grid_points must be positive");
  for (const auto& d : dims) {
    if (const auto* iv = std::get_if<RealInterval>(&d); iv && !(iv->lo < iv->hi)) {
      throw ConfigError("interval needs lo < hi");
    }
  }
}

int SearchSpace::ambient_size() const {
  int n = 0;
  for (const auto& d : dims) n += std::holds_alternative<UnitDisk>(d) ? 2 : 1;
  return n;
}

int thread_limit() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("COEFF_BOUNDS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, 1024));
  }
  return hw;
}

namespace {

constexpr std::uint64_t kBlock = 4096;

struct Candidate {
  double value;
  std::uint64_t index;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.value != b.value ? a.value > b.value : a.index < b.index;
}

// Keeps the best `cap` candidates seen.
class TopK {
 public:
  explicit TopK(std::size_t cap) : cap_(cap) {}

  void offer(Candidate c) {
    if (heap_.size() < cap_) {
      heap_.push_back(c);
      std::push_heap(heap_.begin(), heap_.end(), better);
    } else if (better(c, heap_.front())) {
      std::pop_heap(heap_.begin(), heap_.end(), better);
      heap_.back() = c;
      std::push_heap(heap_.begin(), heap_.end(), better);
    }
  }

  std::vector<Candidate>& items() { return heap_; }

 private:
  std::size_t cap_;
  std::vector<Candidate> heap_;  // heap front is the worst kept
};

class Lattice {
 public:
  Lattice(const SearchSpace& space) : space_(space) {
    const int n = space.budget.grid_n;
    total_ = 1.0;
    for (const auto& d : space.dims) {
      const std::uint64_t k = std::holds_alternative<UnitDisk>(d)
                                  ? 1 + static_cast<std::uint64_t>(n) * 4 * n
                                  : static_cast<std::uint64_t>(n) + 1;
      sizes_.push_back(k);
      total_ *= static_cast<double>(k);
    }
  }

  bool fits(std::size_t cap) const { return total_ <= static_cast<double>(cap); }
  std::uint64_t total() const { return static_cast<std::uint64_t>(total_); }
  const std::vector<std::uint64_t>& sizes() const { return sizes_; }

  // Writes the point for per-dimension node indices into p.
  void point(const std::vector<std::uint64_t>& node, Point& p) const {
    const int n = space_.budget.grid_n;
    int k = 0;
    for (std::size_t i = 0; i < space_.dims.size(); ++i) {
      if (const auto* iv = std::get_if<RealInterval>(&space_.dims[i])) {
        const auto j = node[i];
        p[k++] = j == static_cast<std::uint64_t>(n) ? iv->hi : iv->lo + (iv->hi - iv->lo) * j / n;
      } else {
        if (node[i] == 0) {
          p[k++] = 0;
          p[k++] = 0;
        } else {
          const auto m = node[i] - 1;
          const double r = static_cast<double>(m / (4 * n) + 1) / n;
          const double a = 2 * std::numbers::pi * static_cast<double>(m % (4 * n)) / (4 * n);
          p[k++] = r * std::cos(a);
          p[k++] = r * std::sin(a);
        }
      }
    }
  }

  void decode(std::uint64_t flat, std::vector<std::uint64_t>& node) const {
    for (std::size_t i = sizes_.size(); i-- > 0;) {
      node[i] = flat % sizes_[i];
      flat /= sizes_[i];
    }
  }

 private:
  const SearchSpace& space_;
  std::vector<std::uint64_t> sizes_;
  double total_;
};

void project(const SearchSpace& space, Point& p) {
  int k = 0;
  for (const auto& d : space.dims) {
    if (const auto* iv = std::get_if<RealInterval>(&d)) {
      p[k] = std::clamp(p[k], iv->lo, iv->hi);
      ++k;
    } else {
      const double r = std::hypot(p[k], p[k + 1]);
      if (r > 1) {
        p[k] /= r;
        p[k + 1] /= r;
      }
      k += 2;
    }
  }
}

std::vector<double> to_vector(const Point& p) { return {p.data(), p.data() + p.size()}; }

double evaluate(const Objective& f, const Point& p) {
  const double v = f(p);
  if (!std::isfinite(v)) throw EvaluationError("objective is not finite", to_vector(p));
  return v;
}

struct Refined {
  double value;
  Point x;
  std::uint64_t evaluations;
};

Refined refine(const Objective& f, const SearchSpace& space, Point x, double value) {
  const int dim = static_cast<int>(x.size());
  Eigen::VectorXd step0(dim);
  int k = 0;
  for (const auto& d : space.dims) {
    if (const auto* iv = std::get_if<RealInterval>(&d)) {
      step0[k++] = (iv->hi - iv->lo) / space.budget.grid_n;
    } else {
      step0[k++] = 1.0 / space.budget.grid_n;
      step0[k++] = 1.0 / space.budget.grid_n;
    }
  }
  Eigen::VectorXd step = step0;
  std::uint64_t evals = 0;
  Point trial(dim), best_trial(dim);
  for (int poll = 0; poll < space.budget.refine_iters && step.maxCoeff() > 1e-13; ++poll) {
    double best_val = value;
    for (int i = 0; i < dim; ++i) {
      for (const double sign : {1.0, -1.0}) {
        trial = x;
        trial[i] += sign * step[i];
        project(space, trial);
        const double v = evaluate(f, trial);
        ++evals;
        if (v > best_val) {
          best_val = v;
          best_trial = trial;
        }
      }
    }
    if (best_val > value) {
      value = best_val;
      x = best_trial;
      step = (2 * step).cwiseMin(step0);
    } else {
      step *= 0.5;
    }
  }
  return {value, std::move(x), evals};
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

SearchResult maximize(const Objective& f, const SearchSpace& space, int threads) {
  space.validate();
  const int workers = threads > 0 ? std::min(threads, thread_limit()) : thread_limit();
  const int dim = space.ambient_size();
  const Lattice lattice(space);
  const bool full = lattice.fits(space.budget.max_grid_points);
  const std::uint64_t count = full ? lattice.total() : space.budget.max_grid_points;
  const std::size_t keep = static_cast<std::size_t>(space.budget.multistart_k) * 64;

  // Grid scan in fixed blocks; subsampled nodes come from a per-block stream.
  std::vector<TopK> local(static_cast<std::size_t>(workers), TopK(keep));
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  parallel_for(blocks, workers, [&](std::uint64_t b, int w) {
    std::vector<std::uint64_t> node(space.dims.size());
    Point p(dim);
    auto eng = stream_engine(space.seed, b);
    const std::uint64_t end = std::min(count, (b + 1) * kBlock);
    for (std::uint64_t i = b * kBlock; i < end; ++i) {
      if (full) {
        lattice.decode(i, node);
      } else {
        for (std::size_t d = 0; d < node.size(); ++d) node[d] = eng() % lattice.sizes()[d];
      }
      lattice.point(node, p);
      local[static_cast<std::size_t>(w)].offer({evaluate(f, p), i});
    }
  });

  std::vector<Candidate> cands;
  for (auto& t : local) cands.insert(cands.end(), t.items().begin(), t.items().end());
  std::sort(cands.begin(), cands.end(), better);
  if (cands.size() > keep) cands.resize(keep);

  // Points of the kept candidates; a subsampled index is replayed from its block stream.
  auto candidate_point = [&](std::uint64_t i) {
    std::vector<std::uint64_t> node(space.dims.size());
    if (full) {
      lattice.decode(i, node);
    } else {
      auto eng = stream_engine(space.seed, i / kBlock);
      for (std::uint64_t j = (i / kBlock) * kBlock; j <= i; ++j) {
        for (std::size_t d = 0; d < node.size(); ++d) node[d] = eng() % lattice.sizes()[d];
      }
    }
    Point p(dim);
    lattice.point(node, p);
    return p;
  };

  // Well-separated starts first, then the rest in rank order.
  const double sep = 2.0 / space.budget.grid_n;
  std::vector<Point> pts;
  for (const auto& c : cands) pts.push_back(candidate_point(c.index));
  std::vector<std::size_t> starts;
  std::vector<bool> used(cands.size(), false);
  for (std::size_t i = 0; i < cands.size() && starts.size() < static_cast<std::size_t>(space.budget.multistart_k); ++i) {
    bool far = true;
    for (const auto s : starts) far = far && (pts[i] - pts[s]).lpNorm<Eigen::Infinity>() > sep;
    if (far) {
      starts.push_back(i);
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < cands.size() && starts.size() < static_cast<std::size_t>(space.budget.multistart_k); ++i) {
    if (!used[i]) starts.push_back(i);
  }

  std::vector<Refined> refined(starts.size(), Refined{0, Point(), 0});
  parallel_for(starts.size(), workers, [&](std::uint64_t s, int) {
    const std::size_t i = starts[s];
    refined[s] = refine(f, space, pts[i], cands[i].value);
  });

  SearchResult res;
  res.evaluations = count;
  res.max_value = cands.front().value;
  res.argmax = pts.front();
  res.trace.push_back({0, res.max_value});
  for (std::size_t s = 0; s < refined.size(); ++s) {
    const auto& r = refined[s];
    res.evaluations += r.evaluations;
    if (r.value > res.max_value || (r.value == res.max_value && lex_less(r.x, res.argmax))) {
      res.max_value = r.value;
      res.argmax = r.x;
    }
    res.trace.push_back({static_cast<int>(s) + 1, res.max_value});
  }
  return res;
}

}  // namespace coeffbounds
