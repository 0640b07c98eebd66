#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace discord::search {

using Objective = std::function<double(std::span<const double>)>;

/// `steps` equally spaced samples of [lo, hi): lo + (hi - lo) * k / steps.
struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t steps = 1;

  [[nodiscard]] double value(std::size_t k) const { return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps); }
  [[nodiscard]] double spacing() const { return (hi - lo) / static_cast<double>(steps); }
};

struct Candidate {
  double value = 0.0;
  std::size_t index = 0;  // lexicographic grid index, first axis slowest
  std::vector<double> point;
};

/**
 * @brief Exhaustive grid evaluation, returning the `keep` best points.
 *
 * Grid points are split into contiguous chunks evaluated on up to `threads`
 * workers (0 = hardware concurrency). Candidates are ordered by value and then
 * by grid index, so the result does not depend on the thread count.
 */
std::vector<Candidate> grid_minimize(std::span<const GridAxis> axes, const Objective& f, std::size_t keep = 1,
                                     unsigned threads = 0);

struct RefineOptions {
  int iterations = 200;
  double simplex_tolerance = 1e-10;
};

struct RefineResult {
  double value = 0.0;
  std::vector<double> point;
  int iterations = 0;
  bool converged = false;
};

/// Nelder-Mead polish from `start` with initial simplex steps `step`.
RefineResult nelder_mead(const Objective& f, std::span<const double> start, std::span<const double> step,
                         const RefineOptions& options);

/// Number of points spanned by the axes.
std::size_t grid_size(std::span<const GridAxis> axes);

}  // namespace discord::search
