#include "discord/search.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <thread>

namespace discord::search {

namespace {

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.index < b.index;
}

void offer(std::vector<Candidate>& best, Candidate c, std::size_t keep) {
  if (best.size() == keep && !better(c, best.back())) return;
  auto pos = std::upper_bound(best.begin(), best.end(), c, better);
  best.insert(pos, std::move(c));
  if (best.size() > keep) best.pop_back();
}

void decode(std::span<const GridAxis> axes, std::size_t index, std::vector<double>& point) {
  for (std::size_t a = axes.size(); a-- > 0;) {
    point[a] = axes[a].value(index % axes[a].steps);
    index /= axes[a].steps;
  }
}

struct GslObjective {
  const Objective* f;
  std::vector<double> scratch;
};

double gsl_trampoline(const gsl_vector* x, void* params) {
  auto* ctx = static_cast<GslObjective*>(params);
  for (std::size_t i = 0; i < ctx->scratch.size(); ++i) ctx->scratch[i] = gsl_vector_get(x, i);
  const double v = (*ctx->f)(ctx->scratch);
  return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

std::size_t grid_size(std::span<const GridAxis> axes) {
  std::size_t total = 1;
  for (const auto& a : axes) {
    if (a.steps == 0) throw std::invalid_argument("grid axis with zero steps");
    total *= a.steps;
  }
  return total;
}

std::vector<Candidate> grid_minimize(std::span<const GridAxis> axes, const Objective& f, std::size_t keep,
                                     unsigned threads) {
  const std::size_t total = grid_size(axes);
  keep = std::max<std::size_t>(keep, 1);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(1, total / 1024));

  std::vector<std::vector<Candidate>> partial(workers);
  auto run = [&](std::size_t w) {
    const std::size_t begin = total * w / workers;
    const std::size_t end = total * (w + 1) / workers;
    std::vector<double> point(axes.size());
    auto& best = partial[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      decode(axes, idx, point);
      const double v = f(point);
      if (!std::isfinite(v)) continue;
      if (best.size() == keep && !(v < best.back().value)) continue;
      offer(best, Candidate{v, idx, point}, keep);
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::vector<Candidate> merged;
  for (auto& part : partial)
    for (auto& c : part) offer(merged, std::move(c), keep);
  return merged;
}

RefineResult nelder_mead(const Objective& f, std::span<const double> start, std::span<const double> step,
                         const RefineOptions& options) {
  const std::size_t dim = start.size();
  if (step.size() != dim) throw std::invalid_argument("nelder_mead: step size mismatch");
  RefineResult result{f(start), {start.begin(), start.end()}, 0, false};
  if (dim == 0) return result;

  GslObjective ctx{&f, std::vector<double>(dim)};
  gsl_multimin_function fn{&gsl_trampoline, dim, &ctx};

  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(dim));
  std::unique_ptr<gsl_vector, VectorDeleter> ss(gsl_vector_alloc(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    gsl_vector_set(x.get(), i, start[i]);
    gsl_vector_set(ss.get(), i, step[i]);
  }
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> minimizer(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim));
  gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), ss.get());

  int iter = 0;
  int status = GSL_CONTINUE;
  while (status == GSL_CONTINUE && iter < options.iterations) {
    ++iter;
    if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) break;
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(minimizer.get()), options.simplex_tolerance);
  }

  result.iterations = iter;
  result.converged = status == GSL_SUCCESS;
  const double found = gsl_multimin_fminimizer_minimum(minimizer.get());
  if (found < result.value) {
    result.value = found;
    const gsl_vector* best = gsl_multimin_fminimizer_x(minimizer.get());
    for (std::size_t i = 0; i < dim; ++i) result.point[i] = gsl_vector_get(best, i);
  }
  return result;
}

}  // namespace discord::search
