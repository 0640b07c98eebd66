#include "discord/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "discord/measurement.hpp"

namespace discord {

Split DensityMatrix::require_split() const {
  if (!split_) throw DimensionError("operation requires a bipartite state (no split given)");
  return *split_;
}

DensityMatrix validate(ComplexMatrix m, std::optional<Split> split) {
  if (split && (split->m == 0 || split->n == 0 || split->m * split->n != m.dim())) {
    std::ostringstream msg;
    msg << "split " << split->m << " x " << split->n << " does not match dimension " << m.dim();
    throw ValidationError(Violation::kSplit, 0.0, msg.str());
  }
  if (m.dim() == 0) throw ValidationError(Violation::kTrace, 1.0, "empty matrix");

  const double herm = m.hermitian_deviation();
  if (herm > kStateTolerance) {
    std::ostringstream msg;
    msg << "max |rho - rho^dagger| = " << herm;
    throw ValidationError(Violation::kNotHermitian, herm, msg.str());
  }
  const Complex tr = m.trace();
  const double trace_dev = std::abs(tr - Complex(1.0, 0.0));
  if (trace_dev > kStateTolerance) {
    std::ostringstream msg;
    msg << "trace = " << tr.real() << " (deviation " << trace_dev << ")";
    throw ValidationError(Violation::kTrace, trace_dev, msg.str());
  }
  const auto spectrum = hermitian_eigendecomposition(m);
  const double lowest = spectrum.eigenvalues.back();
  if (lowest < -kStateTolerance) {
    std::ostringstream msg;
    msg << "smallest eigenvalue " << lowest;
    throw ValidationError(Violation::kNegativeEigenvalue, -lowest, msg.str());
  }
  return DensityMatrix(std::move(m), split);
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities)
    if (p > kEntropyFloor) h -= p * std::log2(p);
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy(hermitian_eigendecomposition(rho.matrix()).eigenvalues);
}

DensityMatrix reduced_S(const DensityMatrix& rho) {
  const auto [m, n] = rho.require_split();
  return validate(partial_trace_A(rho.matrix(), m, n));
}

DensityMatrix reduced_A(const DensityMatrix& rho) {
  const auto [m, n] = rho.require_split();
  return validate(partial_trace_S(rho.matrix(), m, n));
}

DensityMatrix swap_subsystems(const DensityMatrix& rho) {
  const auto [m, n] = rho.require_split();
  return validate(swap_factors(rho.matrix(), m, n), Split{n, m});
}

Split SeparableSpec::split() const {
  if (components.empty()) return {};
  return {components.front().s.dim(), components.front().a.dim()};
}

SeparableSpec make_separable_spec(std::vector<double> weights, std::vector<SeparableComponent> components) {
  if (weights.empty() || weights.size() != components.size()) {
    throw ValidationError(Violation::kProbability, 0.0, "need one weight per component and at least one component");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ValidationError(Violation::kProbability, -w, "negative mixing weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError(Violation::kProbability, std::abs(total - 1.0), "mixing weights do not sum to 1");
  }
  const std::size_t m = components.front().s.dim();
  const std::size_t n = components.front().a.dim();
  for (const auto& c : components) {
    if (c.s.dim() != m || c.a.dim() != n) throw DimensionError("separable components must share dimensions");
  }
  return {std::move(weights), std::move(components)};
}

DensityMatrix assemble_separable(const SeparableSpec& spec) {
  const Split split = spec.split();
  ComplexMatrix joint(split.m * split.n);
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    joint += spec.weights[i] * tensor_product(spec.components[i].s.matrix(), spec.components[i].a.matrix());
  }
  try {
    return validate(std::move(joint), split);
  } catch (const ValidationError& e) {
    throw InternalConsistencyError(std::string("assembled separable state failed validation: ") + e.what());
  }
}

DensityMatrix classical_classical(const std::vector<std::vector<double>>& p, const MeasurementBasis& basis_s,
                                  const MeasurementBasis& basis_a) {
  const std::size_t m = basis_s.dim();
  const std::size_t n = basis_a.dim();
  if (p.size() != m) throw DimensionError("probability table rows must match the S basis dimension");
  double total = 0.0;
  for (const auto& row : p) {
    if (row.size() != n) throw DimensionError("probability table columns must match the A basis dimension");
    for (double v : row) {
      if (!(v >= 0.0)) throw ValidationError(Violation::kProbability, -v, "negative probability");
      total += v;
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError(Violation::kProbability, std::abs(total - 1.0), "probability table does not sum to 1");
  }
  ComplexMatrix joint(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p[i][j] == 0.0) continue;
      joint += p[i][j] * tensor_product(basis_s.projector(i), basis_a.projector(j));
    }
  return validate(std::move(joint), Split{m, n});
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::mt19937_64& rng) {
  if (dim == 0 || rank == 0 || rank > dim) {
    throw std::invalid_argument("random_density: need 1 <= rank <= dim");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> g(dim * rank);
  for (auto& z : g) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = {re, im};
  }
  ComplexMatrix rho(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < rank; ++k) s += g[i * rank + k] * std::conj(g[j * rank + k]);
      rho(i, j) = s;
    }
  rho *= 1.0 / rho.trace().real();
  return validate(std::move(rho));
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_density(dim, rank, rng);
}

std::vector<double> random_simplex_point(std::size_t size, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(size);
  for (auto& x : w) x = expo(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  // Absorb rounding so the weights sum to 1 to working precision.
  const double drift = 1.0 - std::accumulate(w.begin(), w.end(), 0.0);
  *std::max_element(w.begin(), w.end()) += drift;
  return w;
}

SeparableSpec random_separable(std::size_t m, std::size_t n, std::size_t components, std::mt19937_64& rng) {
  if (components == 0 || m == 0 || n == 0) throw std::invalid_argument("random_separable: invalid parameters");
  auto weights = random_simplex_point(components, rng);
  std::vector<SeparableComponent> parts;
  parts.reserve(components);
  for (std::size_t i = 0; i < components; ++i) {
    auto s = random_density(m, m, rng);
    auto a = random_density(n, n, rng);
    parts.push_back({std::move(s), std::move(a)});
  }
  return make_separable_spec(std::move(weights), std::move(parts));
}

SeparableSpec random_separable(std::size_t m, std::size_t n, std::size_t components, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_separable(m, n, components, rng);
}

bool has_positive_partial_transpose(const DensityMatrix& rho) {
  const auto [m, n] = rho.require_split();
  ComplexMatrix pt(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          pt(joint_index(i, k, n), joint_index(j, l, n)) = rho.matrix()(joint_index(i, l, n), joint_index(j, k, n));
  return hermitian_eigendecomposition(pt).eigenvalues.back() >= -kStateTolerance;
}

}  // namespace discord
