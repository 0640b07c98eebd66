#include "discord/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace discord {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSkipOutcome = 1e-12;

/// Entropy (bits) of a Hermitian PSD matrix given up to normalization `scale`.
double spectrum_entropy(const ComplexMatrix& c, double scale) {
  if (c.dim() == 2) {
    const double a = c(0, 0).real() / scale;
    const double d = c(1, 1).real() / scale;
    const double b = std::abs(c(0, 1)) / scale;
    const double mean = 0.5 * (a + d);
    const double radius = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    const double ev[2] = {mean + radius, mean - radius};
    return shannon_entropy(ev);
  }
  ComplexMatrix normalized = c;
  normalized *= 1.0 / scale;
  return shannon_entropy(hermitian_eigendecomposition(normalized).eigenvalues);
}

/// Unnormalized conditional operator on S after outcome |v> on A:
/// C[i, i'] = sum_{k,l} conj(v_k) rho[i n + k, i' n + l] v_l.
void conditional_operator(const ComplexMatrix& rho, std::size_t m, std::size_t n, const ComplexMatrix& ua,
                          std::size_t j, ComplexMatrix& out) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t ip = 0; ip < m; ++ip) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        Complex row = 0.0;
        for (std::size_t l = 0; l < n; ++l) row += rho(joint_index(i, k, n), joint_index(ip, l, n)) * ua(l, j);
        acc += std::conj(ua(k, j)) * row;
      }
      out(i, ip) = acc;
    }
}

/// sum_j p_j H(rho_{S|j}) for the orthonormal columns of ua.
double one_sided_from_unitary(const ComplexMatrix& rho, std::size_t m, std::size_t n, const ComplexMatrix& ua) {
  ComplexMatrix c(m);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    conditional_operator(rho, m, n, ua, j, c);
    const double p = c.trace().real();
    if (p < kSkipOutcome) continue;
    total += p * spectrum_entropy(c, p);
  }
  return total;
}

/// P[i * n + j] = <u_i (x) v_j| rho |u_i (x) v_j>, clipped at zero.
void joint_outcomes(const ComplexMatrix& rho, const ComplexMatrix& us, const ComplexMatrix& ua,
                    std::vector<double>& p, std::vector<Complex>& w) {
  const std::size_t m = us.dim();
  const std::size_t n = ua.dim();
  const std::size_t d = m * n;
  p.assign(d, 0.0);
  w.resize(d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t a = 0; a < n; ++a) w[joint_index(s, a, n)] = us(s, i) * ua(a, j);
      double acc = 0.0;
      for (std::size_t r = 0; r < d; ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < d; ++c) row += rho(r, c) * w[c];
        acc += (std::conj(w[r]) * row).real();
      }
      p[joint_index(i, j, n)] = acc < 0.0 ? 0.0 : acc;
    }
}

std::vector<double> marginal_a(const std::vector<double>& p, std::size_t m, std::size_t n) {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j] += p[joint_index(i, j, n)];
  return out;
}

std::vector<search::GridAxis> givens_axes(std::size_t dim, std::size_t theta_steps, double phi_hi,
                                          std::size_t phi_steps) {
  std::vector<search::GridAxis> axes;
  for (std::size_t k = 0; k < dim * (dim - 1) / 2; ++k) {
    axes.push_back({0.0, kPi, theta_steps});
    axes.push_back({0.0, phi_hi, phi_steps});
  }
  return axes;
}

/// Largest per-angle resolution r <= preferred with r^count <= budget (at least 2).
std::size_t fit_resolution(std::size_t preferred, std::size_t count, std::size_t budget) {
  if (count == 0) return preferred;
  std::size_t r = preferred;
  while (r > 2 && std::pow(static_cast<double>(r), static_cast<double>(count)) > static_cast<double>(budget)) --r;
  return r;
}

std::vector<double> axis_steps(std::span<const search::GridAxis> axes) {
  std::vector<double> step;
  step.reserve(axes.size());
  for (const auto& a : axes) step.push_back(a.spacing());
  return step;
}

/// Grid search followed by Nelder-Mead from each of the `starts` best grid points.
search::RefineResult grid_then_refine(std::span<const search::GridAxis> axes, const search::Objective& f,
                                      std::size_t starts, const SearchConfig& config, std::size_t& evaluations) {
  const auto candidates = search::grid_minimize(axes, f, starts, config.threads);
  evaluations += search::grid_size(axes);
  const auto step = axis_steps(axes);
  search::RefineResult best{candidates.front().value, candidates.front().point, 0, false};
  for (const auto& c : candidates) {
    auto refined = search::nelder_mead(f, c.point, step, config.refine);
    evaluations += static_cast<std::size_t>(refined.iterations);
    if (refined.value < best.value) best = std::move(refined);
  }
  return best;
}

/// Eigenbasis of a marginal with its degenerate blocks rotated by Givens parameters.
ComplexMatrix rotated_eigenbasis(const EigenBasis& eig, std::span<const double> params) {
  const std::size_t d = eig.basis.dim();
  ComplexMatrix w = ComplexMatrix::identity(d);
  std::size_t offset = 0;
  for (const auto& [begin, end] : eig.degenerate_blocks) {
    const std::size_t k = end - begin;
    const auto g = givens_unitary(k, params.subspan(offset, givens_parameter_count(k)));
    offset += givens_parameter_count(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) w(begin + r, begin + c) = g(r, c);
  }
  return eig.basis.vectors() * w;
}

std::size_t block_parameter_count(const EigenBasis& eig) {
  std::size_t count = 0;
  for (const auto& [begin, end] : eig.degenerate_blocks) count += givens_parameter_count(end - begin);
  return count;
}

}  // namespace

double mutual_information(const DensityMatrix& rho) {
  (void)rho.require_split();
  return von_neumann_entropy(reduced_S(rho)) + von_neumann_entropy(reduced_A(rho)) - von_neumann_entropy(rho);
}

double conditional_entropy_one_sided(const DensityMatrix& rho, const MeasurementBasis& basis_a) {
  const auto [m, n] = rho.require_split();
  if (basis_a.dim() != n) throw DimensionError("basis on A has dimension " + std::to_string(basis_a.dim()) +
                                               ", expected " + std::to_string(n));
  return one_sided_from_unitary(rho.matrix(), m, n, basis_a.vectors());
}

double delta_given(const DensityMatrix& rho, const MeasurementBasis& basis_a) {
  return von_neumann_entropy(reduced_A(rho)) + conditional_entropy_one_sided(rho, basis_a) -
         von_neumann_entropy(rho);
}

DeltaResult delta_opt(const DensityMatrix& rho, const SearchConfig& config) {
  const auto [m, n] = rho.require_split();
  const double base = von_neumann_entropy(reduced_A(rho)) - von_neumann_entropy(rho);
  const ComplexMatrix& mat = rho.matrix();

  DeltaResult out;
  if (n == 1) {
    out.basis_a = MeasurementBasis::computational(1);
    out.value = base + one_sided_from_unitary(mat, m, n, out.basis_a.vectors());
    return out;
  }

  search::Objective f = [&mat, m = m, n = n](std::span<const double> x) {
    return one_sided_from_unitary(mat, m, n, givens_unitary(n, x));
  };

  std::vector<search::GridAxis> axes;
  if (n == 2) {
    axes = givens_axes(2, config.grid, 2.0 * kPi, config.grid);
  } else {
    const std::size_t steps = fit_resolution(config.givens_steps, givens_parameter_count(n), config.max_grid_points);
    axes = givens_axes(n, steps, 2.0 * kPi, steps);
  }
  auto best = grid_then_refine(axes, f, 1, config, out.evaluations);

  if (n == 2) {
    const auto canon = canonical_angles(best.point[0], best.point[1]);
    best.point = {canon.theta, canon.phi};
  }
  out.basis_a = MeasurementBasis::from_unitary(givens_unitary(n, best.point));
  out.params = std::move(best.point);
  out.value = base + best.value;
  return out;
}

TwoSidedForms two_sided_forms(const DensityMatrix& rho, const MeasurementBasis& basis_a,
                              const MeasurementBasis& basis_s) {
  const auto [m, n] = rho.require_split();
  if (basis_a.dim() != n || basis_s.dim() != m) {
    throw DimensionError("two-sided conditional entropy: basis dimensions do not match the split");
  }
  TwoSidedForms forms;

  ComplexMatrix c(m);
  for (std::size_t j = 0; j < n; ++j) {
    conditional_operator(rho.matrix(), m, n, basis_a.vectors(), j, c);
    const double p = c.trace().real();
    if (p < kSkipOutcome) continue;
    ComplexMatrix conditioned = c;
    conditioned *= 1.0 / p;
    const auto rho_s_given_j = validate(std::move(conditioned));
    forms.sequential += p * projected_entropy(rho_s_given_j, basis_s);
  }

  forms.difference =
      projected_entropy(rho, product_basis(basis_s, basis_a)) - projected_entropy(reduced_A(rho), basis_a);
  return forms;
}

double conditional_entropy_two_sided(const DensityMatrix& rho, const MeasurementBasis& basis_a,
                                     const MeasurementBasis& basis_s) {
  const auto forms = two_sided_forms(rho, basis_a, basis_s);
  const double gap = std::abs(forms.sequential - forms.difference);
  if (gap > kTwoSidedAgreement) {
    std::ostringstream msg;
    msg << "two-sided conditional entropy forms disagree by " << gap;
    throw InternalConsistencyError(msg.str());
  }
  return forms.difference;
}

double alpha_given(const DensityMatrix& rho, const MeasurementBasis& basis_a, const MeasurementBasis& basis_s) {
  return von_neumann_entropy(reduced_A(rho)) + conditional_entropy_two_sided(rho, basis_a, basis_s) -
         von_neumann_entropy(rho);
}

AlphaResult alpha_closed_form(const DensityMatrix& rho, const SearchConfig& config) {
  (void)rho.require_split();
  const auto eig_s = basis_from_eigendecomposition(reduced_S(rho));
  const auto eig_a = basis_from_eigendecomposition(reduced_A(rho));
  const double joint = von_neumann_entropy(rho);
  const ComplexMatrix& mat = rho.matrix();

  const std::size_t count_s = block_parameter_count(eig_s);
  const std::size_t count_a = block_parameter_count(eig_a);
  const std::size_t count = count_s + count_a;

  auto evaluate = [&](std::span<const double> x, std::vector<double>& p, std::vector<Complex>& w) {
    joint_outcomes(mat, rotated_eigenbasis(eig_s, x.first(count_s)), rotated_eigenbasis(eig_a, x.subspan(count_s)),
                   p, w);
    return shannon_entropy(p);
  };

  AlphaResult out;
  std::vector<double> params;
  double projected = 0.0;
  if (count == 0) {
    std::vector<double> p;
    std::vector<Complex> w;
    projected = evaluate({}, p, w);
    out.evaluations = 1;
  } else {
    search::Objective f = [&](std::span<const double> x) {
      thread_local std::vector<double> p;
      thread_local std::vector<Complex> w;
      return evaluate(x, p, w);
    };
    const std::size_t pairs = count / 2;
    const std::size_t steps =
        pairs == 1 ? config.grid : fit_resolution(config.grid, count, config.grid * config.grid);
    std::vector<search::GridAxis> axes;
    for (std::size_t k = 0; k < pairs; ++k) {
      axes.push_back({0.0, kPi, steps});
      axes.push_back({0.0, 2.0 * kPi, steps});
    }
    const std::size_t starts = pairs == 1 ? 1 : config.degenerate_starts;
    auto best = grid_then_refine(axes, f, starts, config, out.evaluations);
    projected = best.value;
    params = std::move(best.point);
  }

  const std::span<const double> x(params);
  out.basis_s = MeasurementBasis::from_unitary(rotated_eigenbasis(eig_s, x.first(count_s)));
  out.basis_a = MeasurementBasis::from_unitary(rotated_eigenbasis(eig_a, x.subspan(count_s)));
  out.projected_joint_entropy = projected;
  out.value = projected - joint;
  out.params = std::move(params);
  return out;
}

AlphaResult alpha_oracle(const DensityMatrix& rho, const SearchConfig& config) {
  const auto [m, n] = rho.require_split();
  if (!config.override_dim_guard && (m > config.oracle_dim_guard || n > config.oracle_dim_guard)) {
    throw DimensionError("alpha_oracle: factor dimensions " + std::to_string(m) + " x " + std::to_string(n) +
                         " exceed the guard of " + std::to_string(config.oracle_dim_guard));
  }
  const double h_a = von_neumann_entropy(reduced_A(rho));
  const double joint = von_neumann_entropy(rho);
  const ComplexMatrix& mat = rho.matrix();
  const std::size_t count_s = givens_parameter_count(m);

  // alpha_given = H(rho_A) - H(P_A) + H(P_SA) - H(rho_SA)
  auto evaluate = [&](std::span<const double> x, std::vector<double>& p, std::vector<Complex>& w) {
    joint_outcomes(mat, givens_unitary(m, x.first(count_s)), givens_unitary(n, x.subspan(count_s)), p, w);
    return h_a - shannon_entropy(marginal_a(p, m, n)) + shannon_entropy(p) - joint;
  };
  search::Objective f = [&](std::span<const double> x) {
    thread_local std::vector<double> p;
    thread_local std::vector<Complex> w;
    return evaluate(x, p, w);
  };

  auto side_axes = [&](std::size_t dim, std::size_t givens_steps) {
    if (dim == 2) return givens_axes(2, config.oracle_theta_steps, kPi, config.oracle_phi_steps);
    return givens_axes(dim, givens_steps, 2.0 * kPi, givens_steps);
  };
  const std::size_t big_params =
      (m > 2 ? givens_parameter_count(m) : 0) + (n > 2 ? givens_parameter_count(n) : 0);
  const std::size_t qubit_points = (m == 2 ? config.oracle_theta_steps * config.oracle_phi_steps : 1) *
                                   (n == 2 ? config.oracle_theta_steps * config.oracle_phi_steps : 1);
  const std::size_t givens_steps =
      fit_resolution(config.givens_steps, big_params, std::max<std::size_t>(1, config.max_grid_points / qubit_points));

  std::vector<search::GridAxis> axes = side_axes(m, givens_steps);
  const auto axes_a = side_axes(n, givens_steps);
  axes.insert(axes.end(), axes_a.begin(), axes_a.end());

  AlphaResult out;
  auto best = grid_then_refine(axes, f, 1, config, out.evaluations);
  const std::span<const double> x(best.point);
  out.basis_s = MeasurementBasis::from_unitary(givens_unitary(m, x.first(count_s)));
  out.basis_a = MeasurementBasis::from_unitary(givens_unitary(n, x.subspan(count_s)));
  out.value = best.value;
  out.projected_joint_entropy = projected_entropy(rho, product_basis(out.basis_s, out.basis_a));
  out.params = std::move(best.point);
  return out;
}

double alpha_swapped(const DensityMatrix& rho, const SearchConfig& config) {
  return alpha_closed_form(swap_subsystems(rho), config).value;
}

ZeroDiscordVerdict zero_discord_check(const DensityMatrix& rho, double tol, const SearchConfig& config) {
  const auto [m, n] = rho.require_split();
  const auto alpha = alpha_closed_form(rho, config);
  ZeroDiscordVerdict verdict;
  verdict.alpha = alpha.value;
  if (!(alpha.value < tol)) return verdict;

  ZeroDiscordWitness witness{ComplexMatrix(m), ComplexMatrix(n), 0.0};
  for (std::size_t i = 0; i < m; ++i) witness.observable_s += static_cast<double>(i + 1) * alpha.basis_s.projector(i);
  for (std::size_t j = 0; j < n; ++j) witness.observable_a += static_cast<double>(j + 1) * alpha.basis_a.projector(j);
  witness.commutator_norm =
      commutator(rho.matrix(), tensor_product(witness.observable_s, witness.observable_a)).max_abs();
  if (witness.commutator_norm >= kWitnessTolerance) {
    std::ostringstream msg;
    msg << "alpha = " << alpha.value << " is below " << tol << " but the product observable fails to commute (max "
        << witness.commutator_norm << ")";
    throw InternalConsistencyError(msg.str());
  }
  verdict.is_zero = true;
  verdict.witness = std::move(witness);
  return verdict;
}

std::string to_string(Separability s) {
  switch (s) {
    case Separability::kSeparable: return "separable";
    case Separability::kEntangled: return "entangled";
    case Separability::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

Separability classify_separability(const DensityMatrix& rho) {
  const auto [m, n] = rho.require_split();
  if (!has_positive_partial_transpose(rho)) return Separability::kEntangled;
  return m * n <= 6 ? Separability::kSeparable : Separability::kUndetermined;
}

DiscordReport make_report(const DensityMatrix& rho, const SearchConfig& config, const ReportOptions& options) {
  DiscordReport report;
  report.split = rho.require_split();
  report.mutual_information = mutual_information(rho);

  const auto eig_s = basis_from_eigendecomposition(reduced_S(rho));
  const auto eig_a = basis_from_eigendecomposition(reduced_A(rho));
  report.degenerate_s = eig_s.degenerate();
  report.degenerate_a = eig_a.degenerate();
  report.delta_given_basis = eig_a.basis;
  report.delta_given = delta_given(rho, eig_a.basis);
  report.delta_opt = delta_opt(rho, config);

  report.alpha_closed = alpha_closed_form(rho, config);
  report.alpha_swapped = alpha_swapped(rho, config);
  report.symmetry_gap = std::abs(report.alpha_closed.value - report.alpha_swapped);
  report.zero_discord = zero_discord_check(rho, options.zero_tolerance, config);
  report.separability = classify_separability(rho);

  if (report.degenerate_s || report.degenerate_a) {
    report.notes.emplace_back("marginal spectrum is degenerate; closed form minimized over eigenbases of the degenerate blocks");
  }
  if (report.separability == Separability::kEntangled) {
    report.notes.emplace_back(
        "state is entangled: the closed form is only guaranteed minimal for separable states; oracle comparison recommended");
  }

  const bool want_oracle = report.separability == Separability::kEntangled ? options.entangled
                                                                           : (options.oracle || options.entangled);
  if (want_oracle) {
    try {
      report.alpha_oracle = alpha_oracle(rho, config);
      const double gap = report.alpha_closed.value - report.alpha_oracle->value;
      std::ostringstream msg;
      msg << "oracle minus closed form: " << -gap << " bits";
      report.notes.push_back(msg.str());
    } catch (const DimensionError& e) {
      report.notes.emplace_back(std::string("oracle skipped: ") + e.what());
    }
  }
  return report;
}

}  // namespace discord
