#include "discord/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "discord/families.hpp"

namespace discord::verify {

namespace {

/// Accumulates margins for one property.
class Tracker {
 public:
  Tracker(std::string suite, std::string property, double tolerance)
      : result_{std::move(suite), std::move(property), true, std::numeric_limits<double>::infinity(), tolerance, 0, 0} {}

  [[nodiscard]] double tolerance() const { return result_.tolerance; }

  void record(double margin) {
    ++result_.checks;
    if (!(margin >= 0.0)) {
      ++result_.failures;
      result_.passed = false;
    }
    result_.worst_margin = std::min(result_.worst_margin, std::isnan(margin) ? -std::numeric_limits<double>::infinity() : margin);
  }

  PropertyResult finish() {
    if (result_.checks == 0) result_.worst_margin = 0.0;
    return result_;
  }

 private:
  PropertyResult result_;
};

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t suite_id, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite_id), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double tol_or(const SuiteOptions& o, double fallback) { return o.tolerance.value_or(fallback); }

std::vector<PropertyResult> lemma1(const SuiteOptions& o) {
  Tracker agree("lemma1", "sequential and difference forms agree", tol_or(o, kTwoSidedAgreement));
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = trial_rng(o.seed, 1, t);
    const std::size_t m = uniform_index(rng, 2, 3);
    const std::size_t n = uniform_index(rng, 2, 3);
    const std::size_t rank = uniform_index(rng, 1, m * n);
    const auto raw = random_density(m * n, rank, rng);
    const auto rho = validate(raw.matrix(), Split{m, n});
    const auto basis_a = random_basis(n, rng);
    const auto basis_s = random_basis(m, rng);
    const auto forms = two_sided_forms(rho, basis_a, basis_s);
    agree.record(agree.tolerance() - std::abs(forms.sequential - forms.difference));
  }
  return {agree.finish()};
}

std::vector<PropertyResult> lemma2(const SuiteOptions& o) {
  Tracker loss("lemma2", "projected entropy >= von Neumann entropy", tol_or(o, 1e-10));
  Tracker equality("lemma2", "equality in the state's eigenbasis", tol_or(o, 1e-10));
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = trial_rng(o.seed, 2, t);
    const std::size_t d = uniform_index(rng, 2, 4);
    const std::size_t rank = uniform_index(rng, 1, d);
    const auto rho = random_density(d, rank, rng);
    const auto basis = random_basis(d, rng);
    const double h = von_neumann_entropy(rho);
    loss.record(projected_entropy(rho, basis) - h + loss.tolerance());
    const auto eig = basis_from_eigendecomposition(rho);
    equality.record(equality.tolerance() - std::abs(projected_entropy(rho, eig.basis) - h));
  }
  return {loss.finish(), equality.finish()};
}

std::vector<PropertyResult> theorem1(const SuiteOptions& o) {
  Tracker floor("theorem1", "oracle never below closed form", tol_or(o, 1e-5));
  Tracker agree("theorem1", "oracle agrees with closed form", tol_or(o, 1e-4));
  Tracker joint("theorem1", "projected joint entropy at the two argmins agrees", tol_or(o, 1e-4));
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = trial_rng(o.seed, 3, t);
    const auto rho = assemble_separable(random_separable(2, 2, 4, rng));
    const auto closed = alpha_closed_form(rho, o.config);
    const auto oracle = alpha_oracle(rho, o.config);
    floor.record(oracle.value - closed.value + floor.tolerance());
    agree.record(agree.tolerance() - std::abs(oracle.value - closed.value));
    joint.record(joint.tolerance() - std::abs(oracle.projected_joint_entropy - closed.projected_joint_entropy));
  }
  return {floor.finish(), agree.finish(), joint.finish()};
}

std::vector<PropertyResult> theorem2(const SuiteOptions& o) {
  Tracker sym("theorem2", "alpha(S:A) equals alpha(A:S)", tol_or(o, 1e-7));
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = trial_rng(o.seed, 4, t);
    const std::size_t n = t % 2 == 0 ? 2 : 3;
    const auto rho = assemble_separable(random_separable(2, n, 3, rng));
    const double forward = alpha_closed_form(rho, o.config).value;
    const double backward = alpha_swapped(rho, o.config);
    sym.record(sym.tolerance() - std::abs(forward - backward));
  }
  return {sym.finish()};
}

std::vector<PropertyResult> strongness(const SuiteOptions& o) {
  Tracker strong("strongness", "alpha >= delta", tol_or(o, 1e-6));
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = trial_rng(o.seed, 5, t);
    DensityMatrix rho = t % 2 == 0 ? assemble_separable(random_separable(2, 2, 3, rng))
                                   : validate(random_density(4, uniform_index(rng, 1, 4), rng).matrix(), Split{2, 2});
    const double alpha = alpha_closed_form(rho, o.config).value;
    const double delta = delta_opt(rho, o.config).value;
    strong.record(alpha - delta + strong.tolerance());
  }
  return {strong.finish()};
}

std::vector<PropertyResult> zerodiscord(const SuiteOptions& o) {
  Tracker vanishes("zerodiscord", "alpha vanishes on classical-classical states", tol_or(o, kZeroDiscordTolerance));
  Tracker witness("zerodiscord", "product observable commutes with the state", tol_or(o, kWitnessTolerance));
  Tracker zurek("zerodiscord", "zurek states at z = 0.25, 0.5, 0.75 have alpha > 0.01", tol_or(o, 0.01));
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = trial_rng(o.seed, 6, t);
    const std::size_t m = 2;
    const std::size_t n = t % 2 == 0 ? 2 : 3;
    const auto flat = random_simplex_point(m * n, rng);
    std::vector<std::vector<double>> p(m, std::vector<double>(n));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i][j] = flat[joint_index(i, j, n)];
    const auto basis_s = random_basis(m, rng);
    const auto basis_a = random_basis(n, rng);
    const auto rho = classical_classical(p, basis_s, basis_a);
    const auto alpha = alpha_closed_form(rho, o.config);
    vanishes.record(vanishes.tolerance() - alpha.value);
    try {
      const auto verdict = zero_discord_check(rho, vanishes.tolerance(), o.config);
      witness.record(verdict.witness ? witness.tolerance() - verdict.witness->commutator_norm : -1.0);
    } catch (const InternalConsistencyError&) {
      witness.record(-1.0);
    }
  }
  for (double z : {0.25, 0.5, 0.75}) {
    zurek.record(alpha_closed_form(families::zurek(z), o.config).value - zurek.tolerance());
  }
  return {vanishes.finish(), witness.finish(), zurek.finish()};
}

using SuiteFn = std::function<std::vector<PropertyResult>(const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"lemma1", lemma1},         {"lemma2", lemma2},         {"theorem1", theorem1},
      {"theorem2", theorem2},     {"strongness", strongness}, {"zerodiscord", zerodiscord},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "lemma2", "theorem1", "theorem2", "strongness", "zerodiscord"};
  return names;
}

std::vector<PropertyResult> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<PropertyResult> all;
    for (const auto& suite : suite_names()) {
      auto part = registry().at(suite)(options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown suite '" + name +
                                "' (expected lemma1, lemma2, theorem1, theorem2, strongness, zerodiscord or all)");
  }
  return it->second(options);
}

}  // namespace discord::verify
