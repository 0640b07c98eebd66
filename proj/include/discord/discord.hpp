#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discord/measurement.hpp"
#include "discord/search.hpp"
#include "discord/state.hpp"

namespace discord {

/// Knobs for every basis search. Angles are sampled on half-open grids.
struct SearchConfig {
  /// Steps per angle for the qubit delta search (theta over [0, pi), phi over [0, 2 pi))
  /// and for degenerate-eigenspace searches with a single angle pair.
  std::size_t grid = 64;
  /// Degenerate-eigenspace searches with more than one angle pair keep the whole grid
  /// within grid^2 points by lowering the per-angle resolution, then refine from
  /// this many of the best grid points.
  std::size_t degenerate_starts = 4;
  /// Oracle grid for 2x2 states: theta over [0, pi), phi over [0, pi) on each side.
  std::size_t oracle_theta_steps = 48;
  std::size_t oracle_phi_steps = 24;
  /// Per-angle resolution for Givens charts of dimension > 2 (reduced to fit max_grid_points).
  std::size_t givens_steps = 4;
  std::size_t max_grid_points = std::size_t{1} << 22;
  /// alpha_oracle refuses factor dimensions above this unless override_dim_guard is set.
  std::size_t oracle_dim_guard = 4;
  bool override_dim_guard = false;
  search::RefineOptions refine{};
  unsigned threads = 0;
};

double mutual_information(const DensityMatrix& rho);

/// sum_j p_j H(rho_{S|j}) for a measurement on A.
double conditional_entropy_one_sided(const DensityMatrix& rho, const MeasurementBasis& basis_a);

double delta_given(const DensityMatrix& rho, const MeasurementBasis& basis_a);

struct DeltaResult {
  double value = 0.0;
  MeasurementBasis basis_a;
  std::vector<double> params;  // Givens chart of A; (theta, phi) canonicalized for qubits
  std::size_t evaluations = 0;
};

/// Grid search plus Nelder-Mead over bases on A. The value is an upper bound on the
/// true minimum, tight at small dimensions.
DeltaResult delta_opt(const DensityMatrix& rho, const SearchConfig& config = {});

/// Both evaluations of the two-sided conditional entropy.
struct TwoSidedForms {
  double sequential = 0.0;  // sum_j p_j H(outcomes of basis_s on rho_{S|j})
  double difference = 0.0;  // H(joint outcomes) - H(A outcomes)
};

TwoSidedForms two_sided_forms(const DensityMatrix& rho, const MeasurementBasis& basis_a,
                              const MeasurementBasis& basis_s);

inline constexpr double kTwoSidedAgreement = 1e-9;

/// Returns the difference form after checking it against the sequential form;
/// throws InternalConsistencyError if they differ by more than kTwoSidedAgreement.
double conditional_entropy_two_sided(const DensityMatrix& rho, const MeasurementBasis& basis_a,
                                     const MeasurementBasis& basis_s);

double alpha_given(const DensityMatrix& rho, const MeasurementBasis& basis_a, const MeasurementBasis& basis_s);

struct AlphaResult {
  double value = 0.0;
  MeasurementBasis basis_s;
  MeasurementBasis basis_a;
  /// Shannon entropy of the joint outcomes in basis_s (x) basis_a.
  double projected_joint_entropy = 0.0;
  /// Search coordinates (empty when no search was needed).
  std::vector<double> params;
  std::size_t evaluations = 0;
};

/**
 * @brief Symmetric discord from the eigenbases of the two marginals.
 *
 * value = H(outcomes of rho in eig(rho_S) (x) eig(rho_A)) - H(rho). When a marginal
 * has degenerate eigenvalues its eigenbasis is not unique; the projected entropy is
 * then minimized over rotations inside each degenerate eigenspace.
 */
AlphaResult alpha_closed_form(const DensityMatrix& rho, const SearchConfig& config = {});

/// Brute-force minimum of alpha_given over both projector spaces.
AlphaResult alpha_oracle(const DensityMatrix& rho, const SearchConfig& config = {});

/// alpha_closed_form of the state with S and A exchanged.
double alpha_swapped(const DensityMatrix& rho, const SearchConfig& config = {});

struct ZeroDiscordWitness {
  ComplexMatrix observable_s;  // N = sum_i i Pi^S_i, i = 1..m
  ComplexMatrix observable_a;  // K = sum_j j Pi^A_j, j = 1..n
  double commutator_norm = 0.0;  // max |[rho, N (x) K]|
};

struct ZeroDiscordVerdict {
  bool is_zero = false;
  double alpha = 0.0;
  std::optional<ZeroDiscordWitness> witness;
};

inline constexpr double kZeroDiscordTolerance = 1e-9;
inline constexpr double kWitnessTolerance = 1e-8;

ZeroDiscordVerdict zero_discord_check(const DensityMatrix& rho, double tol = kZeroDiscordTolerance,
                                      const SearchConfig& config = {});

enum class Separability { kSeparable, kEntangled, kUndetermined };

std::string to_string(Separability s);

/// PPT decides separability for m * n <= 6; larger PPT states are undetermined.
Separability classify_separability(const DensityMatrix& rho);

struct ReportOptions {
  /// Run alpha_oracle on separable (or undetermined) inputs.
  bool oracle = false;
  /// Also run the oracle on entangled inputs, where the closed form carries no minimality guarantee.
  bool entangled = false;
  double zero_tolerance = kZeroDiscordTolerance;
};

struct DiscordReport {
  Split split;
  double mutual_information = 0.0;
  /// delta at the pointer (eigen)basis of rho_A.
  double delta_given = 0.0;
  MeasurementBasis delta_given_basis;
  DeltaResult delta_opt;
  AlphaResult alpha_closed;
  std::optional<AlphaResult> alpha_oracle;
  double alpha_swapped = 0.0;
  double symmetry_gap = 0.0;
  bool degenerate_s = false;
  bool degenerate_a = false;
  Separability separability = Separability::kUndetermined;
  ZeroDiscordVerdict zero_discord;
  std::vector<std::string> notes;
};

DiscordReport make_report(const DensityMatrix& rho, const SearchConfig& config = {},
                          const ReportOptions& options = {});

}  // namespace discord
