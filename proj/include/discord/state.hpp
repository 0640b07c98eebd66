#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "discord/linalg.hpp"

namespace discord {

/// Dimensions of the left (S) and right (A) factors of a bipartite space.
struct Split {
  std::size_t m = 0;  // S
  std::size_t n = 0;  // A

  friend bool operator==(const Split&, const Split&) = default;
};

inline constexpr double kStateTolerance = 1e-9;
/// Eigenvalues and probabilities below this are treated as exactly zero in entropies.
inline constexpr double kEntropyFloor = 1e-12;

/**
 * @brief A Hermitian, unit-trace, positive semidefinite operator.
 *
 * Instances only come out of validate(), so holding one is proof the
 * invariants were checked (to within kStateTolerance).
 */
class DensityMatrix {
 public:
  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] std::size_t dim() const noexcept { return matrix_.dim(); }
  [[nodiscard]] const std::optional<Split>& split() const noexcept { return split_; }
  /// Throws DimensionError when the state carries no bipartite split.
  [[nodiscard]] Split require_split() const;

 private:
  DensityMatrix(ComplexMatrix matrix, std::optional<Split> split)
      : matrix_(std::move(matrix)), split_(split) {}

  friend DensityMatrix validate(ComplexMatrix m, std::optional<Split> split);

  ComplexMatrix matrix_;
  std::optional<Split> split_;
};

/// Checks the density-matrix invariants and throws ValidationError naming the
/// first violated one together with its magnitude.
DensityMatrix validate(ComplexMatrix m, std::optional<Split> split = std::nullopt);

/// -sum p log2 p, with p below kEntropyFloor contributing nothing.
double shannon_entropy(std::span<const double> probabilities);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

DensityMatrix reduced_S(const DensityMatrix& rho);
DensityMatrix reduced_A(const DensityMatrix& rho);
/// The same state with the roles of S and A exchanged; split becomes (n, m).
DensityMatrix swap_subsystems(const DensityMatrix& rho);

struct SeparableComponent {
  DensityMatrix s;
  DensityMatrix a;
};

/// Mixture sum_i w_i rho_S^i (x) rho_A^i. Construct with make_separable_spec().
struct SeparableSpec {
  std::vector<double> weights;
  std::vector<SeparableComponent> components;

  [[nodiscard]] Split split() const;
};

SeparableSpec make_separable_spec(std::vector<double> weights, std::vector<SeparableComponent> components);

DensityMatrix assemble_separable(const SeparableSpec& spec);

class MeasurementBasis;

/// sum_ij p[i][j] Pi^S_i (x) Pi^A_j.
DensityMatrix classical_classical(const std::vector<std::vector<double>>& p, const MeasurementBasis& basis_s,
                                  const MeasurementBasis& basis_a);

/// G G^dagger / Tr(G G^dagger) with G a dim x rank complex Gaussian matrix.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::mt19937_64& rng);
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Flat Dirichlet weights; full-rank random components.
SeparableSpec random_separable(std::size_t m, std::size_t n, std::size_t components, std::mt19937_64& rng);
SeparableSpec random_separable(std::size_t m, std::size_t n, std::size_t components, std::uint64_t seed);

/// Symmetric Dirichlet(1) draw of the given length.
std::vector<double> random_simplex_point(std::size_t size, std::mt19937_64& rng);

/// Peres-Horodecki test: true when the partial transpose on A has no eigenvalue
/// below -kStateTolerance. Decides separability exactly only when m * n <= 6.
bool has_positive_partial_transpose(const DensityMatrix& rho);

}  // namespace discord
