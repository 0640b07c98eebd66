#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "discord/linalg.hpp"
#include "discord/state.hpp"

namespace discord {

/**
 * @brief A complete set of orthogonal rank-1 projectors on a dim-dimensional space.
 *
 * Stored as the unitary whose columns are the projected-onto vectors; projector
 * j is column_j column_j^dagger.
 */
class MeasurementBasis {
 public:
  /// Empty basis (dimension 0); placeholder until assigned.
  MeasurementBasis() = default;
  /// Columns of `unitary` must be orthonormal within 1e-10.
  static MeasurementBasis from_unitary(ComplexMatrix unitary);
  /// Checks idempotence, unit trace, mutual orthogonality and completeness.
  static MeasurementBasis from_projectors(const std::vector<ComplexMatrix>& projectors);
  static MeasurementBasis computational(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return vectors_.dim(); }
  [[nodiscard]] const ComplexMatrix& vectors() const noexcept { return vectors_; }
  [[nodiscard]] std::vector<Complex> vector(std::size_t j) const { return vectors_.column(j); }
  [[nodiscard]] ComplexMatrix projector(std::size_t j) const;
  [[nodiscard]] std::vector<ComplexMatrix> projectors() const;

 private:
  explicit MeasurementBasis(ComplexMatrix vectors) : vectors_(std::move(vectors)) {}

  ComplexMatrix vectors_;
};

inline constexpr double kBasisTolerance = 1e-10;
inline constexpr double kDegeneracyGap = 1e-8;

/// Bloch-sphere chart for qubit bases: theta in [0, pi], phi in [0, 2 pi).
struct QubitBasisAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Projectors onto (cos(theta/2), e^{i phi} sin(theta/2)) and its orthogonal complement.
MeasurementBasis qubit_basis(QubitBasisAngles angles);

/// Maps any real (theta, phi) to in-range angles describing the same first basis vector up to phase.
QubitBasisAngles canonical_angles(double theta, double phi);

/// Number of real parameters in the Givens chart of a dim-dimensional basis.
constexpr std::size_t givens_parameter_count(std::size_t dim) noexcept { return dim * (dim - 1); }

/**
 * @brief Product of complex Givens rotations, one per index pair (p < q) in
 * lexicographic order, each taking an angle pair (theta, phi).
 *
 * The 2x2 block is [[cos(theta/2), -e^{-i phi} sin(theta/2)], [e^{i phi} sin(theta/2), cos(theta/2)]],
 * so for dim 2 the columns coincide with qubit_basis. Every basis of the space is
 * reachable with theta in [0, pi] and phi in [0, 2 pi).
 */
ComplexMatrix givens_unitary(std::size_t dim, std::span<const double> params);

struct EigenBasis {
  MeasurementBasis basis;
  std::vector<double> eigenvalues;  // descending, aligned with basis vectors
  /// Half-open [begin, end) index ranges of eigenvalues closer than kDegeneracyGap; only blocks of size >= 2.
  std::vector<std::pair<std::size_t, std::size_t>> degenerate_blocks;

  [[nodiscard]] bool degenerate() const noexcept { return !degenerate_blocks.empty(); }
};

EigenBasis basis_from_eigendecomposition(const DensityMatrix& rho);

enum class Subsystem { S, A };

/// sum_j Pi_j rho Pi_j with a basis of the full space.
DensityMatrix measure_channel(const DensityMatrix& rho, const MeasurementBasis& basis);
/// Measurement on one factor only: (I (x) Pi_j) for A, (Pi_j (x) I) for S.
DensityMatrix measure_channel(const DensityMatrix& rho, const MeasurementBasis& basis, Subsystem side);

/// All products, outcome (i, j) at index i * n + j.
MeasurementBasis product_basis(const MeasurementBasis& basis_s, const MeasurementBasis& basis_a);

/// p_j = Tr(Pi_j rho), small negatives clipped to zero.
std::vector<double> outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis);

/// Shannon entropy (bits) of the outcome distribution.
double projected_entropy(const DensityMatrix& rho, const MeasurementBasis& basis);

/// Haar-random basis (QR of a complex Gaussian matrix).
MeasurementBasis random_basis(std::size_t dim, std::mt19937_64& rng);

}  // namespace discord
