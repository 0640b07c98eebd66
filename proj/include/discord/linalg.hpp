#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace discord {

using Complex = std::complex<double>;

/// Thrown when operand dimensions do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which physical or structural requirement an input failed.
enum class Violation {
  kNotHermitian,
  kTrace,
  kNegativeEigenvalue,
  kSplit,
  kProbability,
  kRange,
};

std::string to_string(Violation v);

/// Rejection of an input operator, carrying the violated invariant and by how much.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(Violation violation, double magnitude, const std::string& detail);

  [[nodiscard]] Violation violation() const noexcept { return violation_; }
  [[nodiscard]] double magnitude() const noexcept { return magnitude_; }

 private:
  Violation violation_;
  double magnitude_;
};

/// Thrown when a numerical self-check inside the library disagrees with itself.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * @brief Dense square complex matrix stored row-major.
 *
 * Every entry is finite; constructors reject NaN and Inf.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  [[nodiscard]] Complex trace() const;
  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] std::vector<Complex> column(std::size_t col) const;
  [[nodiscard]] double max_abs() const;
  /// max |M - M^dagger| over entries.
  [[nodiscard]] double hermitian_deviation() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Largest absolute entrywise difference; throws DimensionError on mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Position of the basis state |s>|a> in the joint space of a bipartite system.
/// Subsystem S is always the left tensor factor.
constexpr std::size_t joint_index(std::size_t s, std::size_t a, std::size_t dim_a) noexcept {
  return s * dim_a + a;
}

ComplexMatrix tensor_product(const ComplexMatrix& left, const ComplexMatrix& right);

/// Traces out the left factor (S); result has dimension n.
ComplexMatrix partial_trace_S(const ComplexMatrix& rho, std::size_t m, std::size_t n);
/// Traces out the right factor (A); result has dimension m.
ComplexMatrix partial_trace_A(const ComplexMatrix& rho, std::size_t m, std::size_t n);

/// Reorders a joint operator on S (x) A into the same operator on A (x) S.
ComplexMatrix swap_factors(const ComplexMatrix& rho, std::size_t m, std::size_t n);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
  int sweeps = 0;

  [[nodiscard]] ComplexMatrix reconstruct() const;
};

/// Absolute tolerance on max |M - M^dagger| accepted by the eigensolver.
inline constexpr double kHermitianTolerance = 1e-9;

/**
 * @brief Cyclic Jacobi diagonalization of a Hermitian matrix.
 *
 * Eigenvalues are returned in descending order. Each eigenvector is scaled so
 * that its first component with magnitude above 1e-12 is real and positive,
 * which makes the output a deterministic function of the input.
 */
SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& m);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace discord
