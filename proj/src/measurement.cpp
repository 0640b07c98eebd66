#include "discord/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace discord {

namespace {

double orthonormality_error(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u;
  return max_abs_diff(gram, ComplexMatrix::identity(u.dim()));
}

}  // namespace

MeasurementBasis MeasurementBasis::from_unitary(ComplexMatrix unitary) {
  const double err = orthonormality_error(unitary);
  if (err > kBasisTolerance) {
    std::ostringstream msg;
    msg << "basis vectors are not orthonormal (max deviation " << err << ")";
    throw std::invalid_argument(msg.str());
  }
  return MeasurementBasis(std::move(unitary));
}

MeasurementBasis MeasurementBasis::from_projectors(const std::vector<ComplexMatrix>& projectors) {
  if (projectors.empty()) throw std::invalid_argument("empty projector set");
  const std::size_t d = projectors.front().dim();
  if (projectors.size() != d) throw DimensionError("a rank-1 basis needs exactly dim projectors");
  ComplexMatrix sum(d);
  ComplexMatrix vectors(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& p = projectors[j];
    if (p.dim() != d) throw DimensionError("projector dimensions differ");
    if (p.hermitian_deviation() > kBasisTolerance) throw std::invalid_argument("projector is not Hermitian");
    if (max_abs_diff(p * p, p) > kBasisTolerance) throw std::invalid_argument("projector is not idempotent");
    if (std::abs(p.trace() - Complex(1.0)) > kBasisTolerance) throw std::invalid_argument("projector trace is not 1");
    for (std::size_t k = j + 1; k < d; ++k) {
      if ((p * projectors[k]).max_abs() > kBasisTolerance) throw std::invalid_argument("projectors are not orthogonal");
    }
    sum += p;
    const auto spectrum = hermitian_eigendecomposition(p);
    for (std::size_t i = 0; i < d; ++i) vectors(i, j) = spectrum.eigenvectors(i, 0);
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(d)) > kBasisTolerance) {
    throw std::invalid_argument("projectors do not sum to the identity");
  }
  return from_unitary(std::move(vectors));
}

MeasurementBasis MeasurementBasis::computational(std::size_t dim) {
  return MeasurementBasis(ComplexMatrix::identity(dim));
}

ComplexMatrix MeasurementBasis::projector(std::size_t j) const { return ComplexMatrix::outer(vector(j)); }

std::vector<ComplexMatrix> MeasurementBasis::projectors() const {
  std::vector<ComplexMatrix> out;
  out.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(projector(j));
  return out;
}

MeasurementBasis qubit_basis(QubitBasisAngles angles) {
  constexpr double pi = std::numbers::pi;
  if (!(angles.theta >= 0.0 && angles.theta <= pi) || !(angles.phi >= 0.0 && angles.phi < 2.0 * pi)) {
    throw ValidationError(Violation::kRange, 0.0, "qubit basis angles need theta in [0, pi] and phi in [0, 2 pi)");
  }
  const double params[2] = {angles.theta, angles.phi};
  return MeasurementBasis::from_unitary(givens_unitary(2, params));
}

QubitBasisAngles canonical_angles(double theta, double phi) {
  constexpr double pi = std::numbers::pi;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  double out_theta = 2.0 * std::atan2(std::abs(s), std::abs(c));
  double out_phi = phi + ((c * s < 0.0) ? pi : 0.0);
  out_phi = std::fmod(out_phi, 2.0 * pi);
  if (out_phi < 0.0) out_phi += 2.0 * pi;
  if (out_phi >= 2.0 * pi) out_phi = 0.0;
  // At the poles phi does not affect the vector.
  if (out_theta < 1e-15 || out_theta > pi - 1e-15) out_phi = 0.0;
  return {std::min(out_theta, pi), out_phi};
}

ComplexMatrix givens_unitary(std::size_t dim, std::span<const double> params) {
  if (params.size() != givens_parameter_count(dim)) {
    throw DimensionError("givens_unitary: expected " + std::to_string(givens_parameter_count(dim)) + " parameters");
  }
  ComplexMatrix u = ComplexMatrix::identity(dim);
  std::size_t k = 0;
  for (std::size_t p = 0; p + 1 < dim; ++p) {
    for (std::size_t q = p + 1; q < dim; ++q) {
      const double c = std::cos(params[k] / 2.0);
      const double s = std::sin(params[k] / 2.0);
      const Complex e = std::polar(1.0, params[k + 1]);
      k += 2;
      // u <- u * G_pq
      for (std::size_t r = 0; r < dim; ++r) {
        const Complex urp = u(r, p);
        const Complex urq = u(r, q);
        u(r, p) = urp * c + urq * (e * s);
        u(r, q) = -urp * (std::conj(e) * s) + urq * c;
      }
    }
  }
  return u;
}

EigenBasis basis_from_eigendecomposition(const DensityMatrix& rho) {
  auto spectrum = hermitian_eigendecomposition(rho.matrix());
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  const auto& ev = spectrum.eigenvalues;
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= ev.size(); ++k) {
    if (k == ev.size() || ev[k - 1] - ev[k] >= kDegeneracyGap) {
      if (k - begin >= 2) blocks.emplace_back(begin, k);
      begin = k;
    }
  }
  return {MeasurementBasis::from_unitary(std::move(spectrum.eigenvectors)), std::move(spectrum.eigenvalues),
          std::move(blocks)};
}

DensityMatrix measure_channel(const DensityMatrix& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.dim()) {
    throw DimensionError("measure_channel: basis dimension " + std::to_string(basis.dim()) +
                         " does not match state dimension " + std::to_string(rho.dim()));
  }
  // sum_j |v_j><v_j| rho |v_j><v_j| = V diag(<v_j|rho|v_j>) V^dagger
  const auto p = outcome_distribution(rho, basis);
  const auto& v = basis.vectors();
  const std::size_t d = rho.dim();
  ComplexMatrix out(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r, c) += p[j] * v(r, j) * std::conj(v(c, j));
  return validate(std::move(out), rho.split());
}

DensityMatrix measure_channel(const DensityMatrix& rho, const MeasurementBasis& basis, Subsystem side) {
  const auto [m, n] = rho.require_split();
  const std::size_t local = side == Subsystem::S ? m : n;
  if (basis.dim() != local) {
    throw DimensionError("measure_channel: basis dimension " + std::to_string(basis.dim()) +
                         " does not match the measured factor (" + std::to_string(local) + ")");
  }
  ComplexMatrix out(m * n);
  const auto identity_s = ComplexMatrix::identity(m);
  const auto identity_a = ComplexMatrix::identity(n);
  for (std::size_t j = 0; j < local; ++j) {
    const auto pj = side == Subsystem::S ? tensor_product(basis.projector(j), identity_a)
                                         : tensor_product(identity_s, basis.projector(j));
    out += pj * rho.matrix() * pj;
  }
  return validate(std::move(out), rho.split());
}

MeasurementBasis product_basis(const MeasurementBasis& basis_s, const MeasurementBasis& basis_a) {
  return MeasurementBasis::from_unitary(tensor_product(basis_s.vectors(), basis_a.vectors()));
}

std::vector<double> outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.dim()) {
    throw DimensionError("outcome_distribution: basis dimension " + std::to_string(basis.dim()) +
                         " does not match state dimension " + std::to_string(rho.dim()));
  }
  const std::size_t d = rho.dim();
  const auto& v = basis.vectors();
  const auto& r = rho.matrix();
  std::vector<double> p(d);
  for (std::size_t j = 0; j < d; ++j) {
    Complex acc = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      Complex row = 0.0;
      for (std::size_t b = 0; b < d; ++b) row += r(a, b) * v(b, j);
      acc += std::conj(v(a, j)) * row;
    }
    p[j] = acc.real() < 0.0 ? 0.0 : acc.real();
  }
  return p;
}

double projected_entropy(const DensityMatrix& rho, const MeasurementBasis& basis) {
  return shannon_entropy(outcome_distribution(rho, basis));
}

MeasurementBasis random_basis(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = {re, im};
    }
  // Modified Gram-Schmidt on the columns.
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(g(i, k)) * g(i, j);
      for (std::size_t i = 0; i < dim; ++i) g(i, j) -= overlap * g(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm += std::norm(g(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < dim; ++i) g(i, j) /= norm;
  }
  return MeasurementBasis::from_unitary(std::move(g));
}

}  // namespace discord
