#include "discord/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace discord {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionError(msg.str());
  }
}

void require_split(const ComplexMatrix& rho, std::size_t m, std::size_t n, const char* what) {
  if (m == 0 || n == 0 || rho.dim() != m * n) {
    std::ostringstream msg;
    msg << what << ": matrix of dimension " << rho.dim() << " cannot be split as " << m << " x " << n;
    throw DimensionError(msg.str());
  }
}

}  // namespace

std::string to_string(Violation v) {
  switch (v) {
    case Violation::kNotHermitian: return "not Hermitian";
    case Violation::kTrace: return "trace deviates from 1";
    case Violation::kNegativeEigenvalue: return "negative eigenvalue";
    case Violation::kSplit: return "bipartite split does not match dimension";
    case Violation::kProbability: return "invalid probability distribution";
    case Violation::kRange: return "parameter out of range";
  }
  return "unknown violation";
}

ValidationError::ValidationError(Violation violation, double magnitude, const std::string& detail)
    : std::invalid_argument(to_string(violation) + ": " + detail),
      violation_(violation),
      magnitude_(magnitude) {}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  std::vector<Complex> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DimensionError("ComplexMatrix: rows must form a square matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  *this = ComplexMatrix(rows.size(), std::move(flat));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = v[i] * std::conj(v[j]);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

std::vector<Complex> ComplexMatrix::column(std::size_t col) const {
  std::vector<Complex> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, col);
  return out;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& z : entries_) best = std::max(best, std::abs(z));
  return best;
}

double ComplexMatrix::hermitian_deviation() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      best = std::max(best, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t d = a.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    best = std::max(best, std::abs(a.entries()[k] - b.entries()[k]));
  return best;
}

ComplexMatrix tensor_product(const ComplexMatrix& left, const ComplexMatrix& right) {
  const std::size_t m = left.dim();
  const std::size_t n = right.dim();
  ComplexMatrix out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Complex lij = left(i, j);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out(joint_index(i, k, n), joint_index(j, l, n)) = lij * right(k, l);
    }
  return out;
}

ComplexMatrix partial_trace_S(const ComplexMatrix& rho, std::size_t m, std::size_t n) {
  require_split(rho, m, n, "partial_trace_S");
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < m; ++i) out(k, l) += rho(joint_index(i, k, n), joint_index(i, l, n));
  return out;
}

ComplexMatrix partial_trace_A(const ComplexMatrix& rho, std::size_t m, std::size_t n) {
  require_split(rho, m, n, "partial_trace_A");
  ComplexMatrix out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j) += rho(joint_index(i, k, n), joint_index(j, k, n));
  return out;
}

ComplexMatrix swap_factors(const ComplexMatrix& rho, std::size_t m, std::size_t n) {
  require_split(rho, m, n, "swap_factors");
  ComplexMatrix out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < n; ++l)
          out(joint_index(k, i, m), joint_index(l, j, m)) = rho(joint_index(i, k, n), joint_index(j, l, n));
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  const std::size_t d = eigenvectors.dim();
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out(i, j) += eigenvalues[k] * eigenvectors(i, k) * std::conj(eigenvectors(j, k));
  return out;
}

SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& m) {
  const double deviation = m.hermitian_deviation();
  if (deviation > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "max |M - M^dagger| = " << deviation;
    throw ValidationError(Violation::kNotHermitian, deviation, msg.str());
  }

  constexpr int kMaxSweeps = 100;
  constexpr double kOffDiagonalThreshold = 1e-13;

  const std::size_t d = m.dim();
  // Work on the exactly Hermitian part.
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < d; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(d);

  double frob = 0.0;
  for (const auto& z : a.entries()) frob += std::norm(z);
  const double threshold = kOffDiagonalThreshold * std::max(1.0, std::sqrt(frob));

  auto off_diagonal_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_diagonal_norm() >= threshold) {
    ++sweeps;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Phase e^{-i beta} on column q makes the (p, q) entry real, then a real
        // rotation annihilates it. J = diag(1, e^{-i beta}) * [[c, s], [-s, c]].
        const Complex phase = a(p, q) / r;  // e^{i beta}
        const Complex phase_conj = std::conj(phase);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex jqp = -s * phase_conj;
        const Complex jqq = c * phase_conj;
        for (std::size_t k = 0; k < d; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * s + akq * jqq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = s * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        for (std::size_t k = 0; k < d; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * jqp;
          v(k, q) = vkp * s + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  SpectralDecomposition out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(d);
  out.eigenvectors = ComplexMatrix(d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src).real();
    Complex fix = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double mag = std::abs(v(i, src));
      if (mag > 1e-12) {
        fix = std::conj(v(i, src)) / mag;
        break;
      }
    }
    for (std::size_t i = 0; i < d; ++i) out.eigenvectors(i, k) = v(i, src) * fix;
  }
  return out;
}

namespace pauli {
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

}  // namespace discord
