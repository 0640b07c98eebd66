#pragma once

#include <Eigen/Dense>
#include <random>

#include "discord/linalg.hpp"

namespace discord::testing {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  return out;
}

inline ComplexMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = {re, im};
    }
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  auto m = random_matrix(dim, rng);
  auto h = m + m.adjoint();
  h *= 0.5;
  return h;
}

/// Entrywise matrix from a list of real diagonal values.
inline ComplexMatrix diag(std::initializer_list<double> values) {
  std::vector<double> v(values);
  return ComplexMatrix::diagonal(v);
}

}  // namespace discord::testing
