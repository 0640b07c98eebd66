#include "discord/families.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace discord::families {

namespace {

// Slack for parameters given as rounded decimals of a range endpoint (e.g. 1/3).
constexpr double kRangeSlack = 1e-12;

/// coefficient * log2(argument); coefficients at or below rounding level count as zero.
double term(double coefficient, double argument) {
  if (coefficient <= 1e-15) return 0.0;
  return coefficient * std::log2(argument);
}

void require_in_range(Family f, double parameter) {
  const auto [lo, hi] = physical_range(f);
  if (parameter >= lo - kRangeSlack && parameter <= hi + kRangeSlack) return;
  std::ostringstream msg;
  double negative = 0.0;
  if (f == Family::kWerner) {
    negative = parameter > hi ? (1.0 - 3.0 * parameter) / 4.0 : (1.0 + parameter) / 4.0;
    msg << "werner x = " << parameter << " gives eigenvalue " << negative << " (physical range [-1, 1/3])";
  } else {
    negative = (1.0 - std::abs(parameter)) / 2.0;
    msg << "zurek z = " << parameter << " gives eigenvalue " << negative << " (physical range [-1, 1])";
  }
  throw ValidationError(Violation::kNegativeEigenvalue, -negative, msg.str());
}

}  // namespace

std::string to_string(Family f) { return f == Family::kWerner ? "werner" : "zurek"; }

Family parse_family(const std::string& name) {
  if (name == "werner") return Family::kWerner;
  if (name == "zurek") return Family::kZurek;
  throw std::invalid_argument("unknown family '" + name + "' (expected werner or zurek)");
}

ParameterRange physical_range(Family f) {
  return f == Family::kWerner ? ParameterRange{-1.0, 1.0 / 3.0} : ParameterRange{-1.0, 1.0};
}

ComplexMatrix werner_matrix(double x) {
  ComplexMatrix dot = tensor_product(pauli::x(), pauli::x());
  dot += tensor_product(pauli::y(), pauli::y());
  dot += tensor_product(pauli::z(), pauli::z());
  ComplexMatrix rho = ComplexMatrix::identity(4) + x * dot;
  rho *= 0.25;
  return rho;
}

ComplexMatrix zurek_matrix(double z) {
  ComplexMatrix rho(4);
  rho(0, 0) = 0.5;
  rho(3, 3) = 0.5;
  rho(0, 3) = 0.5 * z;
  rho(3, 0) = 0.5 * z;
  return rho;
}

DensityMatrix werner(double x) {
  require_in_range(Family::kWerner, x);
  return validate(werner_matrix(x), Split{2, 2});
}

DensityMatrix zurek(double z) {
  require_in_range(Family::kZurek, z);
  return validate(zurek_matrix(z), Split{2, 2});
}

DensityMatrix family_state(Family f, double parameter) {
  return f == Family::kWerner ? werner(parameter) : zurek(parameter);
}

double alpha_werner_reference(double x) {
  require_in_range(Family::kWerner, x);
  const double a = (1.0 + x) / 4.0;
  const double b = (1.0 - 3.0 * x) / 4.0;
  const double c = (1.0 - x) / 2.0;
  return term(a, a) + term(b, b) - term(c, (1.0 - x) / 4.0);
}

double alpha_zurek_reference(double z) {
  require_in_range(Family::kZurek, z);
  const double a = (1.0 + z) / 2.0;
  const double b = (1.0 - z) / 2.0;
  return term(a, a) + term(b, b) + 1.0;
}

double alpha_reference(Family f, double parameter) {
  return f == Family::kWerner ? alpha_werner_reference(parameter) : alpha_zurek_reference(parameter);
}

}  // namespace discord::families
