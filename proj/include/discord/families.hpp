#pragma once

#include <string>

#include "discord/linalg.hpp"
#include "discord/state.hpp"

namespace discord::families {

enum class Family { kWerner, kZurek };

std::string to_string(Family f);
/// Parses "werner" or "zurek"; throws std::invalid_argument otherwise.
Family parse_family(const std::string& name);

struct ParameterRange {
  double lo;
  double hi;
};

/// Physical parameter range: werner x in [-1, 1/3], zurek z in [-1, 1].
ParameterRange physical_range(Family f);

/// (I + x (sx sx + sy sy + sz sz)) / 4, without validation.
ComplexMatrix werner_matrix(double x);
/// (|00><00| + |11><11|) / 2 + z (|00><11| + |11><00|) / 2, without validation.
ComplexMatrix zurek_matrix(double z);

/// Validated Werner state; outside [-1, 1/3] throws ValidationError naming the negative eigenvalue.
DensityMatrix werner(double x);
DensityMatrix zurek(double z);
DensityMatrix family_state(Family f, double parameter);

/// Closed-form symmetric discord curves, in bits, evaluated term by term with 0 log 0 = 0.
double alpha_werner_reference(double x);
double alpha_zurek_reference(double z);
double alpha_reference(Family f, double parameter);

}  // namespace discord::families
