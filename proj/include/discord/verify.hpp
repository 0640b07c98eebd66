#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discord/discord.hpp"

namespace discord::verify {

/// Outcome of one property over all trials. margin = slack left before the
/// tolerance is violated; the property passes when the worst margin is >= 0.
struct PropertyResult {
  std::string suite;
  std::string property;
  bool passed = true;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// Replaces the tolerance of every property in the suite when set.
  std::optional<double> tolerance;
  SearchConfig config{};
};

/// lemma1, lemma2, theorem1, theorem2, strongness, zerodiscord.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for unknown names.
std::vector<PropertyResult> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace discord::verify
