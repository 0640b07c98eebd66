#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "discord/discord.hpp"
#include "discord/families.hpp"
#include "discord/state.hpp"

namespace discord::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFailure = 1,
  kInputError = 2,
};

/// Malformed state file; carries the 1-based line number (0 when not line specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/**
 * State files are plain text:
 *
 *     # comment
 *     dims 2 2
 *     (0.5, 0) (0, 0) (0, 0) (0.5, 0)
 *     ...one line per matrix row, m*n entries per line...
 *
 * Blank lines and lines starting with '#' are ignored.
 */
struct StateFile {
  Split dims;
  ComplexMatrix matrix;
};

StateFile parse_state_file(std::istream& in);
StateFile read_state_file(const std::filesystem::path& path);
/// Parses and validates; validation failures surface as ValidationError.
DensityMatrix load_state(const std::filesystem::path& path);
void write_state_file(std::ostream& out, const DensityMatrix& rho);

/// Accepts decimals and simple fractions such as "1/3" or "-2/3".
double parse_number(const std::string& text);

struct SweepRow {
  double parameter = 0.0;
  double alpha_closed = 0.0;
  double alpha_reference = 0.0;
  double delta_opt = 0.0;
  double mutual_information = 0.0;
};

inline constexpr const char* kSweepHeader = "parameter,alpha_closed,alpha_reference,delta_opt,mutual_information";

/// `steps` evenly spaced parameters from `from` to `to` inclusive (a single point at `from` when steps == 1).
std::vector<double> sweep_parameters(double from, double to, std::size_t steps);

std::vector<SweepRow> run_sweep(families::Family family, double from, double to, std::size_t steps,
                                const SearchConfig& config = {});

/// Fixed 9-decimal formatting; values that round to zero print as 0.000000000.
std::string format_value(double v);

/// CSV with kSweepHeader; entropic columns are multiplied by `unit_scale` (1 for bits, ln 2 for nats).
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, double unit_scale = 1.0);

/// Entry point shared by the executable and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace discord::cli
