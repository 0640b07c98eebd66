#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "discord/cli.hpp"
#include "discord/verify.hpp"

namespace discord::cli {

namespace {

struct CommonFlags {
  std::string log_base = "2";
  std::size_t grid = 64;
  double tol = kZeroDiscordTolerance;
  std::uint64_t seed = 1;
  bool entangled = false;
  unsigned threads = 0;
};

double unit_scale(const CommonFlags& flags) { return flags.log_base == "e" ? std::numbers::ln2 : 1.0; }
const char* unit_name(const CommonFlags& flags) { return flags.log_base == "e" ? "nats" : "bits"; }

SearchConfig search_config(const CommonFlags& flags) {
  SearchConfig config;
  config.grid = flags.grid;
  config.threads = flags.threads;
  return config;
}

std::string format_complex(Complex z) { return fmt::format("({:.9f}, {:.9f})", z.real(), z.imag()); }

void print_basis(std::ostream& out, const std::string& label, const MeasurementBasis& basis) {
  out << "  " << label << ":\n";
  for (std::size_t j = 0; j < basis.dim(); ++j) {
    out << "    |" << j << ">:";
    for (const auto& z : basis.vector(j)) out << ' ' << format_complex(z);
    out << '\n';
  }
}

void print_report(std::ostream& out, const DiscordReport& r, const CommonFlags& flags) {
  const double s = unit_scale(flags);
  const char* unit = unit_name(flags);
  auto value = [&](double v) { return format_value(v * s) + " " + unit; };

  out << "dims: " << r.split.m << " x " << r.split.n << '\n';
  out << "separability: " << to_string(r.separability) << '\n';
  out << "mutual_information: " << value(r.mutual_information) << '\n';
  out << "delta_given (eigenbasis of rho_A): " << value(r.delta_given) << '\n';
  out << "delta_opt: " << value(r.delta_opt.value) << '\n';
  if (r.split.n == 2 && r.delta_opt.params.size() == 2) {
    out << fmt::format("  argmin angles on A: theta={:.6f} phi={:.6f}\n", r.delta_opt.params[0], r.delta_opt.params[1]);
  }
  print_basis(out, "argmin basis on A", r.delta_opt.basis_a);
  out << "alpha_closed: " << value(r.alpha_closed.value) << '\n';
  out << "  degenerate marginal: S=" << (r.degenerate_s ? "yes" : "no") << " A=" << (r.degenerate_a ? "yes" : "no")
      << '\n';
  print_basis(out, "pointer basis on S", r.alpha_closed.basis_s);
  print_basis(out, "pointer basis on A", r.alpha_closed.basis_a);
  out << "alpha_swapped: " << value(r.alpha_swapped) << '\n';
  out << "symmetry_gap: " << value(r.symmetry_gap) << '\n';
  if (r.alpha_oracle) {
    out << "alpha_oracle: " << value(r.alpha_oracle->value) << '\n';
    print_basis(out, "oracle basis on S", r.alpha_oracle->basis_s);
    print_basis(out, "oracle basis on A", r.alpha_oracle->basis_a);
  }
  out << "zero_discord: " << (r.zero_discord.is_zero ? "true" : "false") << '\n';
  if (r.zero_discord.witness) {
    out << "  witness max |[rho, N x K]|: " << fmt::format("{:.3e}", r.zero_discord.witness->commutator_norm) << '\n';
  }
  for (const auto& note : r.notes) out << "note: " << note << '\n';
}

int cmd_compute(const std::string& path, const CommonFlags& flags, bool oracle, std::ostream& out,
                std::ostream& err) {
  std::optional<DensityMatrix> loaded;
  try {
    loaded.emplace(load_state(path));
  } catch (const ValidationError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kInputError;
  }
  const DensityMatrix& rho = *loaded;
  ReportOptions options;
  options.oracle = oracle;
  options.entangled = flags.entangled;
  options.zero_tolerance = flags.tol;
  const auto report = make_report(rho, search_config(flags), options);
  print_report(out, report, flags);
  return kSuccess;
}

int cmd_sweep(const std::string& family_name, const std::string& from_text, const std::string& to_text,
              std::size_t steps, const std::string& out_path, const CommonFlags& flags, std::ostream& out) {
  const auto family = families::parse_family(family_name);
  const double from = parse_number(from_text);
  const double to = parse_number(to_text);
  if (steps == 0) throw std::invalid_argument("--steps must be at least 1");
  const auto rows = run_sweep(family, from, to, steps, search_config(flags));
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
  write_sweep_csv(file, rows, unit_scale(flags));
  out << "wrote " << rows.size() << " rows to " << out_path << '\n';
  return kSuccess;
}

int cmd_verify(const std::string& suite, std::size_t trials, const std::optional<double>& tol,
               const CommonFlags& flags, std::ostream& out) {
  verify::SuiteOptions options;
  options.trials = trials;
  options.seed = flags.seed;
  options.tolerance = tol;
  options.config = search_config(flags);
  const auto results = verify::run_suite(suite, options);

  bool all_passed = true;
  out << fmt::format("{:<12} {:<58} {:<6} {:>13} {:>10} {:>7}\n", "suite", "property", "result", "worst_margin",
                     "tolerance", "checks");
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    out << fmt::format("{:<12} {:<58} {:<6} {:>13.6e} {:>10.1e} {:>7}\n", r.suite, r.property,
                       r.passed ? "PASS" : "FAIL", r.worst_margin, r.tolerance, r.checks);
  }
  out << (all_passed ? "all properties passed" : "some properties FAILED") << '\n';
  return all_passed ? kSuccess : kPropertyFailure;
}

int cmd_state(const std::string& family_name, const std::string& param_text, const std::string& out_path,
              std::ostream& out) {
  const auto family = families::parse_family(family_name);
  const auto rho = families::family_state(family, parse_number(param_text));
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
  file << "# " << families::to_string(family) << ' ' << param_text << '\n';
  write_state_file(file, rho);
  out << "wrote " << families::to_string(family) << " state to " << out_path << '\n';
  return kSuccess;
}

}  // namespace

std::vector<double> sweep_parameters(double from, double to, std::size_t steps) {
  std::vector<double> params;
  if (steps == 0) return params;
  if (steps == 1) return {from};
  params.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    params.push_back(k + 1 == steps ? to : from + (to - from) * static_cast<double>(k) / static_cast<double>(steps - 1));
  }
  return params;
}

std::vector<SweepRow> run_sweep(families::Family family, double from, double to, std::size_t steps,
                                const SearchConfig& config) {
  std::vector<SweepRow> rows;
  for (double x : sweep_parameters(from, to, steps)) {
    const auto rho = families::family_state(family, x);
    rows.push_back({x, alpha_closed_form(rho, config).value, families::alpha_reference(family, x),
                    delta_opt(rho, config).value, mutual_information(rho)});
  }
  return rows;
}

std::string format_value(double v) {
  std::string s = fmt::format("{:.9f}", v);
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, double unit_scale) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_value(r.parameter) << ',' << format_value(r.alpha_closed * unit_scale) << ','
        << format_value(r.alpha_reference * unit_scale) << ',' << format_value(r.delta_opt * unit_scale) << ','
        << format_value(r.mutual_information * unit_scale) << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum discord measures for bipartite density matrices"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--log-base", flags.log_base, "Logarithm base for reported entropies")
        ->check(CLI::IsMember({"2", "e"}));
    sub->add_option("--grid", flags.grid, "Steps per angle in basis searches")->check(CLI::PositiveNumber);
    sub->add_option("--seed", flags.seed, "Seed for randomized suites");
    sub->add_flag("--entangled", flags.entangled, "Run the oracle comparison on entangled inputs too");
    sub->add_option("--threads", flags.threads, "Worker threads for grid searches (0 = all cores)");
  };

  std::string state_path;
  bool oracle = false;
  auto* compute = app.add_subcommand("compute", "Report all discord measures for a state file");
  compute->add_option("file", state_path, "State file")->required();
  compute->add_option("--tol", flags.tol, "Zero-discord threshold on alpha");
  compute->add_flag("--oracle", oracle, "Also brute-force alpha over both projector spaces");
  add_common(compute);

  std::string family;
  std::string from = "0";
  std::string to = "1";
  std::size_t steps = 11;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Write the alpha/delta curves of a state family as CSV");
  sweep->add_option("--family", family, "werner or zurek")->required();
  sweep->add_option("--from", from, "First parameter (decimal or fraction)");
  sweep->add_option("--to", to, "Last parameter (decimal or fraction)");
  sweep->add_option("--steps", steps, "Number of parameter values, endpoints included");
  sweep->add_option("--out", out_path, "Output CSV path")->required();
  add_common(sweep);

  std::string suite;
  std::size_t trials = 100;
  std::optional<double> verify_tol;
  auto* verify_cmd = app.add_subcommand("verify", "Run randomized property suites");
  verify_cmd->add_option("--suite", suite, "lemma1, lemma2, theorem1, theorem2, strongness, zerodiscord or all")
      ->required();
  verify_cmd->add_option("--trials", trials, "Trials per suite");
  verify_cmd->add_option("--tol", verify_tol, "Override every property tolerance");
  add_common(verify_cmd);

  std::string param;
  auto* state_cmd = app.add_subcommand("state", "Write a family state to a state file");
  state_cmd->add_option("--family", family, "werner or zurek")->required();
  state_cmd->add_option("--param", param, "Family parameter (decimal or fraction)")->required();
  state_cmd->add_option("--out", out_path, "Output state file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (compute->parsed()) return cmd_compute(state_path, flags, oracle, out, err);
    if (sweep->parsed()) return cmd_sweep(family, from, to, steps, out_path, flags, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, trials, verify_tol, flags, out);
    if (state_cmd->parsed()) return cmd_state(family, param, out_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace discord::cli
