#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "discord/cli.hpp"

namespace discord::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, "trailing characters in number '" + token + "'");
  if (!std::isfinite(v)) throw ParseError(line, "non-finite number '" + token + "'");
  return v;
}

std::vector<Complex> parse_row(const std::string& text, std::size_t line) {
  std::vector<Complex> row;
  std::size_t pos = 0;
  while (true) {
    pos = text.find_first_not_of(" \t\r", pos);
    if (pos == std::string::npos) break;
    if (text[pos] != '(') throw ParseError(line, "expected '(' at column " + std::to_string(pos + 1));
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError(line, "unterminated '(' at column " + std::to_string(pos + 1));
    const std::string inner = text.substr(pos + 1, close - pos - 1);
    const auto comma = inner.find(',');
    if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos) {
      throw ParseError(line, "entry at column " + std::to_string(pos + 1) + " must be (real, imaginary)");
    }
    row.emplace_back(parse_real(trim(inner.substr(0, comma)), line), parse_real(trim(inner.substr(comma + 1)), line));
    pos = close + 1;
  }
  return row;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

StateFile parse_state_file(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_dims = false;
  Split dims;
  std::vector<Complex> entries;
  std::size_t rows = 0;

  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!have_dims) {
      std::istringstream header(text);
      std::string keyword;
      long long m = 0;
      long long n = 0;
      std::string extra;
      if (!(header >> keyword >> m >> n) || keyword != "dims" || (header >> extra)) {
        throw ParseError(line, "expected header 'dims <m> <n>'");
      }
      if (m <= 0 || n <= 0) throw ParseError(line, "dimensions must be positive");
      dims = {static_cast<std::size_t>(m), static_cast<std::size_t>(n)};
      have_dims = true;
      continue;
    }
    const std::size_t d = dims.m * dims.n;
    auto row = parse_row(text, line);
    if (row.size() != d) {
      throw ParseError(line, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(d));
    }
    if (rows == d) throw ParseError(line, "more than " + std::to_string(d) + " matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  if (!have_dims) throw ParseError(0, "missing 'dims <m> <n>' header");
  const std::size_t d = dims.m * dims.n;
  if (rows != d) {
    throw ParseError(line, "matrix has " + std::to_string(rows) + " rows, expected " + std::to_string(d));
  }
  return {dims, ComplexMatrix(d, std::move(entries))};
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return parse_state_file(in);
}

DensityMatrix load_state(const std::filesystem::path& path) {
  auto file = read_state_file(path);
  return validate(std::move(file.matrix), file.dims);
}

void write_state_file(std::ostream& out, const DensityMatrix& rho) {
  const auto [m, n] = rho.require_split();
  std::ostringstream body;
  body << std::setprecision(std::numeric_limits<double>::max_digits10);
  body << "dims " << m << ' ' << n << '\n';
  const auto& mat = rho.matrix();
  for (std::size_t r = 0; r < mat.dim(); ++r) {
    for (std::size_t c = 0; c < mat.dim(); ++c) {
      if (c > 0) body << ' ';
      body << '(' << mat(r, c).real() << ", " << mat(r, c).imag() << ')';
    }
    body << '\n';
  }
  out << body.str();
}

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return parse_real(t, 0);
  const double num = parse_real(trim(t.substr(0, slash)), 0);
  const double den = parse_real(trim(t.substr(slash + 1)), 0);
  if (den == 0.0) throw ParseError(0, "zero denominator in '" + text + "'");
  return num / den;
}

}  // namespace discord::cli
