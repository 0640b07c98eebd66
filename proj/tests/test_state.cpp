#include <doctest.h>

#include <cmath>
#include <random>

#include "discord/families.hpp"
#include "discord/measurement.hpp"
#include "discord/state.hpp"
#include "test_support.hpp"

using namespace discord;
using discord::testing::diag;

namespace {

constexpr double kH2ThreeQuarters = 0.811278124459132863909695792039;
constexpr double kLog2Three = 1.58496250072115618145373894395;

Violation violation_of(const ComplexMatrix& m, std::optional<Split> split = std::nullopt, double* magnitude = nullptr) {
  try {
    (void)validate(m, split);
  } catch (const ValidationError& e) {
    if (magnitude) *magnitude = e.magnitude();
    return e.violation();
  }
  FAIL("expected ValidationError");
  return Violation::kRange;
}

}  // namespace

TEST_CASE("validation names the violated invariant") {
  double magnitude = 0.0;
  CHECK(violation_of(diag({0.6, 0.3}), std::nullopt, &magnitude) == Violation::kTrace);
  CHECK(magnitude == doctest::Approx(0.1));
  CHECK(violation_of(diag({1.1, -0.1}), std::nullopt, &magnitude) == Violation::kNegativeEigenvalue);
  CHECK(magnitude == doctest::Approx(0.1));
  CHECK(violation_of(ComplexMatrix{{0.5, Complex(0, 0.1)}, {Complex(0, 0.1), 0.5}}) == Violation::kNotHermitian);
  CHECK(violation_of(ComplexMatrix::identity(4) * 0.25, Split{2, 3}) == Violation::kSplit);
  CHECK(violation_of(families::werner_matrix(0.5)) == Violation::kNegativeEigenvalue);

  // Inside the tolerance is accepted.
  CHECK_NOTHROW(validate(diag({0.5 + 4e-10, 0.5})));
  CHECK_NOTHROW(validate(diag({1.0 + 5e-10, -5e-10})));
  CHECK(validate(ComplexMatrix::identity(4) * 0.25, Split{2, 2}).require_split() == Split{2, 2});
  CHECK_THROWS_AS((void)validate(diag({1.0})).require_split(), DimensionError);
}

TEST_CASE("entropies of textbook states") {
  CHECK(shannon_entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shannon_entropy(std::vector<double>{1.0, 0.0, 1e-13}) == 0.0);
  CHECK(shannon_entropy(std::vector<double>{0.75, 0.25}) == doctest::Approx(kH2ThreeQuarters).epsilon(1e-15));

  CHECK(von_neumann_entropy(validate(diag({0.75, 0.25}))) == doctest::Approx(kH2ThreeQuarters).epsilon(1e-14));
  CHECK(von_neumann_entropy(validate(diag({1.0, 0.0}))) == 0.0);
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto mixed = validate(ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d)));
    CHECK(von_neumann_entropy(mixed) == doctest::Approx(std::log2(static_cast<double>(d))).epsilon(1e-13));
  }
  CHECK(von_neumann_entropy(families::werner(1.0 / 3.0)) == doctest::Approx(kLog2Three).epsilon(1e-13));
  CHECK(von_neumann_entropy(families::zurek(1.0)) < 1e-12);
  CHECK(von_neumann_entropy(families::zurek(0.0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("entropy bounds, subadditivity and Araki-Lieb on random states") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 2 + t % 2;
    const std::size_t n = 2 + (t / 2) % 3;
    const std::size_t rank = 1 + t % (m * n);
    const auto rho = random_density(m * n, rank, rng);
    const auto joint = validate(rho.matrix(), Split{m, n});
    const double h = von_neumann_entropy(joint);
    const double hs = von_neumann_entropy(reduced_S(joint));
    const double ha = von_neumann_entropy(reduced_A(joint));
    CHECK(h >= -1e-12);
    CHECK(h <= std::log2(static_cast<double>(std::min(rank, m * n))) + 1e-9);
    CHECK(h <= hs + ha + 1e-9);
    CHECK(h >= std::abs(hs - ha) - 1e-9);
  }
}

TEST_CASE("reduced states and swapping") {
  const auto rho = families::zurek(0.4);
  CHECK(max_abs_diff(reduced_S(rho).matrix(), diag({0.5, 0.5})) < 1e-15);
  CHECK(max_abs_diff(reduced_A(rho).matrix(), diag({0.5, 0.5})) < 1e-15);

  const auto product = validate(tensor_product(diag({0.9, 0.1}), diag({0.2, 0.3, 0.5})), Split{2, 3});
  const auto swapped = swap_subsystems(product);
  CHECK(swapped.require_split() == Split{3, 2});
  CHECK(max_abs_diff(swapped.matrix(), tensor_product(diag({0.2, 0.3, 0.5}), diag({0.9, 0.1}))) < 1e-15);
  CHECK(max_abs_diff(swap_subsystems(swapped).matrix(), product.matrix()) == 0.0);
}

TEST_CASE("separable construction") {
  const auto zero = validate(diag({1, 0}));
  const auto one = validate(diag({0, 1}));
  const auto spec = make_separable_spec({0.5, 0.5}, {{zero, zero}, {one, one}});
  CHECK(spec.split() == Split{2, 2});
  CHECK(max_abs_diff(assemble_separable(spec).matrix(), families::zurek_matrix(0.0)) < 1e-15);

  CHECK_THROWS_AS(make_separable_spec({0.5, 0.6}, {{zero, zero}, {one, one}}), ValidationError);
  CHECK_THROWS_AS(make_separable_spec({1.2, -0.2}, {{zero, zero}, {one, one}}), ValidationError);
  CHECK_THROWS_AS(make_separable_spec({1.0}, {{zero, zero}, {one, one}}), std::invalid_argument);
  CHECK_THROWS_AS(make_separable_spec({0.5, 0.5}, {{zero, zero}, {one, validate(diag({0.5, 0.25, 0.25}))}}),
                  DimensionError);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto s = random_separable(2, 3, 3, rng);
    double total = 0.0;
    for (double w : s.weights) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    const auto rho = assemble_separable(s);
    CHECK(rho.require_split() == Split{2, 3});
    CHECK(has_positive_partial_transpose(rho));
  }
  const auto a = random_separable(2, 2, 4, 99);
  const auto b = random_separable(2, 2, 4, 99);
  CHECK(max_abs_diff(assemble_separable(a).matrix(), assemble_separable(b).matrix()) == 0.0);
}

TEST_CASE("classical-classical states") {
  std::mt19937_64 rng(4);
  const auto bs = random_basis(2, rng);
  const auto ba = random_basis(3, rng);
  const std::vector<std::vector<double>> p{{0.1, 0.2, 0.05}, {0.3, 0.15, 0.2}};
  const auto rho = classical_classical(p, bs, ba);
  CHECK(rho.require_split() == Split{2, 3});
  const auto dist = outcome_distribution(rho, product_basis(bs, ba));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(dist[i * 3 + j] == doctest::Approx(p[i][j]).epsilon(1e-12));
  CHECK_THROWS(classical_classical({{0.5, 0.5}}, bs, ba));
}

TEST_CASE("PPT test") {
  CHECK(has_positive_partial_transpose(families::werner(0.0)));
  CHECK(has_positive_partial_transpose(families::werner(-1.0 / 3.0)));
  CHECK_FALSE(has_positive_partial_transpose(families::werner(-0.5)));
  CHECK_FALSE(has_positive_partial_transpose(families::zurek(0.2)));
  CHECK(has_positive_partial_transpose(families::zurek(0.0)));
}

TEST_CASE("random density matrices") {
  const auto a = random_density(4, 2, 11);
  const auto b = random_density(4, 2, 11);
  CHECK(max_abs_diff(a.matrix(), b.matrix()) == 0.0);
  const auto s = hermitian_eigendecomposition(a.matrix());
  CHECK(s.eigenvalues[1] > 1e-6);
  CHECK(std::abs(s.eigenvalues[2]) < 1e-12);
  CHECK(std::abs(s.eigenvalues[3]) < 1e-12);
  std::mt19937_64 rng(0);
  const auto w = random_simplex_point(5, rng);
  double total = 0.0;
  for (double v : w) {
    CHECK(v >= 0.0);
    total += v;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
}
