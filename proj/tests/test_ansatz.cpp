#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kmk/ansatz.hpp"
#include "kmk/fine_structure.hpp"
#include "kmk/operator_series.hpp"
#include "kmk/paths.hpp"
#include "kmk/rooks.hpp"

using namespace kmk;

namespace {

const PolyC kC{0, 1};
const PolyC kTwoMinusC{2, -1};
const PolyC kCMinusOne{-1, 1};

AnsatzSum single(const PolyC& num, int a, int b) {
  AnsatzSum s;
  s.add(num, a, b);
  return s;
}

AnsatzSum random_ansatz(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> exponent(0, 3);
  std::uniform_int_distribution<int> degree(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  AnsatzSum s;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<BigRational> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& v : c) {
      v = coeff(rng);
    }
    s.add(PolyC(std::move(c)), exponent(rng), exponent(rng));
  }
  return s;
}

std::map<int, BigRational> theta_of(int g) { return fine_structure_form(phi(g), g).theta; }

}  // namespace

TEST_CASE("canonical ansatz sums merge terms per b with minimal a") {
  AnsatzSum s;
  s.add(kC * kTwoMinusC, 2, 1);
  CHECK(s.terms() == std::vector<AnsatzTerm>{{kC, 1, 1}});
  s.add(-kC, 1, 1);
  CHECK(s.empty());

  AnsatzSum t;
  t.add(PolyC{1}, 0, 2);
  t.add(PolyC{1}, 1, 2);  // 1 + 1/(2-c) = (3-c)/(2-c)
  CHECK(t.terms() == std::vector<AnsatzTerm>{{PolyC{3, -1}, 1, 2}});
  CHECK_THROWS_AS(t.add(PolyC{1}, -1, 0), std::invalid_argument);
}

TEST_CASE("f_initial is c/(1-u)") {
  CHECK(f_initial().terms() == std::vector<AnsatzTerm>{{kC, 0, 1}});
  CHECK(ansatz_to_series(f_initial(), 0, 0)(0, 0) == 1);
}

TEST_CASE("series of F counts nonnegative paths by end height") {
  const BiSeries f = ansatz_to_series(f_initial(), 12, 12);
  for (int i = 0; i <= 12; ++i) {
    for (int j = 0; j <= 12; ++j) {
      CHECK(f(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == enum_paths(i, 0, j));
    }
  }
  CHECK(f(3, 1) == 2);
  CHECK(f(2, 0) == 1);
}

TEST_CASE("zero ansatz expands to zero") {
  const BiSeries z = ansatz_to_series(AnsatzSum{}, 5, 5);
  CHECK(z == BiSeries(5, 5));
}

TEST_CASE("euler_apply examples") {
  // ½(x∂x - y∂y) F = c(c-1)/(2-c) · 1/(1-u)^2
  CHECK(euler_apply(0, f_initial()) == single(kC * kCMinusOne, 1, 2));
  CHECK(euler_apply(0, single(kC, 0, 0)) == single(kC * kCMinusOne, 1, 0));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const AnsatzSum s = random_ansatz(rng);
    CHECK(euler_apply(5, s) == euler_apply(0, s) - s * BigRational(5));
  }
}

TEST_CASE("y0_coefficient") {
  CHECK(y0_coefficient(single(kC, 0, 5)) == RationalFnC(kC));
  CHECK(y0_coefficient(f_initial()) == RationalFnC(kC));
  CHECK(y0_coefficient(euler_apply(0, f_initial())) == RationalFnC(kC * kCMinusOne, kTwoMinusC));
}

TEST_CASE("g_apply examples") {
  CHECK(y0_coefficient(g_apply(0, f_initial())) == RationalFnC(kC * kCMinusOne.pow(2), kTwoMinusC.pow(3)));
  CHECK(g_apply(0, AnsatzSum{}).empty());
  CHECK(theta_of(2) == std::map<int, BigRational>{{3, 1}, {4, 14}, {5, 15}});
  CHECK(y0_coefficient(g_apply(1, g_apply(0, f_initial()))) == phi(2));
}

TEST_CASE("phi closed forms") {
  CHECK(phi(0) == RationalFnC(kC));
  CHECK(phi(1) == RationalFnC(kC * kCMinusOne.pow(2), kTwoMinusC.pow(3)));
  CHECK(theta_of(3) == std::map<int, BigRational>{{4, 1}, {5, 64}, {6, 565}, {7, 1122}, {8, 630}});
  CHECK(theta_of(4) ==
        std::map<int, BigRational>{{5, 1}, {6, 222}, {7, 5820}, {8, 42500}, {9, 110670}, {10, 118740}, {11, 45045}});
  CHECK_THROWS_AS(phi(-1), std::invalid_argument);
}

TEST_CASE("euler_apply matches coefficientwise (i-j)/2 - r") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const AnsatzSum s = random_ansatz(rng);
    const int r = trial % 4;
    CHECK(ansatz_to_series(euler_apply(r, s), 14, 8) == euler_series(r, ansatz_to_series(s, 14, 8)));
  }
}

TEST_CASE("g_apply matches the defining sum over path-count kernels") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const AnsatzSum s = random_ansatz(rng);
    const int k = trial % 3;
    CHECK(ansatz_to_series(g_apply(k, s), 12, 6) == g_series(k, ansatz_to_series(s, 12, 18), 12, 6));
  }
  const AnsatzSum chain2 = operator_chain(2);
  CHECK(ansatz_to_series(g_apply(2, chain2), 12, 6) == g_series(2, ansatz_to_series(chain2, 12, 18), 12, 6));
}

TEST_CASE("kernel closed form matches path counts") {
  const TriSeries g = kernel_series(8, 6, 6);
  for (int i = 0; i <= 8; ++i) {
    for (int a = 0; a <= 6; ++a) {
      for (int b = 0; b <= 6; ++b) {
        CHECK(g(static_cast<std::size_t>(i), static_cast<std::size_t>(a), static_cast<std::size_t>(b)) ==
              enum_paths(i, a, b));
      }
    }
  }
}

TEST_CASE("operator-chain iterates keep the ansatz shape and theta support [g+1, 3g-1]") {
  const auto iterates = operator_chain_iterates(6);
  for (int r = 1; r <= 6; ++r) {
    const auto& it = iterates[static_cast<std::size_t>(r)];
    CHECK_MESSAGE(iterate_shape_violation(it, r).empty(), iterate_shape_violation(it, r));
    CHECK(it.size() == static_cast<std::size_t>(2 * r));
    CHECK(within_theorem_support(fine_structure_form(y0_coefficient(it), r)));
  }
  // A term outside b = 2..2r+1 is rejected.
  CHECK_FALSE(iterate_shape_violation(f_initial(), 1).empty());
}

TEST_CASE("expansions of Phi_g equal rook counts") {
  constexpr int kMax = 7;
  for (int g = 0; g <= 4; ++g) {
    const SeriesX s = expand_in_x(phi(g), 2 * kMax + 1);
    for (int k = 1; k <= kMax; ++k) {
      CHECK(s[2 * static_cast<std::size_t>(k)] == rook_counts(k, g));
      CHECK(s[2 * static_cast<std::size_t>(k) + 1] == 0);
    }
  }
}
