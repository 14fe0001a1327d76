#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kmk/fine_structure.hpp"
#include "kmk/poly.hpp"
#include "kmk/ratfunc.hpp"
#include "kmk/rational.hpp"
#include "kmk/series.hpp"

using namespace kmk;

namespace {

const PolyC kC{0, 1};
const PolyC kTwoMinusC{2, -1};
const PolyC kCMinusOne{-1, 1};

PolyC random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<BigRational> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : coeffs) {
    c = make_rational(num(rng), den(rng));
  }
  return PolyC(std::move(coeffs));
}

RationalFnC phi1_closed() { return RationalFnC(kC * kCMinusOne.pow(2), kTwoMinusC.pow(3)); }

std::vector<BigRational> ints(std::initializer_list<long> values) {
  std::vector<BigRational> out;
  for (long v : values) {
    out.emplace_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("rationals print and parse as p/q") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_string(BigRational(0)) == "0");
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("17") == 17);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("polynomials keep canonical degree") {
  const PolyC p(ints({1, 2, 0, 0}));
  CHECK(p.degree() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(PolyC{}.to_string() == "0");
  CHECK((kC * kCMinusOne.pow(2)).to_string() == "c^3 - 2*c^2 + c");
  CHECK(kTwoMinusC.pow(3).eval(1) == 1);
  CHECK(PolyC({1, 3, 1}).derivative() == PolyC({3, 2}));
}

TEST_CASE("division and gcd") {
  const PolyC a = kCMinusOne.pow(2) * PolyC({3, 0, 1});
  const PolyC b = kCMinusOne * kTwoMinusC;
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(gcd(a, b) == PolyC({-1, 1}));
  CHECK(gcd(PolyC{}, PolyC{}).is_zero());
  CHECK_THROWS_AS(divmod(a, PolyC{}), std::domain_error);

  auto [mult, rest] = strip_root(kTwoMinusC.pow(3) * kC, 2);
  CHECK(mult == 3);
  CHECK(rest == -kC);
}

TEST_CASE("polynomial and rational-function ring laws hold on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const PolyC p = random_poly(rng, 4);
    const PolyC q = random_poly(rng, 4);
    const PolyC s = random_poly(rng, 3);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p * q == q * p);

    PolyC d1 = random_poly(rng, 3);
    PolyC d2 = random_poly(rng, 3);
    if (d1.is_zero() || d2.is_zero()) {
      continue;
    }
    const RationalFnC f(p, d1);
    const RationalFnC g(q, d2);
    const RationalFnC h(s, d1 * d2 + PolyC{1});
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f - g) + g == f);
    if (!g.is_zero()) {
      CHECK((f / g) * g == f);
    }
  }
}

TEST_CASE("rational functions are reduced with monic denominator") {
  const RationalFnC f(kC * kCMinusOne * PolyC({4}), PolyC({2}) * kCMinusOne * kTwoMinusC);
  CHECK(f.den() == PolyC({-2, 1}));
  CHECK(f.num() == PolyC({0, -2}));
  CHECK(RationalFnC(PolyC{}, kTwoMinusC).den() == PolyC({1}));
  CHECK_THROWS_AS(RationalFnC(kC, PolyC{}), std::domain_error);
  CHECK(phi1_closed().to_string() == "(-c^3 + 2*c^2 - c)/(c^3 - 6*c^2 + 12*c - 8)");
}

TEST_CASE("catalan_series") {
  CHECK(catalan_series(10) == SeriesX(10, ints({1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42})));
  CHECK(catalan_series(0) == SeriesX(0, ints({1})));

  for (std::size_t order : {1U, 2U, 7U, 10U, 31U}) {
    const SeriesX c = catalan_series(order);
    // c = 1 + x^2 c^2
    const SeriesX c2 = c * c;
    SeriesX rhs = SeriesX::constant(order, 1);
    for (std::size_t i = 2; i <= order; ++i) {
      rhs[i] += c2[i - 2];
    }
    CHECK(c == rhs);
  }
}

TEST_CASE("catalan derivative identity c'(w) = c^3/(2-c)") {
  for (std::size_t order : {4U, 12U, 25U}) {
    const SeriesX cx = catalan_series(2 * order + 2);
    SeriesX cw(order + 1);
    for (std::size_t i = 0; i <= order + 1; ++i) {
      cw[i] = cx[2 * i];
    }
    SeriesX derivative(order);
    for (std::size_t i = 0; i < order + 1; ++i) {
      derivative[i] = cw[i + 1] * static_cast<unsigned long>(i + 1);
    }
    const SeriesX c = cw.truncated(order);
    CHECK(derivative == c * c * c * substitute(kTwoMinusC, c).inverse());
  }
}

TEST_CASE("expand_in_x") {
  CHECK(expand_in_x(RationalFnC(kC), 12) == catalan_series(12));
  CHECK(expand_in_x(RationalFnC(PolyC{1}), 5) == SeriesX::constant(5, 1));
  // #RC_1(2) = 1 and #RC_1(3) = 8 from the rook oracle.
  CHECK(expand_in_x(phi1_closed(), 6) == SeriesX(6, ints({0, 0, 0, 0, 1, 0, 8})));
  CHECK_THROWS_AS(expand_in_x(RationalFnC(PolyC{1}, kCMinusOne), 4), DenominatorVanishesAtOrigin);
}

TEST_CASE("expand_in_x is multiplicative to truncation order") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 25) {
    const PolyC d1 = random_poly(rng, 3);
    const PolyC d2 = random_poly(rng, 3);
    if (d1.is_zero() || d2.is_zero() || d1.eval(1) == 0 || d2.eval(1) == 0) {
      continue;
    }
    const RationalFnC f(random_poly(rng, 3), d1);
    const RationalFnC h(random_poly(rng, 3), d2);
    CHECK(expand_in_x(f * h, 14) == expand_in_x(f, 14) * expand_in_x(h, 14));
    CHECK(expand_in_x(f + h, 14) == expand_in_x(f, 14) + expand_in_x(h, 14));
    ++checked;
  }
}

TEST_CASE("fine_structure_form") {
  const FineStructureForm phi1 = fine_structure_form(phi1_closed(), 1);
  CHECK(phi1.g == 1);
  CHECK(phi1.theta == std::map<int, BigRational>{{2, 1}});
  CHECK(within_theorem_support(phi1));

  CHECK(fine_structure_form(RationalFnC{}, 3).theta.empty());
  CHECK_THROWS_AS(fine_structure_form(RationalFnC(PolyC{1}), 1), NotFineStructure);
  CHECK_THROWS_AS(fine_structure_form(phi1_closed(), 0), std::invalid_argument);

  FineStructureForm outside{2, {{1, 3}}};
  CHECK_FALSE(within_theorem_support(outside));
}

TEST_CASE("fine-structure round trip") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int g = 1; g <= 5; ++g) {
    FineStructureForm form{g, {}};
    for (int k = g + 1; k <= 3 * g - 1; ++k) {
      const int v = coeff(rng);
      if (v != 0) {
        form.theta.emplace(k, make_rational(v, 1 + (k % 3)));
      }
    }
    const RationalFnC f = from_fine_structure(form);
    CHECK(fine_structure_form(f, g) == form);
    // Every term c t^k/(2-c)^g sits over (2-c)^(g+k), k <= 3g-1.
    if (!f.is_zero()) {
      const PolyC common = kTwoMinusC.pow(static_cast<unsigned>(4 * g - 1));
      auto [scale, rem] = divmod(common, f.den());
      CHECK(rem.is_zero());
      CHECK(RationalFnC(f.num() * scale, common) == f);
    }
  }
}
