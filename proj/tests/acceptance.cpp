#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "kmk/ansatz.hpp"
#include "kmk/commands.hpp"
#include "kmk/fine_structure.hpp"
#include "kmk/operator_series.hpp"
#include "kmk/paths.hpp"
#include "kmk/rooks.hpp"
#include "kmk/sampler.hpp"
#include "kmk/words.hpp"

using namespace kmk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(std::string detail) const {
    if (failures_ == 0) return {true, std::move(detail)};
    return {false, std::to_string(failures_) + " mismatch(es), first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

int failed = 0;

void run(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.pass && elapsed > limit_seconds) {
    out = {false, "exceeded time limit " + std::to_string(limit_seconds) + " s"};
  }
  failed += out.pass ? 0 : 1;
  std::printf("%s %s: %s (%.2f s) %s\n", id, out.pass ? "PASS" : "FAIL", title, elapsed, out.detail.c_str());
  std::fflush(stdout);
}

std::string show(const std::map<int, BigRational>& m) {
  std::string s = "{";
  for (const auto& [k, v] : m) s += (s.size() > 1 ? "," : "") + std::to_string(k) + ":" + to_string(v);
  return s + "}";
}

AnsatzSum random_ansatz(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> exponent(0, 4);
  std::uniform_int_distribution<int> degree(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  AnsatzSum s;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<BigRational> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    s.add(PolyC(std::move(c)), exponent(rng), exponent(rng));
  }
  return s;
}

Outcome theta_table() {
  const std::map<int, std::map<int, BigRational>> expected{
      {1, {{2, 1}}},
      {2, {{3, 1}, {4, 14}, {5, 15}}},
      {3, {{4, 1}, {5, 64}, {6, 565}, {7, 1122}, {8, 630}}},
      {4, {{5, 1}, {6, 222}, {7, 5820}, {8, 42500}, {9, 110670}, {10, 118740}, {11, 45045}}},
  };
  Checker check;
  for (const auto& [g, row] : expected) {
    const auto theta = fine_structure_form(phi(g), g).theta;
    check.expect(theta == row, "g=" + std::to_string(g) + " got " + show(theta));
  }
  return check.outcome("4 rows, 16 entries exact");
}

Outcome phi_one() {
  const PolyC c{0, 1};
  const RationalFnC expected(c * PolyC{-1, 1}.pow(2), PolyC{2, -1}.pow(3));
  const RationalFnC got = phi(1);
  Checker check;
  check.expect(got == expected, got.to_string());
  return check.outcome("Phi_1 = " + got.to_string());
}

Outcome leading_order() {
  Checker check;
  check.expect(phi(0) == RationalFnC(PolyC{0, 1}), "Phi_0 = " + phi(0).to_string());
  const SeriesX s = expand_in_x(phi(0), 10);
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (std::size_t k = 0; k < 6; ++k) {
    check.expect(s[2 * k] == catalan[k], "[x^" + std::to_string(2 * k) + "] = " + to_string(s[2 * k]));
    if (2 * k + 1 <= 10) check.expect(s[2 * k + 1] == 0, "odd coefficient nonzero");
  }
  return check.outcome("1,1,2,5,14,42");
}

Outcome three_way() {
  constexpr int kMax = 8;
  constexpr int gMax = 4;
  Checker check;
  std::vector<SeriesX> expansions;
  for (int g = 0; g <= gMax; ++g) expansions.push_back(expand_in_x(phi(g), 2 * kMax + 1));
  for (int k = 1; k <= kMax; ++k) {
    const MomentPolynomial rooks = moment_polynomial(k);
    check.expect(word_moment(k) == rooks, "word_moment(" + std::to_string(k) + ")");
    for (int g = 0; g <= gMax; ++g) {
      const auto it = rooks.counts.find(g);
      const BigRational count = it == rooks.counts.end() ? BigRational(0) : BigRational(it->second);
      const BigRational coeff = expansions[static_cast<std::size_t>(g)][2 * static_cast<std::size_t>(k)];
      check.expect(coeff == count, "k=" + std::to_string(k) + " g=" + std::to_string(g));
    }
  }
  const std::string display = moment_polynomial(2).display();
  check.expect(display == "2 + 1·n⁻¹", "k=2 display " + display);
  return check.outcome("k<=8, g<=4; k=2: " + display);
}

Outcome structure() {
  constexpr int gMax = 6;
  Checker check;
  const auto iterates = operator_chain_iterates(gMax);
  for (int r = 1; r <= gMax; ++r) {
    const auto& it = iterates[static_cast<std::size_t>(r)];
    const std::string violation = iterate_shape_violation(it, r);
    check.expect(violation.empty(), "r=" + std::to_string(r) + ": " + violation);
    const auto form = fine_structure_form(y0_coefficient(it), r);
    check.expect(within_theorem_support(form), "support g=" + std::to_string(r) + " " + show(form.theta));
  }
  return check.outcome("g<=6");
}

Outcome operator_equivalence() {
  constexpr std::size_t xOrder = 16;
  constexpr std::size_t yOrder = 8;
  constexpr int cases = 50;
  Checker check;
  std::mt19937_64 rng(20160406);
  for (int trial = 0; trial < cases; ++trial) {
    const AnsatzSum s = random_ansatz(rng);
    const int r = trial % 5;
    check.expect(ansatz_to_series(euler_apply(r, s), xOrder, yOrder) ==
                     euler_series(r, ansatz_to_series(s, xOrder, yOrder)),
                 "euler_apply case " + std::to_string(trial));
    check.expect(ansatz_to_series(g_apply(r, s), xOrder, yOrder) ==
                     g_series(r, ansatz_to_series(s, xOrder, xOrder + yOrder), xOrder, yOrder),
                 "g_apply case " + std::to_string(trial));
  }
  return check.outcome(std::to_string(cases) + " random sums per operator, x^16 y^8");
}

Outcome generating_functions() {
  constexpr int iMax = 12;
  constexpr int hMax = 2 * iMax;
  Checker check;
  const auto counts = path_count_table(iMax, hMax, hMax);
  const BiSeries f = ansatz_to_series(f_initial(), iMax, hMax);
  const TriSeries g = kernel_series(iMax, hMax, hMax);
  for (int i = 0; i <= iMax; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (int a = 0; a <= hMax; ++a) {
      const auto ua = static_cast<std::size_t>(a);
      check.expect(f(ui, ua) == counts[0][ui][ua], "F x^" + std::to_string(i) + " y^" + std::to_string(a));
      for (int b = 0; b <= hMax; ++b) {
        const auto ub = static_cast<std::size_t>(b);
        check.expect(g(ui, ua, ub) == counts[ua][ui][ub],
                     "G x^" + std::to_string(i) + " y^" + std::to_string(a) + " z^" + std::to_string(b));
      }
    }
  }
  return check.outcome("i<=12, heights<=24");
}

Outcome transition_measures() {
  Checker check;
  int shapes = 0;
  for (int size = 0; size <= 6; ++size) {
    for (const auto& shape : partitions_of(size)) {
      ++shapes;
      for (int n = 1; n <= 3; ++n) {
        const auto mu = transition_measure(shape, n);
        const std::string tag = shape.to_string() + " n=" + std::to_string(n);
        for (const auto& w : mu.weights) check.expect(w > 0, tag + " nonpositive weight");
        check.expect(mu.total_mass() == 1, tag + " mass");
        check.expect(mu.mean_unscaled() == 0, tag + " mean");
        check.expect(mu.variance() == make_rational(size, n), tag + " variance");
        check.expect(mu.interlaces(), tag + " interlacing");
      }
    }
  }
  return check.outcome(std::to_string(shapes) + " shapes, n=1..3");
}

Outcome monte_carlo() {
  constexpr int n = 2;
  constexpr std::uint64_t trials = 1'000'000;
  const std::uint64_t seed = cli::kDefaultSeed;
  std::ostringstream detail;
  bool pass = true;
  for (int k : {2, 3}) {
    const BigRational exact = moment_polynomial(k).eval(n);
    const auto est = mc_moment(n, k, trials, seed, 1);
    const double z = (est.estimate - exact.get_d()) / est.standard_error;
    pass = pass && std::abs(z) <= 4.0;
    detail << "m" << 2 * k << " = " << est.estimate << " +- " << est.standard_error << " vs " << to_string(exact)
           << " (z = " << z << "); ";
  }
  detail << "seed " << seed;
  return {pass, detail.str()};
}

}  // namespace

int main() {
  run("AC1", "theta table", 10, theta_table);
  run("AC2", "Phi_1 closed form", 1, phi_one);
  run("AC3", "leading order", 1, leading_order);
  run("AC4", "three-way oracle agreement", 300, three_way);
  run("AC5", "structural invariants", 120, structure);
  run("AC6", "operator/series equivalence", 120, operator_equivalence);
  run("AC7", "generating-function path counts", 60, generating_functions);
  run("AC8", "transition-measure exactness", 60, transition_measures);
  run("AC9", "Monte Carlo agreement", 300, monte_carlo);
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
