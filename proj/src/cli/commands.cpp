#include "kmk/commands.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "kmk/ansatz.hpp"
#include "kmk/fine_structure.hpp"
#include "kmk/rooks.hpp"
#include "kmk/sampler.hpp"
#include "kmk/serialize.hpp"
#include "kmk/series.hpp"
#include "kmk/words.hpp"

namespace kmk::cli {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw UsageError(what);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Phi_0..Phi_g_max from the chain iterates (iterates[0] is F itself).
std::vector<RationalFnC> phis(const std::vector<AnsatzSum>& iterates) {
  std::vector<RationalFnC> out{phi(0)};
  for (std::size_t g = 1; g < iterates.size(); ++g) {
    out.push_back(y0_coefficient(iterates[g]));
  }
  return out;
}

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

class CheckList {
 public:
  void add(std::string name, const std::string& expected, const std::string& actual) {
    checks_.push_back({std::move(name), expected, actual, expected == actual});
  }
  void add_flag(std::string name, bool ok, const std::string& detail = {}) {
    checks_.push_back({std::move(name), "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
  }
  bool all_pass() const {
    for (const auto& c : checks_) {
      if (!c.pass) {
        return false;
      }
    }
    return true;
  }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

std::string counts_string(const MomentPolynomial& m) { return to_json(m).at("counts").dump(); }

}  // namespace

Report run_theta(int g_max, Format format) {
  require(g_max >= 1, "--g-max must be >= 1");
  const auto closed = phis(operator_chain_iterates(g_max));
  Report report;
  if (format == Format::tsv) {
    std::ostringstream os;
    os << "g\tk\ttheta\n";
    for (int g = 1; g <= g_max; ++g) {
      for (const auto& [k, theta] : fine_structure_form(closed[static_cast<std::size_t>(g)], g).theta) {
        os << g << '\t' << k << '\t' << to_string(theta) << '\n';
      }
    }
    report.text = os.str();
    return report;
  }
  Json rows = Json::array();
  for (int g = 1; g <= g_max; ++g) {
    const auto& f = closed[static_cast<std::size_t>(g)];
    Json row = to_json(fine_structure_form(f, g));
    row["phi"] = to_json(f);
    row["phi_text"] = f.to_string();
    rows.push_back(std::move(row));
  }
  report.text = dump(Json{{"command", "theta"}, {"g_max", g_max}, {"rows", rows}});
  return report;
}

Report run_phi(int g_max, Format format, bool dump_ansatz) {
  require(g_max >= 0, "--g-max must be >= 0");
  const auto iterates = operator_chain_iterates(g_max);
  const auto closed = phis(iterates);
  Report report;
  if (format == Format::tsv) {
    std::ostringstream os;
    os << "g\tphi\n";
    for (int g = 0; g <= g_max; ++g) {
      os << g << '\t' << closed[static_cast<std::size_t>(g)].to_string() << '\n';
    }
    report.text = os.str();
    return report;
  }
  Json rows = Json::array();
  for (int g = 0; g <= g_max; ++g) {
    Json row{{"g", g},
             {"phi", to_json(closed[static_cast<std::size_t>(g)])},
             {"phi_text", closed[static_cast<std::size_t>(g)].to_string()}};
    if (dump_ansatz) {
      row["ansatz"] = to_json(iterates[static_cast<std::size_t>(g)]);
    }
    rows.push_back(std::move(row));
  }
  report.text = dump(Json{{"command", "phi"}, {"g_max", g_max}, {"rows", rows}});
  return report;
}

Report run_moments(int k_max, Format format) {
  require(k_max >= 1, "--k-max must be >= 1");
  Report report;
  if (format == Format::tsv) {
    std::ostringstream os;
    os << "k\tg\tcount\n";
    for (int k = 1; k <= k_max; ++k) {
      for (const auto& [g, count] : moment_polynomial(k).counts) {
        os << k << '\t' << g << '\t' << to_string(count) << '\n';
      }
    }
    report.text = os.str();
    return report;
  }
  Json rows = Json::array();
  for (int k = 1; k <= k_max; ++k) {
    const MomentPolynomial m = moment_polynomial(k);
    Json row = to_json(m);
    row["display"] = m.display();
    rows.push_back(std::move(row));
  }
  report.text = dump(Json{{"command", "moments"}, {"k_max", k_max}, {"rows", rows}});
  return report;
}

Report run_verify(int g_max, int k_max, Format format) {
  require(g_max >= 1, "--g-max must be >= 1");
  require(k_max >= 1, "--k-max must be >= 1");
  CheckList checks;
  const std::size_t order = 2 * static_cast<std::size_t>(k_max) + 1;

  const SeriesX c = catalan_series(order);
  SeriesX rhs = SeriesX::constant(order, 1);
  SeriesX x2c2 = c * c;
  for (std::size_t i = order; i >= 2; --i) {
    x2c2[i] = x2c2[i - 2];
  }
  x2c2[0] = x2c2[1] = 0;
  checks.add_flag("catalan c = 1 + x^2 c^2 to x^" + std::to_string(order), c == rhs + x2c2);

  const auto iterates = operator_chain_iterates(g_max);
  const auto closed = phis(iterates);
  for (int g = 1; g <= g_max; ++g) {
    const std::string violation = iterate_shape_violation(iterates[static_cast<std::size_t>(g)], g);
    checks.add_flag("ansatz shape r=" + std::to_string(g), violation.empty(), violation);
    const FineStructureForm form = fine_structure_form(closed[static_cast<std::size_t>(g)], g);
    checks.add_flag("theta support [g+1, 3g-1] g=" + std::to_string(g), within_theorem_support(form),
                    to_json(form).at("theta").dump());
  }

  std::vector<SeriesX> expansions;
  for (const auto& f : closed) {
    expansions.push_back(expand_in_x(f, order));
  }
  for (int g = 0; g <= g_max; ++g) {
    bool odd_zero = true;
    for (std::size_t i = 1; i <= order; i += 2) {
      odd_zero = odd_zero && expansions[static_cast<std::size_t>(g)][i] == 0;
    }
    checks.add_flag("odd coefficients of Phi_" + std::to_string(g) + " vanish", odd_zero);
  }

  for (int k = 1; k <= k_max; ++k) {
    const MomentPolynomial rooks = moment_polynomial(k);
    const MomentPolynomial words = word_moment(k);
    const std::string ks = std::to_string(k);
    checks.add("word_moment(" + ks + ") = moment_polynomial(" + ks + ")", counts_string(rooks),
               counts_string(words));
    for (int g = 0; g <= g_max; ++g) {
      const std::string gs = std::to_string(g);
      const Count expected = rook_counts(k, g);
      checks.add("marking sum k=" + ks + " g=" + gs, to_string(expected), to_string(rook_counts_by_paths(k, g)));
      checks.add("[x^" + std::to_string(2 * k) + "]Phi_" + gs + " = #RC_" + gs + "(" + ks + ")", to_string(expected),
                 to_string(expansions[static_cast<std::size_t>(g)][2 * static_cast<std::size_t>(k)]));
    }
  }

  Report report;
  report.exit_code = checks.all_pass() ? 0 : 1;
  if (format == Format::tsv) {
    std::ostringstream os;
    os << "check\texpected\tactual\tpass\n";
    for (const auto& ch : checks.checks()) {
      os << ch.name << '\t' << ch.expected << '\t' << ch.actual << '\t' << (ch.pass ? "true" : "false") << '\n';
    }
    report.text = os.str();
    return report;
  }
  Json list = Json::array();
  for (const auto& ch : checks.checks()) {
    list.push_back(Json{{"name", ch.name}, {"expected", ch.expected}, {"actual", ch.actual}, {"pass", ch.pass}});
  }
  report.text = dump(Json{{"command", "verify"},
                          {"g_max", g_max},
                          {"k_max", k_max},
                          {"pass", report.exit_code == 0},
                          {"checks", list}});
  return report;
}

Report run_sample(int n, int k, std::uint64_t trials, std::uint64_t seed, unsigned threads, Format format) {
  require(n >= 1, "--n must be >= 1");
  require(k >= 1, "--k must be >= 1");
  require(trials >= 1, "--trials must be >= 1");
  require(threads >= 1, "--threads must be >= 1");
  const MonteCarloEstimate est = mc_moment(n, k, trials, seed, threads);
  const BigRational predicted = moment_polynomial(k).eval(n);
  const double diff = est.estimate - predicted.get_d();
  Json z = nullptr;
  if (est.standard_error > 0) {
    z = diff / est.standard_error;
  } else if (diff == 0) {
    z = 0.0;
  }
  Report report;
  if (format == Format::tsv) {
    std::ostringstream os;
    os.precision(17);
    os << "n\tk\ttrials\tseed\testimate\tstderr\tpredicted\tz\n"
       << n << '\t' << k << '\t' << trials << '\t' << seed << '\t' << est.estimate << '\t' << est.standard_error
       << '\t' << to_string(predicted) << '\t' << (z.is_null() ? std::string("nan") : z.dump()) << '\n';
    report.text = os.str();
    return report;
  }
  report.text = dump(Json{{"n", n},
                          {"k", k},
                          {"trials", trials},
                          {"seed", seed},
                          {"estimate", est.estimate},
                          {"stderr", est.standard_error},
                          {"predicted", to_string(predicted)},
                          {"z", z}});
  return report;
}

}  // namespace kmk::cli
