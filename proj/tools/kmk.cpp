#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "kmk/commands.hpp"

namespace {

constexpr int kUsageExit = 2;

}  // namespace

int main(int argc, char** argv) {
  using kmk::cli::Format;

  CLI::App app{"Fine-structure moments of the transition measure of Poissonized Plancherel partitions"};
  app.require_subcommand(1);

  int g_max = 4;
  int k_max = 8;
  int n = 2;
  int k = 2;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = kmk::cli::kDefaultSeed;
  unsigned threads = 1;
  bool dump_ansatz = false;
  Format format = Format::json;
  std::string out_path;

  const std::map<std::string, Format> formats{{"json", Format::json}, {"tsv", Format::tsv}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", out_path, "Write the report to FILE instead of stdout");
  };

  auto* theta = app.add_subcommand("theta", "Fine-structure coefficients theta_g(k) and closed forms of Phi_g");
  theta->add_option("--g-max", g_max, "Largest genus")->capture_default_str();
  add_common(theta);

  auto* phi = app.add_subcommand("phi", "Closed forms of Phi_g as rational functions of c");
  phi->add_option("--g-max", g_max, "Largest genus")->capture_default_str();
  phi->add_flag("--dump-ansatz", dump_ansatz, "Include the operator-chain iterates");
  add_common(phi);

  auto* moments = app.add_subcommand("moments", "Exact moment polynomials from rook placements");
  moments->add_option("--k-max", k_max, "Largest half-order 2k")->capture_default_str();
  add_common(moments);

  auto* verify = app.add_subcommand("verify", "Cross-check the pipeline against the combinatorial oracles");
  verify->add_option("--g-max", g_max, "Largest genus")->capture_default_str();
  verify->add_option("--k-max", k_max, "Largest half-order 2k")->capture_default_str();
  add_common(verify);

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of a moment under PP(n)");
  sample->add_option("--n", n, "Poissonization parameter")->capture_default_str();
  sample->add_option("--k", k, "Estimate the 2k-th moment")->capture_default_str();
  sample->add_option("--trials", trials, "Number of independent samples")->capture_default_str();
  sample->add_option("--seed", seed, "Random seed")->capture_default_str();
  sample->add_option("--threads", threads, "Worker threads (output does not depend on it)")->capture_default_str();
  add_common(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  kmk::cli::Report report;
  try {
    if (theta->parsed()) {
      report = kmk::cli::run_theta(g_max, format);
    } else if (phi->parsed()) {
      report = kmk::cli::run_phi(g_max, format, dump_ansatz);
    } else if (moments->parsed()) {
      report = kmk::cli::run_moments(k_max, format);
    } else if (verify->parsed()) {
      report = kmk::cli::run_verify(g_max, k_max, format);
    } else {
      report = kmk::cli::run_sample(n, k, trials, seed, threads, format);
    }
  } catch (const kmk::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  }

  if (out_path.empty()) {
    std::cout << report.text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return kUsageExit;
    }
    out << report.text;
  }
  return report.exit_code;
}
