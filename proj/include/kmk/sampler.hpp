#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "kmk/partition.hpp"
#include "kmk/rational.hpp"

namespace kmk {

class DuplicateEntries : public std::invalid_argument {
 public:
  DuplicateEntries() : std::invalid_argument("RSK input has repeated entries") {}
};

// Per-trial engines derived from one seed: trial t always gets the same
// stream, independent of which thread runs it.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t seed() const { return seed_; }
  std::mt19937_64 trial_engine(std::uint64_t trial) const;

 private:
  std::uint64_t seed_;
};

// Shape of the RSK insertion tableau.
Partition rsk_shape(std::span<const int> word);

// Plancherel-distributed partition of `size`: RSK shape of a uniform permutation.
Partition sample_plancherel(int size, std::mt19937_64& engine);

// |λ| ~ Poisson(n), then Plancherel given |λ|.
Partition sample_pp(int n, std::mt19937_64& engine);

// Number of standard Young tableaux of the shape (hook length formula).
BigInt dimension(const Partition& shape);

// Transition measure of λ. Atoms sit at the contents of the addable cells
// (upper corners); the removable-cell contents are the lower corners.
// Positions are stored unscaled; the measure at Poissonization n lives on
// atom / sqrt(n), so even moments are exact rationals.
struct TransitionMeasure {
  int n = 1;
  std::vector<BigInt> atoms;
  std::vector<BigInt> lower;
  std::vector<BigRational> weights;

  // Σ w a^p in unscaled coordinates.
  BigRational raw_moment(int p) const;
  // ∫x^(2k) dμ_λ at scale 1/sqrt(n): n^-k Σ w a^(2k).
  BigRational even_moment(int k) const;
  BigRational total_mass() const { return raw_moment(0); }
  BigRational mean_unscaled() const { return raw_moment(1); }
  // Second moment at scale 1/sqrt(n).
  BigRational variance() const { return even_moment(1); }
  // atoms[0] < lower[0] < atoms[1] < ... < lower.back() < atoms.back()
  bool interlaces() const;
};

// Weight at atom a_i: Π_j (a_i - b_j) / Π_{l≠i} (a_i - a_l).
TransitionMeasure transition_measure(const Partition& shape, int n);

// Exact Plancherel average over |λ| = size of the unscaled Σ w a^(2k).
BigRational plancherel_average_moment(int size, int k);

struct MonteCarloEstimate {
  double estimate = 0;
  double standard_error = 0;
};

// Sample mean and standard error of ∫x^(2k) dμ_λ over λ ~ PP(n). Each
// trial is exact; results are bit-identical for any thread count.
MonteCarloEstimate mc_moment(int n, int k, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace kmk
