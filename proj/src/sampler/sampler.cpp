#include "kmk/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <set>
#include <thread>

namespace kmk {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

constexpr std::uint64_t kChunk = 1U << 14U;

}  // namespace

std::mt19937_64 RngState::trial_engine(std::uint64_t trial) const {
  return std::mt19937_64(splitmix64(splitmix64(seed_) ^ trial));
}

Partition rsk_shape(std::span<const int> word) {
  if (std::set<int>(word.begin(), word.end()).size() != word.size()) {
    throw DuplicateEntries();
  }
  std::vector<std::vector<int>> rows;
  for (int value : word) {
    int bumped = value;
    std::size_t r = 0;
    for (; r < rows.size(); ++r) {
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), bumped);
      if (it == row.end()) {
        row.push_back(bumped);
        break;
      }
      std::swap(*it, bumped);
    }
    if (r == rows.size()) {
      rows.push_back({bumped});
    }
  }
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) {
    parts.push_back(static_cast<int>(row.size()));
  }
  return Partition(std::move(parts));
}

Partition sample_plancherel(int size, std::mt19937_64& engine) {
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), engine);
  return rsk_shape(perm);
}

Partition sample_pp(int n, std::mt19937_64& engine) {
  if (n < 1) {
    throw std::invalid_argument("sample_pp requires n >= 1");
  }
  std::poisson_distribution<int> size_dist(static_cast<double>(n));
  return sample_plancherel(size_dist(engine), engine);
}

BigInt dimension(const Partition& shape) {
  BigInt hooks = 1;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape.part(r); ++c) {
      int below = 0;
      while (shape.part(r + below + 1) > c) {
        ++below;
      }
      hooks *= static_cast<unsigned long>(shape.part(r) - c + below);
    }
  }
  return factorial(static_cast<unsigned long>(shape.size())) / hooks;
}

BigRational TransitionMeasure::raw_moment(int p) const {
  BigRational acc = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), atoms[i].get_mpz_t(), static_cast<unsigned long>(p));
    acc += weights[i] * power;
  }
  return acc;
}

BigRational TransitionMeasure::even_moment(int k) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return raw_moment(2 * k) / scale;
}

bool TransitionMeasure::interlaces() const {
  if (atoms.size() != lower.size() + 1) {
    return false;
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(atoms[i] < lower[i] && lower[i] < atoms[i + 1])) {
      return false;
    }
  }
  return true;
}

TransitionMeasure transition_measure(const Partition& shape, int n) {
  if (n < 1) {
    throw std::invalid_argument("transition_measure requires n >= 1");
  }
  TransitionMeasure mu;
  mu.n = n;
  // Walk rows bottom to top so contents come out increasing.
  const int len = shape.length();
  mu.atoms.emplace_back(-len);
  for (int r = len - 1; r >= 0; --r) {
    const int part = shape.part(r);
    if (part > shape.part(r + 1)) {
      mu.lower.emplace_back(part - 1 - r);
    }
    if (r == 0 || shape.part(r - 1) > part) {
      mu.atoms.emplace_back(part - r);
    }
  }
  mu.weights.reserve(mu.atoms.size());
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    BigInt num = 1;
    BigInt den = 1;
    for (const auto& b : mu.lower) {
      num *= mu.atoms[i] - b;
    }
    for (std::size_t l = 0; l < mu.atoms.size(); ++l) {
      if (l != i) {
        den *= mu.atoms[i] - mu.atoms[l];
      }
    }
    mu.weights.push_back(make_rational(num, den));
  }
  return mu;
}

BigRational plancherel_average_moment(int size, int k) {
  BigRational acc = 0;
  for (const auto& shape : partitions_of(size)) {
    const BigInt dim = dimension(shape);
    acc += BigRational(dim * dim) * transition_measure(shape, 1).raw_moment(2 * k);
  }
  return acc / factorial(static_cast<unsigned long>(size));
}

MonteCarloEstimate mc_moment(int n, int k, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (n < 1 || k < 0 || trials < 1) {
    throw std::invalid_argument("mc_moment requires n >= 1, k >= 0, trials >= 1");
  }
  const RngState rng(seed);
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<double> sums(chunks);
  std::vector<double> sums_sq(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (std::uint64_t chunk = next++; chunk < chunks; chunk = next++) {
      double s = 0;
      double s2 = 0;
      const std::uint64_t end = std::min(trials, (chunk + 1) * kChunk);
      for (std::uint64_t t = chunk * kChunk; t < end; ++t) {
        auto engine = rng.trial_engine(t);
        const double value = transition_measure(sample_pp(n, engine), n).even_moment(k).get_d();
        s += value;
        s2 += value * value;
      }
      sums[chunk] = s;
      sums_sq[chunk] = s2;
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }

  double total = 0;
  double total_sq = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    total += sums[c];
    total_sq += sums_sq[c];
  }
  const auto count = static_cast<double>(trials);
  MonteCarloEstimate out;
  out.estimate = total / count;
  if (trials > 1) {
    const double var = std::max(0.0, (total_sq - total * total / count) / (count - 1));
    out.standard_error = std::sqrt(var / count);
  }
  return out;
}

}  // namespace kmk
