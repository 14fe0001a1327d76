#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmk/partition.hpp"
#include "kmk/rational.hpp"

namespace kmk {

using Count = BigInt;

// Sequence of ±1 steps whose prefix sums (from height 0) never go negative.
class LatticePath {
 public:
  LatticePath() = default;
  // Throws std::invalid_argument on a step other than ±1 or a negative prefix.
  explicit LatticePath(std::vector<int> steps);
  // "UUDD"-style spelling.
  static LatticePath parse(std::string_view spelling);

  const std::vector<int>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int end_height() const;
  bool is_balanced() const { return end_height() == 0; }
  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<int> steps_;
};

class UnbalancedPath : public std::invalid_argument {
 public:
  UnbalancedPath() : std::invalid_argument("path does not return to height 0") {}
};

// #P(length, start, end): nonnegative ±1 paths from height start to height end.
Count enum_paths(int length, int start_height, int end_height);

// table[j1][i][j2] = #P(i, j1, j2) for i <= max_length, j1 <= max_start, j2 <= max_end.
std::vector<std::vector<std::vector<Count>>> path_count_table(int max_length, int max_start, int max_end);

// Every balanced nonnegative path of length 2k, by exhaustive generation.
std::vector<LatticePath> dyck_paths(int k);

// Young diagram of the region between p and the bounding triangle
// (0,0),(k,k),(2k,0): one row per down step, of length equal to the
// number of up steps after it (the boxes pairing that down step with a
// later up step). Throws UnbalancedPath.
Partition path_to_partition(const LatticePath& p);

// (down-step index, up-step index) pairs, indices into the step sequence.
struct Marking {
  std::vector<std::pair<int, int>> pairs;
};

// True when the pairs use distinct steps of the right kinds and each down
// step precedes its up step.
bool is_valid_marking(const LatticePath& p, const Marking& m);

// All markings with exactly g pairs, exhaustively.
std::vector<Marking> enumerate_markings(const LatticePath& p, int g);

// Number of markings with g pairs, by a left-to-right count of open
// marked down steps.
Count count_markings(const LatticePath& p, int g);

}  // namespace kmk
