#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kmk/partition.hpp"
#include "kmk/paths.hpp"
#include "kmk/rational.hpp"

namespace kmk {

// Cells are (row, column), both 0-based; row r holds columns 0..part(r)-1.
struct RookPlacement {
  Partition shape;
  std::vector<std::pair<int, int>> rooks;

  // Every rook inside the diagram and no two sharing a row or a column.
  bool is_valid() const;
};

// Λ_k, generated directly from the constraint π_i <= k - i.
std::vector<Partition> staircase_partitions(int k);

// All placements of g non-attacking rooks, by backtracking over rows.
std::vector<RookPlacement> rook_placements(const Partition& shape, int g);

// Number of g-rook placements on a Ferrers board: rows taken shortest
// first, a row of length L with j rooks already placed offers L - j columns.
Count count_rook_placements(const Partition& shape, int g);

// The rook placement a marking induces on path_to_partition(p): the pair
// (d, u) occupies row = rank of d among down steps, column = number of up
// steps after u.
RookPlacement marking_to_rooks(const LatticePath& p, const Marking& m);

// #RC_g(k) summed over Λ_k with the per-shape Ferrers count.
Count rook_counts(int k, int g);
// Same quantity by listing every placement.
Count rook_counts_exhaustive(int k, int g);
// Same quantity as Σ over paths of length 2k of count_markings.
Count rook_counts_by_paths(int k, int g);

// E[∫x^(2k) dμ_λ] = Σ_g counts[g] n^-g. Only nonzero counts are stored.
struct MomentPolynomial {
  int k = 1;
  std::map<int, Count> counts;

  BigRational eval(const BigRational& n) const;
  // e.g. "2 + 1·n⁻¹"
  std::string display() const;

  friend bool operator==(const MomentPolynomial&, const MomentPolynomial&) = default;
};

MomentPolynomial moment_polynomial(int k);

}  // namespace kmk
