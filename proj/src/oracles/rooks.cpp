#include "kmk/rooks.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace kmk {

bool RookPlacement::is_valid() const {
  std::set<int> rows;
  std::set<int> cols;
  for (const auto& [r, c] : rooks) {
    if (r < 0 || c < 0 || c >= shape.part(r)) {
      return false;
    }
    if (!rows.insert(r).second || !cols.insert(c).second) {
      return false;
    }
  }
  return true;
}

std::vector<Partition> staircase_partitions(int k) {
  if (k < 1) {
    throw std::invalid_argument("staircase_partitions requires k >= 1");
  }
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int row) {  // row is 1-based index of the next part
    out.emplace_back(parts);
    const int bound = std::min(k - row, parts.empty() ? k : parts.back());
    for (int p = 1; p <= bound; ++p) {
      parts.push_back(p);
      extend(row + 1);
      parts.pop_back();
    }
  };
  extend(1);
  return out;
}

std::vector<RookPlacement> rook_placements(const Partition& shape, int g) {
  std::vector<RookPlacement> out;
  if (g < 0) {
    return out;
  }
  RookPlacement current{shape, {}};
  std::vector<bool> col_used(static_cast<std::size_t>(shape.part(0)), false);
  std::function<void(int)> place = [&](int row) {
    const int placed = static_cast<int>(current.rooks.size());
    if (placed == g) {
      out.push_back(current);
      return;
    }
    if (shape.length() - row < g - placed) {
      return;
    }
    place(row + 1);
    for (int c = 0; c < shape.part(row); ++c) {
      if (col_used[static_cast<std::size_t>(c)]) {
        continue;
      }
      col_used[static_cast<std::size_t>(c)] = true;
      current.rooks.emplace_back(row, c);
      place(row + 1);
      current.rooks.pop_back();
      col_used[static_cast<std::size_t>(c)] = false;
    }
  };
  place(0);
  return out;
}

Count count_rook_placements(const Partition& shape, int g) {
  if (g < 0) {
    return 0;
  }
  const auto dim = static_cast<std::size_t>(g) + 1;
  std::vector<Count> ways(dim);  // ways[j]: j rooks among the rows seen so far
  ways[0] = 1;
  for (int row = shape.length() - 1; row >= 0; --row) {
    const int len = shape.part(row);
    for (std::size_t j = dim - 1; j >= 1; --j) {
      const long free_cols = len - static_cast<long>(j - 1);
      if (free_cols > 0) {
        ways[j] += ways[j - 1] * static_cast<unsigned long>(free_cols);
      }
    }
  }
  return ways[static_cast<std::size_t>(g)];
}

RookPlacement marking_to_rooks(const LatticePath& p, const Marking& m) {
  const auto& steps = p.steps();
  std::vector<int> down_rank(steps.size(), -1);
  std::vector<int> ups_after(steps.size(), 0);
  int rank = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] < 0) {
      down_rank[i] = rank++;
    }
  }
  int seen = 0;
  for (std::size_t i = steps.size(); i-- > 0;) {
    ups_after[i] = seen;
    if (steps[i] > 0) {
      ++seen;
    }
  }
  RookPlacement out{path_to_partition(p), {}};
  for (const auto& [d, u] : m.pairs) {
    out.rooks.emplace_back(down_rank[static_cast<std::size_t>(d)], ups_after[static_cast<std::size_t>(u)]);
  }
  std::sort(out.rooks.begin(), out.rooks.end());
  return out;
}

Count rook_counts(int k, int g) {
  Count total = 0;
  for (const auto& shape : staircase_partitions(k)) {
    total += count_rook_placements(shape, g);
  }
  return total;
}

Count rook_counts_exhaustive(int k, int g) {
  Count total = 0;
  for (const auto& shape : staircase_partitions(k)) {
    total += static_cast<unsigned long>(rook_placements(shape, g).size());
  }
  return total;
}

Count rook_counts_by_paths(int k, int g) {
  if (k < 1) {
    throw std::invalid_argument("rook_counts_by_paths requires k >= 1");
  }
  Count total = 0;
  for (const auto& p : dyck_paths(k)) {
    total += count_markings(p, g);
  }
  return total;
}

BigRational MomentPolynomial::eval(const BigRational& n) const {
  if (n == 0) {
    throw std::domain_error("moment polynomial evaluated at n = 0");
  }
  const BigRational h = BigRational(1) / n;
  BigRational acc = 0;
  for (const auto& [g, count] : counts) {
    BigRational term = count;
    for (int i = 0; i < g; ++i) {
      term *= h;
    }
    acc += term;
  }
  return acc;
}

namespace {

std::string superscript(int value) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(value);
  std::string out;
  for (char ch : s) {
    out += ch == '-' ? "⁻" : digits[ch - '0'];
  }
  return out;
}

}  // namespace

std::string MomentPolynomial::display() const {
  if (counts.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [g, count] : counts) {
    if (!out.empty()) {
      out += " + ";
    }
    out += to_string(count);
    if (g > 0) {
      out += "·n" + superscript(-g);
    }
  }
  return out;
}

MomentPolynomial moment_polynomial(int k) {
  if (k < 1) {
    throw std::invalid_argument("moment_polynomial requires k >= 1");
  }
  MomentPolynomial m;
  m.k = k;
  for (int g = 0;; ++g) {
    Count c = rook_counts(k, g);
    if (c == 0) {
      break;  // Ferrers rook numbers have no internal zeros
    }
    m.counts.emplace(g, std::move(c));
  }
  return m;
}

}  // namespace kmk
