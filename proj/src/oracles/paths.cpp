#include "kmk/paths.hpp"

#include <functional>
#include <numeric>

namespace kmk {

LatticePath::LatticePath(std::vector<int> steps) : steps_(std::move(steps)) {
  int height = 0;
  for (int s : steps_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("path steps must be +1 or -1");
    }
    height += s;
    if (height < 0) {
      throw std::invalid_argument("path goes below height 0");
    }
  }
}

LatticePath LatticePath::parse(std::string_view spelling) {
  std::vector<int> steps;
  steps.reserve(spelling.size());
  for (char ch : spelling) {
    if (ch == 'U') {
      steps.push_back(1);
    } else if (ch == 'D') {
      steps.push_back(-1);
    } else {
      throw std::invalid_argument("path spelling uses only U and D");
    }
  }
  return LatticePath(std::move(steps));
}

int LatticePath::end_height() const { return std::accumulate(steps_.begin(), steps_.end(), 0); }

std::string LatticePath::to_string() const {
  std::string s;
  for (int step : steps_) {
    s += step > 0 ? 'U' : 'D';
  }
  return s;
}

namespace {

// counts[h] after `length` steps from `start`.
std::vector<Count> path_counts_from(int length, int start) {
  std::vector<Count> cur(static_cast<std::size_t>(start + length + 2));
  cur[static_cast<std::size_t>(start)] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<Count> next(cur.size());
    for (std::size_t h = 0; h + 1 < cur.size(); ++h) {
      if (cur[h] == 0) {
        continue;
      }
      next[h + 1] += cur[h];
      if (h > 0) {
        next[h - 1] += cur[h];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Count enum_paths(int length, int start_height, int end_height) {
  if (length < 0 || start_height < 0 || end_height < 0) {
    throw std::invalid_argument("enum_paths arguments must be nonnegative");
  }
  const auto counts = path_counts_from(length, start_height);
  return static_cast<std::size_t>(end_height) < counts.size() ? counts[static_cast<std::size_t>(end_height)]
                                                              : Count(0);
}

std::vector<std::vector<std::vector<Count>>> path_count_table(int max_length, int max_start, int max_end) {
  std::vector<std::vector<std::vector<Count>>> table(static_cast<std::size_t>(max_start) + 1);
  for (int j1 = 0; j1 <= max_start; ++j1) {
    auto& by_length = table[static_cast<std::size_t>(j1)];
    by_length.assign(static_cast<std::size_t>(max_length) + 1,
                     std::vector<Count>(static_cast<std::size_t>(max_end) + 1));
    std::vector<Count> cur(static_cast<std::size_t>(j1 + max_length + 2));
    cur[static_cast<std::size_t>(j1)] = 1;
    for (int i = 0; i <= max_length; ++i) {
      for (int j2 = 0; j2 <= max_end && static_cast<std::size_t>(j2) < cur.size(); ++j2) {
        by_length[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)] = cur[static_cast<std::size_t>(j2)];
      }
      std::vector<Count> next(cur.size());
      for (std::size_t h = 0; h + 1 < cur.size(); ++h) {
        if (cur[h] == 0) {
          continue;
        }
        next[h + 1] += cur[h];
        if (h > 0) {
          next[h - 1] += cur[h];
        }
      }
      cur = std::move(next);
    }
  }
  return table;
}

std::vector<LatticePath> dyck_paths(int k) {
  if (k < 0) {
    throw std::invalid_argument("dyck_paths requires k >= 0");
  }
  std::vector<LatticePath> out;
  std::vector<int> steps;
  std::function<void(int, int)> extend = [&](int ups, int downs) {
    if (ups == k && downs == k) {
      out.emplace_back(steps);
      return;
    }
    if (ups < k) {
      steps.push_back(1);
      extend(ups + 1, downs);
      steps.pop_back();
    }
    if (downs < ups) {
      steps.push_back(-1);
      extend(ups, downs + 1);
      steps.pop_back();
    }
  };
  extend(0, 0);
  return out;
}

Partition path_to_partition(const LatticePath& p) {
  if (!p.is_balanced()) {
    throw UnbalancedPath();
  }
  std::vector<int> parts;
  int ups_after = 0;
  for (auto it = p.steps().rbegin(); it != p.steps().rend(); ++it) {
    if (*it > 0) {
      ++ups_after;
    } else if (ups_after > 0) {
      parts.push_back(ups_after);
    }
  }
  // Collected from the last down step backwards: reverse to decreasing order.
  return Partition(std::vector<int>(parts.rbegin(), parts.rend()));
}

bool is_valid_marking(const LatticePath& p, const Marking& m) {
  std::vector<bool> used(static_cast<std::size_t>(p.length()), false);
  for (const auto& [d, u] : m.pairs) {
    if (d < 0 || u < 0 || d >= p.length() || u >= p.length()) {
      return false;
    }
    if (p.steps()[static_cast<std::size_t>(d)] != -1 || p.steps()[static_cast<std::size_t>(u)] != 1 || d >= u) {
      return false;
    }
    if (used[static_cast<std::size_t>(d)] || used[static_cast<std::size_t>(u)]) {
      return false;
    }
    used[static_cast<std::size_t>(d)] = used[static_cast<std::size_t>(u)] = true;
  }
  return true;
}

std::vector<Marking> enumerate_markings(const LatticePath& p, int g) {
  std::vector<Marking> out;
  if (g < 0) {
    return out;
  }
  std::vector<int> open;  // unmatched marked down steps
  Marking current;
  std::function<void(int)> walk = [&](int pos) {
    const int remaining_pairs = g - static_cast<int>(current.pairs.size());
    if (pos == p.length()) {
      if (remaining_pairs == 0 && open.empty()) {
        out.push_back(current);
      }
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(pos);
    walk(pos + 1);
    if (p.steps()[idx] < 0) {
      if (static_cast<int>(open.size()) < remaining_pairs) {
        open.push_back(pos);
        walk(pos + 1);
        open.pop_back();
      }
      return;
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      const int d = open[i];
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
      current.pairs.emplace_back(d, pos);
      walk(pos + 1);
      current.pairs.pop_back();
      open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), d);
    }
  };
  walk(0);
  return out;
}

Count count_markings(const LatticePath& p, int g) {
  if (g < 0) {
    return 0;
  }
  // ways[open][pairs]
  const auto dim = static_cast<std::size_t>(g) + 1;
  std::vector<std::vector<Count>> ways(dim, std::vector<Count>(dim));
  ways[0][0] = 1;
  for (int step : p.steps()) {
    std::vector<std::vector<Count>> next = ways;  // step left unmarked
    for (std::size_t open = 0; open < dim; ++open) {
      for (std::size_t pairs = 0; pairs < dim; ++pairs) {
        const Count& w = ways[open][pairs];
        if (w == 0) {
          continue;
        }
        if (step < 0 && open + pairs < static_cast<std::size_t>(g)) {
          next[open + 1][pairs] += w;
        } else if (step > 0 && open > 0 && pairs + 1 < dim) {
          next[open - 1][pairs + 1] += w * static_cast<unsigned long>(open);
        }
      }
    }
    ways = std::move(next);
  }
  return ways[0][static_cast<std::size_t>(g)];
}

}  // namespace kmk
