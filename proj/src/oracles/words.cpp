#include "kmk/words.hpp"

#include <stdexcept>
#include <unordered_map>

namespace kmk {
namespace {

class NormalOrderer {
 public:
  const std::vector<Count>& value(const std::string& word) {
    if (auto it = memo_.find(word); it != memo_.end()) {
      return it->second;
    }
    std::vector<Count> result;
    const auto pos = word.find("DU");
    if (pos == std::string::npos) {
      result = {Count(1)};
    } else {
      std::string swapped = word;
      swapped[pos] = 'U';
      swapped[pos + 1] = 'D';
      std::string contracted = word;
      contracted.erase(pos, 2);
      result = value(swapped);
      const std::vector<Count> tail = value(contracted);  // copy: memo_ may rehash
      if (result.size() < tail.size() + 1) {
        result.resize(tail.size() + 1);
      }
      for (std::size_t i = 0; i < tail.size(); ++i) {
        result[i + 1] += tail[i];
      }
    }
    return memo_.emplace(word, std::move(result)).first->second;
  }

 private:
  std::unordered_map<std::string, std::vector<Count>> memo_;
};

}  // namespace

std::vector<Count> normal_ordered_value(const std::string& word) {
  for (char ch : word) {
    if (ch != 'U' && ch != 'D') {
      throw std::invalid_argument("operator words use only U and D");
    }
  }
  NormalOrderer orderer;
  return orderer.value(word);
}

MomentPolynomial word_moment(int k) {
  if (k < 1) {
    throw std::invalid_argument("word_moment requires k >= 1");
  }
  NormalOrderer orderer;
  std::vector<Count> total;
  for (const auto& path : dyck_paths(k)) {
    const auto& v = orderer.value(path.to_string());
    if (total.size() < v.size()) {
      total.resize(v.size());
    }
    for (std::size_t g = 0; g < v.size(); ++g) {
      total[g] += v[g];
    }
  }
  MomentPolynomial m;
  m.k = k;
  for (std::size_t g = 0; g < total.size(); ++g) {
    if (total[g] != 0) {
      m.counts.emplace(static_cast<int>(g), total[g]);
    }
  }
  return m;
}

}  // namespace kmk
