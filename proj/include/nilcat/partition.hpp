#pragma once

#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nilcat/errors.hpp"
#include "nilcat/matrix.hpp"

namespace nilcat {

/// Weakly decreasing sequence of positive integers (a Jordan type).
/// Ordered lexicographically, the order used for characteristic sequences.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
      if (parts_[i] < parts_[i + 1]) throw Error("partition parts must be weakly decreasing");
    for (int p : parts_)
      if (p <= 0) throw Error("partition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition& rhs) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    os << ')';
    return os.str();
  }

private:
  std::vector<int> parts_;
};

/// Jordan type of a nilpotent operator from its rank sequence: the number of
/// blocks of size >= k is rank(N^{k-1}) - rank(N^k). Avoids any eigenvector
/// computation.
inline Partition nilpotent_jordan_partition(const Matrix& n) {
  if (n.rows() != n.cols()) throw DimensionMismatch("jordan partition needs a square matrix");
  const int dim = n.rows();
  std::vector<int> ranks{dim};
  Matrix p = n;
  while (true) {
    const int r = rank(p);
    ranks.push_back(r);
    if (r == 0) break;
    if (int(ranks.size()) > dim + 1) throw NotNilpotent("matrix is not nilpotent");
    p = p * n;
  }
  // blocks_ge[s] = number of Jordan blocks of size >= s+1
  std::vector<int> blocks_ge(ranks.size() - 1);
  for (std::size_t k = 1; k < ranks.size(); ++k) blocks_ge[k - 1] = ranks[k - 1] - ranks[k];
  std::vector<int> parts;
  for (int s = int(blocks_ge.size()); s >= 1; --s) {
    const int exactly = blocks_ge[s - 1] - (s < int(blocks_ge.size()) ? blocks_ge[s] : 0);
    for (int i = 0; i < exactly; ++i) parts.push_back(s);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(parts);
}

}  // namespace nilcat
