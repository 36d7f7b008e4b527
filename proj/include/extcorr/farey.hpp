#pragma once

// Exact (rank, degree) arithmetic, the unimodular split of a coprime pair and
// the recursive decomposition tree obtained by iterating it.

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "extcorr/checked.hpp"

namespace extcorr {

/// Numerical type of a bundle. rank >= 1 is enforced on construction.
class RankDegree {
 public:
  RankDegree(Int rank, Int deg);

  Int rank() const noexcept { return rank_; }
  Int deg() const noexcept { return deg_; }

  bool coprime() const { return checked::gcd(rank_, deg_) == 1; }
  /// 0 < deg < rank with gcd 1.
  bool normalized() const { return 0 < deg_ && deg_ < rank_ && coprime(); }

  friend bool operator==(const RankDegree&, const RankDegree&) = default;

 private:
  Int rank_;
  Int deg_;
};

std::ostream& operator<<(std::ostream& os, const RankDegree& x);

RankDegree operator+(const RankDegree& a, const RankDegree& b);
RankDegree operator-(const RankDegree& a, const RankDegree& b);

/// Exact rational num/den with den > 0. Not reduced; compared by
/// cross-multiplication.
class Slope {
 public:
  Slope(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  /// Lowest terms, positive denominator.
  Slope reduced() const;

  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);
  friend bool operator==(const Slope& a, const Slope& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

Slope slope(const RankDegree& x);

struct Normalized {
  RankDegree pair;
  Int twist;  // deg = pair.deg() + twist * rank
};

/// Reduces the degree into [0, r) by twisting with a line bundle of degree
/// -twist. Throws NotCoprime.
Normalized normalize(Int rank, Int deg);

/// Membership in {0 < x < r, 0 <= y <= d, y/x < d/r}.
bool is_in_xi(const RankDegree& parent, Int x, Int y);

/// (r,d) = (s,e) + (t,f) with d*s - r*e = 1.
struct FareySplit {
  RankDegree parent;
  RankDegree left;
  RankDegree right;

  friend bool operator==(const FareySplit&, const FareySplit&) = default;
};

/// Unique split point in Xi, found by extended Euclid. Throws InvalidInput
/// for rank < 2, non-normalized or non-coprime parents.
FareySplit farey_split(const RankDegree& parent);

/// Re-checks every unimodularity, mediant, interlacing, gcd and Xi identity.
/// Returns the name of the first one that fails, or nullopt.
std::optional<const char*> violated_invariant(const FareySplit& split);

/// Full binary tree of iterated Farey splits, stored as a flat arena with the
/// root at index 0 and children appended in preorder.
class DecompositionTree {
 public:
  struct Node {
    RankDegree value;
    std::optional<std::pair<std::size_t, std::size_t>> children;
    std::size_t depth;
  };

  static constexpr std::size_t kDefaultMaxNodes = 10'000'000;

  /// Throws InvalidInput unless root is normalized or has rank 1, and
  /// LimitExceeded when 2r - 1 > max_nodes.
  explicit DecompositionTree(const RankDegree& root,
                             std::size_t max_nodes = kDefaultMaxNodes);

  const Node& root() const { return nodes_.front(); }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Leaves in left-to-right (preorder) order.
  std::vector<RankDegree> leaves() const;
  std::size_t height() const;

 private:
  std::vector<Node> nodes_;
};

inline DecompositionTree decomposition_tree(const RankDegree& root) {
  return DecompositionTree(root);
}

}  // namespace extcorr
