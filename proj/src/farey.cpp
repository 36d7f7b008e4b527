#include "extcorr/farey.hpp"

#include <string>

namespace extcorr {

RankDegree::RankDegree(Int rank, Int deg) : rank_(rank), deg_(deg) {
  if (rank < 1) {
    throw Error(ErrorKind::InvalidInput,
                "rank must be >= 1, got " + std::to_string(rank));
  }
}

std::ostream& operator<<(std::ostream& os, const RankDegree& x) {
  return os << '(' << x.rank() << ',' << x.deg() << ')';
}

RankDegree operator+(const RankDegree& a, const RankDegree& b) {
  return {checked::add(a.rank(), b.rank()), checked::add(a.deg(), b.deg())};
}

RankDegree operator-(const RankDegree& a, const RankDegree& b) {
  return {checked::sub(a.rank(), b.rank()), checked::sub(a.deg(), b.deg())};
}

Slope::Slope(Int num, Int den) : num_(num), den_(den) {
  if (den <= 0) {
    throw Error(ErrorKind::InvalidInput, "slope denominator must be positive");
  }
}

Slope Slope::reduced() const {
  const Int g = checked::gcd(num_, den_);
  return {num_ / g, den_ / g};
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  return os << s.num() << '/' << s.den();
}

Slope slope(const RankDegree& x) { return {x.deg(), x.rank()}; }

Normalized normalize(Int rank, Int deg) {
  if (rank < 1) {
    throw Error(ErrorKind::InvalidInput, "rank must be >= 1");
  }
  if (checked::gcd(rank, deg) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(rank) + ", " +
                                           std::to_string(deg) + ") != 1");
  }
  const Int reduced = checked::mod_floor(deg, rank);
  return {RankDegree(rank, reduced), checked::floor_div(deg, rank)};
}

bool is_in_xi(const RankDegree& parent, Int x, Int y) {
  const Int r = parent.rank();
  const Int d = parent.deg();
  if (!(0 < x && x < r)) return false;
  if (!(0 <= y && y <= d)) return false;
  return checked::mul(y, r) < checked::mul(d, x);
}

FareySplit farey_split(const RankDegree& parent) {
  const Int r = parent.rank();
  const Int d = parent.deg();
  if (r < 2) {
    throw Error(ErrorKind::InvalidInput, "farey_split needs rank >= 2");
  }
  if (!parent.coprime()) {
    throw Error(ErrorKind::NotCoprime, "farey_split needs gcd(r, d) = 1");
  }
  if (!parent.normalized()) {
    throw Error(ErrorKind::InvalidInput,
                "farey_split needs a normalized parent (0 < d < r)");
  }
  // d*x + r*y = 1, so s = x mod r solves d*s = 1 (mod r).
  const auto bez = checked::extended_euclid(d, r);
  const Int s = checked::mod_floor(bez.x, r);
  const Int e = (checked::mul(d, s) - 1) / r;
  FareySplit out{parent, RankDegree(s, e), RankDegree(r - s, d - e)};
  if (auto bad = violated_invariant(out)) {
    throw Error(ErrorKind::InvalidInput,
                std::string("farey_split post-check failed: ") + *bad);
  }
  return out;
}

std::optional<const char*> violated_invariant(const FareySplit& split) {
  using checked::mul;
  using checked::sub;
  const Int r = split.parent.rank(), d = split.parent.deg();
  const Int s = split.left.rank(), e = split.left.deg();
  const Int t = split.right.rank(), f = split.right.deg();
  if (checked::add(s, t) != r || checked::add(e, f) != d) return "mediant";
  if (sub(mul(d, s), mul(r, e)) != 1) return "ds-re=1";
  if (sub(mul(r, f), mul(t, d)) != 1) return "rf-td=1";
  if (sub(mul(s, f), mul(t, e)) != 1) return "sf-te=1";
  if (!(slope(split.left) < slope(split.parent) &&
        slope(split.parent) < slope(split.right))) {
    return "interlacing";
  }
  if (!split.left.coprime() || !split.right.coprime()) return "gcd";
  if (!is_in_xi(split.parent, s, e)) return "xi";
  return std::nullopt;
}

DecompositionTree::DecompositionTree(const RankDegree& root,
                                     std::size_t max_nodes) {
  if (root.rank() != 1 && !root.normalized()) {
    throw Error(ErrorKind::InvalidInput,
                "decomposition tree root must be normalized or of rank 1");
  }
  const Int total = checked::sub(checked::mul(2, root.rank()), 1);
  if (static_cast<std::size_t>(total) > max_nodes) {
    throw Error(ErrorKind::LimitExceeded,
                "decomposition tree would have " + std::to_string(total) +
                    " nodes (limit " + std::to_string(max_nodes) + ")");
  }
  nodes_.reserve(static_cast<std::size_t>(total));
  nodes_.push_back({root, std::nullopt, 0});

  // Children of a normalized parent are either rank 1 or again normalized,
  // so no re-normalization happens below the root.
  std::vector<std::size_t> pending{0};
  while (!pending.empty()) {
    const std::size_t i = pending.back();
    pending.pop_back();
    if (nodes_[i].value.rank() < 2) continue;
    const FareySplit split = farey_split(nodes_[i].value);
    const std::size_t depth = nodes_[i].depth + 1;
    const std::size_t left = nodes_.size();
    nodes_.push_back({split.left, std::nullopt, depth});
    nodes_.push_back({split.right, std::nullopt, depth});
    nodes_[i].children = std::make_pair(left, left + 1);
    pending.push_back(left + 1);
    pending.push_back(left);
  }
}

std::vector<RankDegree> DecompositionTree::leaves() const {
  std::vector<RankDegree> out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const Node& n = nodes_[stack.back()];
    stack.pop_back();
    if (n.children) {
      stack.push_back(n.children->second);
      stack.push_back(n.children->first);
    } else {
      out.push_back(n.value);
    }
  }
  return out;
}

std::size_t DecompositionTree::height() const {
  std::size_t h = 0;
  for (const auto& n : nodes_) h = std::max(h, n.depth);
  return h;
}

}  // namespace extcorr
