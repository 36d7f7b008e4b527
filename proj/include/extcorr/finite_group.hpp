#pragma once

// Small finite groups given by a full Cayley table.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extcorr/checked.hpp"

namespace extcorr {

class CayleyTable {
 public:
  CayleyTable(std::size_t n, std::vector<std::uint32_t> products);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t a, std::size_t b) const {
    return prod_[a * n_ + b];
  }

  /// Two-sided identity, if any.
  std::optional<std::size_t> identity() const;
  /// Every row and column is a permutation.
  bool is_latin_square() const;
  bool is_abelian() const;
  /// Light's test: (xy)g = x(yg) for all x, y and every g of a generating
  /// set implies associativity.
  bool associative_on(std::span<const std::size_t> generators) const;
  /// Brute force over all triples.
  bool associative() const;
  std::size_t generated_size(std::span<const std::size_t> generators) const;
  /// Needs a group (identity plus latin square).
  std::vector<std::uint64_t> element_orders() const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> prod_;
};

/// Invariant factors n1 | n2 | ... of a finite abelian group, recovered from
/// the multiset of element orders. Factors equal to 1 are dropped, so the
/// trivial group yields an empty list.
std::vector<Int> abelian_invariants(std::span<const std::uint64_t> orders);

/// Invariant factors of the direct sum of cyclic groups of the given orders.
std::vector<Int> invariant_factors(std::span<const Int> cyclic_orders);

/// "(ℤ/3)^6", "ℤ/2 × ℤ/4", "1" for the trivial group.
std::string render_abelian(std::span<const Int> invariants);

}  // namespace extcorr
