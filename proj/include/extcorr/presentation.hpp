#pragma once

// Finitely presented groups <g_1, ..., g_k | w_1 = ... = w_m = 1> resolved by
// Todd-Coxeter coset enumeration over the trivial subgroup.

#include <cstddef>
#include <string>
#include <vector>

#include "extcorr/checked.hpp"
#include "extcorr/finite_group.hpp"

namespace extcorr {

/// A letter is a generator index and an exponent sign; g^3 is stored as
/// three letters.
struct Letter {
  std::size_t gen;
  bool inverse;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// Parses words such as "a b^-1 (a b)^3" against the generator names.
/// Throws InvalidInput.
Word parse_word(const std::string& text,
                const std::vector<std::string>& generators);

/// Regular permutation representation of a finite group. Element 0 is the
/// identity; right_mul(x, j) is x * g_j.
class EnumeratedGroup {
 public:
  std::size_t order() const noexcept { return words_.size(); }
  std::size_t generator_count() const noexcept { return gens_; }
  std::size_t right_mul(std::size_t x, std::size_t gen) const {
    return act_[x * 2 * gens_ + 2 * gen];
  }
  /// Image of element x under right multiplication by a word.
  std::size_t apply(std::size_t x, const Word& w) const;
  /// Shortlex-least word reaching each element from the identity.
  const Word& word(std::size_t x) const { return words_.at(x); }
  std::size_t element_of(const Word& w) const { return apply(0, w); }

  /// prod(x, y) = x * y.
  CayleyTable cayley_table() const;

  friend EnumeratedGroup enumerate_cosets(const Presentation&, std::size_t);

 private:
  std::size_t gens_ = 0;
  std::vector<std::size_t> act_;  // order x 2*gens, columns g_j, g_j^-1
  std::vector<Word> words_;
};

inline constexpr std::size_t kDefaultCosetLimit = 1'000'000;

/// Throws LimitExceeded when more than max_cosets cosets are defined, which
/// is also what happens for infinite groups.
EnumeratedGroup enumerate_cosets(const Presentation& pres,
                                 std::size_t max_cosets = kDefaultCosetLimit);

}  // namespace extcorr
