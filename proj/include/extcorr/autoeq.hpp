#pragma once

// Autoequivalences of D^b(N(r,L)) for the fixed-determinant moduli space of
// stable bundles on a curve of genus g. For g >= 3 the group is
// Z^2 x G with Z^2 = <shift> x Pic(N) and G the group of pairs (Lambda, sigma)
// with Lambda^r = L (x) sigma^* L^{-1} (plus, for r = 2, the dual branch
// Lambda^2 = L (x) sigma^* L).

#include <optional>
#include <string>
#include <vector>

#include "extcorr/finite_group.hpp"
#include "extcorr/symmetry.hpp"

namespace extcorr {

inline constexpr std::size_t kDefaultMaxTable = 1'000'000;

/// One pair (Lambda, sigma). Lambda is stored as L^l_power (x) tau with tau
/// an r-torsion class; l_power is 1 exactly on the dual branch.
struct AutoeqElement {
  std::size_t sigma;  // index into the automorphism group
  int eps;            // +1: E -> sigma^*E (x) Lambda; -1: E -> sigma^*E^v (x) Lambda
  int l_power;
  std::vector<Int> torsion;  // (Z/r)^{2g}

  friend bool operator==(const AutoeqElement&, const AutoeqElement&) = default;
};

/// Explicit model of the groups above. Composition (x then y) is
///   sigma = sigma_x sigma_y,  eps = eps_x eps_y,
///   Lambda = sigma_y^* Lambda_x^{eps_y} (x) Lambda_y.
/// With only the identity automorphism this is exact. With nontrivial
/// automorphisms the torsor base points are taken to compose without a
/// cocycle, which suffices for law checks but not for structure.
class ElementModel {
 public:
  ElementModel(const ResolvedSymmetry& sym, Int genus, Int modulus,
               bool with_dual);

  std::size_t order() const noexcept { return order_; }
  std::size_t encode(const AutoeqElement& x) const;
  AutoeqElement decode(std::size_t index) const;
  AutoeqElement multiply(const AutoeqElement& x, const AutoeqElement& y) const;
  /// Lambda^r = L (x) sigma^* L^{-eps}, tested on the L-exponent; exact for
  /// sigma = id.
  bool satisfies_condition(const AutoeqElement& x) const;

  /// Unit torsion classes, automorphism generators and the dual base point.
  std::vector<std::size_t> generators() const;
  CayleyTable cayley_table() const;

 private:
  const ResolvedSymmetry* sym_;
  Int modulus_;
  std::size_t dim_;
  bool with_dual_;
  std::size_t torsion_count_;
  std::size_t order_;
};

struct GroupLawReport {
  bool valid = true;
  bool table_checked = false;
  std::size_t aut_order = 1;
  std::size_t model_order = 1;
};

/// Trivial mode passes immediately. Otherwise resolves the symmetry (see
/// resolve) and, when the element model has at most max_table Cayley
/// cells, verifies identity, inverses and associativity on the full table.
/// Throws BadSymmetry with the first violated axiom.
GroupLawReport group_law_check(const CurveSymmetry& sym,
                               std::size_t max_table = kDefaultMaxTable);

struct GroupDescription {
  Int order = 1;
  std::optional<bool> is_abelian;
  std::optional<std::vector<Int>> invariants;
  std::string method;  // "cayley-table", "closed-form" or "torsor-count"
  std::string note;

  std::string render() const;
};

/// (Z/r)^{2g}.
GroupDescription torsion_group(Int genus, Int modulus);

enum class GroupVariant { Restricted, Full };

GroupDescription g_group(GroupVariant variant, Int genus, Int modulus,
                         Int deg, const CurveSymmetry& sym,
                         std::size_t max_table = kDefaultMaxTable);

enum class Regime {
  GenusAtLeast3RankNot2,
  GenusAtLeast3Rank2,
  Genus2Rank2,
  Genus2RankAbove2,
  Genus1,
  Genus0,
};

const char* to_string(Regime r) noexcept;

struct AutoeqDescription {
  Regime regime;
  bool known;
  Int shift_rank;
  std::optional<GroupDescription> torsion;
  std::string group_name;  // e.g. "𝔊°_[3]", empty if no group
  std::string shape;       // e.g. "ℤ² × 𝔊°_[3]"
  std::string iso_string;  // explicit where the structure is known
  std::vector<std::string> caveats;
};

/// Throws NotCoprime, InvalidInput (rank 1 for g >= 2, symmetry data for a
/// different genus or modulus), NoStableBundles (g = 0, r >= 2) and whatever
/// g_group throws.
AutoeqDescription autoeq_group(Int genus, Int rank, Int deg,
                               const CurveSymmetry& sym,
                               std::size_t max_table = kDefaultMaxTable);

}  // namespace extcorr
