#pragma once

// Curve automorphism data: how each automorphism sigma pulls back the
// r-torsion of the Jacobian, (Z/r)^{2g}, plus the abstract group they form.

#include <iosfwd>
#include <string>
#include <vector>

#include "extcorr/checked.hpp"
#include "extcorr/finite_group.hpp"
#include "extcorr/presentation.hpp"

namespace extcorr {

/// Square matrix over Z/modulus, entries kept in [0, modulus).
class ModMatrix {
 public:
  ModMatrix(std::size_t n, Int modulus);
  ModMatrix(const std::vector<std::vector<Int>>& rows, Int modulus);

  static ModMatrix identity(std::size_t n, Int modulus);

  std::size_t dim() const noexcept { return n_; }
  Int modulus() const noexcept { return modulus_; }
  Int at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  ModMatrix operator*(const ModMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  ModMatrix pow(Int k) const;
  /// Invertible over Z/modulus, i.e. invertible modulo every prime factor.
  bool invertible() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t n_;
  Int modulus_;
  std::vector<Int> a_;
};

enum class SymmetryMode { Trivial, Genus2Hyperelliptic, Supplied };

const char* to_string(SymmetryMode m) noexcept;

struct SymmetryGenerator {
  std::string name;
  std::vector<std::vector<Int>> torsion_action;  // 2g x 2g, read mod r
  /// Class of L (x) sigma^* L^{-1}. Always an r-th power on a Jacobian over
  /// an algebraically closed field, so the torsors are nonempty.
  std::string det_translate = "divisible";
};

class CurveSymmetry {
 public:
  static CurveSymmetry trivial(Int genus, Int modulus);
  /// Hyperelliptic involution of a genus-2 curve, acting as -1 on Pic^0.
  static CurveSymmetry genus2_hyperelliptic(Int modulus);
  static CurveSymmetry supplied(Int genus, Int modulus,
                                std::vector<SymmetryGenerator> generators,
                                std::vector<std::string> relations);

  Int genus() const noexcept { return genus_; }
  Int modulus() const noexcept { return modulus_; }
  SymmetryMode mode() const noexcept { return mode_; }
  const std::vector<SymmetryGenerator>& generators() const noexcept {
    return generators_;
  }
  /// Relator words, each meaning "word = 1".
  const std::vector<std::string>& relations() const noexcept {
    return relations_;
  }

 private:
  CurveSymmetry(Int genus, Int modulus, SymmetryMode mode)
      : genus_(genus), modulus_(modulus), mode_(mode) {}

  Int genus_;
  Int modulus_;
  SymmetryMode mode_;
  std::vector<SymmetryGenerator> generators_;
  std::vector<std::string> relations_;
};

/// Reads the plain-text symmetry format:
///
///   # comment
///   iota: -1,0,0,0; 0,-1,0,0; 0,0,-1,0; 0,0,0,-1
///   rel: iota^2 = 1
///
/// Throws InvalidInput on syntax errors.
CurveSymmetry parse_symmetry(std::istream& in, Int genus, Int modulus);

/// The automorphism group as abstract elements together with the pullback
/// matrix of each element. Composition is "first then second": for words,
/// action(w1 w2) = action(w2) * action(w1).
struct ResolvedSymmetry {
  EnumeratedGroup group;
  std::vector<ModMatrix> action;
  CayleyTable table;
};

/// Validates matrix shapes, invertibility, relations and the homomorphism
/// property. Throws BadSymmetry naming the first violated axiom, or
/// LimitExceeded if the presentation does not close up.
ResolvedSymmetry resolve(const CurveSymmetry& sym,
                         std::size_t max_cosets = kDefaultCosetLimit);

}  // namespace extcorr
