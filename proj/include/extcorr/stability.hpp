#pragma once

// Numerical certificate that every nontrivial extension 0 -> E -> G -> F -> 0
// with E, F stable of the given types has a stable middle term. The sweep
// covers three kinds of proper sub-bundle G0 of G:
//   I   G0 = E (the composite G0 -> F is zero),
//   II  the image I of G0 -> F is a proper nonzero sub-bundle of F,
//   III G0 -> F is onto with a proper nonzero kernel E0 of E.
// Only the largest admissible degree per rank is probed; the destabilizing
// condition is monotone in the degree.

#include <optional>
#include <vector>

#include "extcorr/farey.hpp"

namespace extcorr {

/// parent = left + right with both sides coprime and
/// slope(left) < slope(parent) < slope(right). ds - re = 1 is not required.
class AdmissibleSplit {
 public:
  const RankDegree& parent() const noexcept { return parent_; }
  const RankDegree& left() const noexcept { return left_; }
  const RankDegree& right() const noexcept { return right_; }

  /// d*s - r*e; equal to 1 exactly for the Farey split.
  Int defect() const;
  bool is_farey() const { return defect() == 1; }

  friend AdmissibleSplit admissible_split(const RankDegree&, const RankDegree&);
  friend AdmissibleSplit to_admissible(const FareySplit&);

 private:
  AdmissibleSplit(RankDegree p, RankDegree l, RankDegree r)
      : parent_(p), left_(l), right_(r) {}

  RankDegree parent_;
  RankDegree left_;
  RankDegree right_;
};

/// Throws InvalidSplit naming the first violated condition, or InvalidInput
/// if the parent is not normalized.
AdmissibleSplit admissible_split(const RankDegree& parent,
                                 const RankDegree& left);
AdmissibleSplit to_admissible(const FareySplit& split);

enum class SubbundleCase { I, II, III };

const char* to_string(SubbundleCase c) noexcept;

struct SubbundleNumerics {
  SubbundleCase case_tag;
  Int rank;          // s, b, or a
  Int deg;           // e, m, or n
  RankDegree tested;  // numerics whose slope is compared against d/r
  Slope derived_slope;

  friend bool operator==(const SubbundleNumerics&,
                         const SubbundleNumerics&) = default;
};

/// Canonical order: case tag, then rank, then degree.
bool canonical_less(const SubbundleNumerics& a, const SubbundleNumerics& b);

/// Largest m with m*t <= b*f - 1, for b in [1, t-1]. Throws RangeError.
Int max_sub_degree_case_ii(const AdmissibleSplit& split, Int b);

/// Largest n with n*s <= a*e - 1, for a in [1, s-1]. Throws RangeError.
Int max_sub_degree_case_iii(const AdmissibleSplit& split, Int a);

struct RankSweep {
  Int first;  // 1
  Int last;   // t-1 or s-1; last < first means the sweep is empty
  Int count() const noexcept { return last >= first ? last - first + 1 : 0; }
  bool empty() const noexcept { return count() == 0; }
};

struct CasesChecked {
  bool case_i = true;
  RankSweep case_ii;   // ranks b of the image in F
  RankSweep case_iii;  // ranks a of the kernel in E
};

enum class Verdict { Pass, Fail };

struct StabilityCertificate {
  AdmissibleSplit split;
  bool is_farey;
  CasesChecked cases_checked;
  std::vector<SubbundleNumerics> destabilizers;  // canonical order
  Verdict verdict;
};

inline constexpr Int kDefaultMaxSweep = 10'000'000;

/// Throws LimitExceeded when s + t exceeds max_sweep.
StabilityCertificate certify_stability(const AdmissibleSplit& split,
                                       Int max_sweep = kDefaultMaxSweep);

std::optional<SubbundleNumerics> find_destabilizer(
    const AdmissibleSplit& split, Int max_sweep = kDefaultMaxSweep);

}  // namespace extcorr
