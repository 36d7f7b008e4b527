#include "extcorr/stability.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>

namespace extcorr {

namespace {

[[noreturn]] void invalid_split(const std::string& reason) {
  throw Error(ErrorKind::InvalidSplit, reason);
}

std::string show(const RankDegree& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

Int AdmissibleSplit::defect() const {
  return checked::sub(checked::mul(parent_.deg(), left_.rank()),
                      checked::mul(parent_.rank(), left_.deg()));
}

AdmissibleSplit admissible_split(const RankDegree& parent,
                                 const RankDegree& left) {
  if (!parent.normalized()) {
    throw Error(ErrorKind::InvalidInput,
                "parent " + show(parent) + " must be normalized and coprime");
  }
  if (left.rank() >= parent.rank()) {
    invalid_split("left rank must be < " + std::to_string(parent.rank()));
  }
  const RankDegree right = parent - left;
  if (!left.coprime()) invalid_split("gcd(s,e) != 1 for left " + show(left));
  if (!right.coprime()) {
    invalid_split("gcd(t,f) != 1 for right " + show(right));
  }
  if (!(slope(left) < slope(parent))) {
    invalid_split("e/s < d/r violated for left " + show(left));
  }
  if (!(slope(parent) < slope(right))) {
    invalid_split("d/r < f/t violated for right " + show(right));
  }
  return AdmissibleSplit(parent, left, right);
}

AdmissibleSplit to_admissible(const FareySplit& split) {
  return admissible_split(split.parent, split.left);
}

const char* to_string(SubbundleCase c) noexcept {
  switch (c) {
    case SubbundleCase::I: return "I";
    case SubbundleCase::II: return "II";
    case SubbundleCase::III: return "III";
  }
  return "?";
}

bool canonical_less(const SubbundleNumerics& a, const SubbundleNumerics& b) {
  return std::tuple(a.case_tag, a.rank, a.deg) <
         std::tuple(b.case_tag, b.rank, b.deg);
}

Int max_sub_degree_case_ii(const AdmissibleSplit& split, Int b) {
  const Int t = split.right().rank();
  if (b < 1 || b > t - 1) {
    throw Error(ErrorKind::RangeError, "case II rank b=" + std::to_string(b) +
                                           " outside [1, " +
                                           std::to_string(t - 1) + "]");
  }
  const Int bound = checked::sub(checked::mul(b, split.right().deg()), 1);
  return checked::floor_div(bound, t);
}

Int max_sub_degree_case_iii(const AdmissibleSplit& split, Int a) {
  const Int s = split.left().rank();
  if (a < 1 || a > s - 1) {
    throw Error(ErrorKind::RangeError, "case III rank a=" + std::to_string(a) +
                                           " outside [1, " +
                                           std::to_string(s - 1) + "]");
  }
  const Int bound = checked::sub(checked::mul(a, split.left().deg()), 1);
  return checked::floor_div(bound, s);
}

StabilityCertificate certify_stability(const AdmissibleSplit& split,
                                       Int max_sweep) {
  const RankDegree& parent = split.parent();
  const Int s = split.left().rank();
  const Int t = split.right().rank();
  if (checked::add(s, t) > max_sweep) {
    throw Error(ErrorKind::LimitExceeded,
                "certificate sweep of " + std::to_string(s + t) +
                    " ranks exceeds limit " + std::to_string(max_sweep));
  }
  const Slope target = slope(parent);

  StabilityCertificate cert{split,
                            split.is_farey(),
                            {true, {1, t - 1}, {1, s - 1}},
                            {},
                            Verdict::Pass};

  auto record_if_destabilizing = [&](SubbundleCase tag, Int rank, Int deg,
                                     RankDegree tested) {
    const Slope mu = slope(tested);
    if (mu >= target) {
      cert.destabilizers.push_back({tag, rank, deg, tested, mu});
    }
  };

  // Case I: G0 = E. Admissibility already gives e/s < d/r; re-tested here so
  // the certificate does not depend on the constructor.
  record_if_destabilizing(SubbundleCase::I, s, split.left().deg(),
                          split.left());

  for (Int b = 1; b <= t - 1; ++b) {
    const Int m = max_sub_degree_case_ii(split, b);
    record_if_destabilizing(SubbundleCase::II, b, m, RankDegree(b, m));
  }

  // Case III: 0 -> E0 -> G0 -> F -> 0 with E0 of type (a, n).
  for (Int a = 1; a <= s - 1; ++a) {
    const Int n = max_sub_degree_case_iii(split, a);
    record_if_destabilizing(SubbundleCase::III, a, n,
                            RankDegree(a, n) + split.right());
  }

  std::sort(cert.destabilizers.begin(), cert.destabilizers.end(),
            canonical_less);
  cert.verdict = cert.destabilizers.empty() ? Verdict::Pass : Verdict::Fail;
  return cert;
}

std::optional<SubbundleNumerics> find_destabilizer(
    const AdmissibleSplit& split, Int max_sweep) {
  auto cert = certify_stability(split, max_sweep);
  if (cert.destabilizers.empty()) return std::nullopt;
  return cert.destabilizers.front();
}

}  // namespace extcorr
