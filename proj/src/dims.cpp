#include "extcorr/dims.hpp"

#include <string>

namespace extcorr {

using checked::add;
using checked::mul;
using checked::sub;

CurveData::CurveData(Int g) : genus(g) {
  if (g < 0) {
    throw Error(ErrorKind::InvalidInput, "genus must be >= 0");
  }
}

const char* to_string(DimRegime r) noexcept {
  return r == DimRegime::Stable ? "stable" : "formal";
}

Int euler_char(const CurveData& curve, const AdmissibleSplit& split) {
  const Int s = split.left().rank(), e = split.left().deg();
  const Int t = split.right().rank(), f = split.right().deg();
  return add(sub(mul(e, t), mul(f, s)), mul(mul(s, t), sub(1, curve.genus)));
}

namespace {

Int ext1_formula(const CurveData& curve, const AdmissibleSplit& split) {
  const Int r = split.parent().rank(), d = split.parent().deg();
  const Int s = split.left().rank(), e = split.left().deg();
  return add(sub(mul(sub(d, e), s), mul(e, sub(r, s))),
             mul(mul(s, sub(r, s)), sub(curve.genus, 1)));
}

}  // namespace

Int ext1_dim(const CurveData& curve, const AdmissibleSplit& split) {
  const Int dim = ext1_formula(curve, split);
  if (dim < 0) {
    throw Error(ErrorKind::NegativeDimension,
                "Riemann-Roch gives dim Ext^1 = " + std::to_string(dim) +
                    " at genus " + std::to_string(curve.genus));
  }
  return dim;
}

Int moduli_dim(const CurveData& curve, const RankDegree& x, bool fixed_det) {
  if (!x.coprime()) {
    throw Error(ErrorKind::NotCoprime, "moduli_dim needs gcd(rank, deg) = 1");
  }
  const Int r2 = mul(x.rank(), x.rank());
  const Int gm1 = sub(curve.genus, 1);
  return fixed_det ? mul(sub(r2, 1), gm1) : add(mul(r2, gm1), 1);
}

CorrespondenceProfile correspondence_profile(const CurveData& curve,
                                             const RankDegree& parent,
                                             bool fixed_det) {
  const FareySplit split = farey_split(parent);
  const AdmissibleSplit adm = to_admissible(split);

  CorrespondenceProfile p{curve.genus, split, fixed_det,
                          curve.stable_regime() ? DimRegime::Stable
                                                : DimRegime::Formal,
                          0, 0, 0, 0, 0, 0, 0, 0};
  p.euler_char = euler_char(curve, adm);
  // Hom(F, E) = 0, and the determinant constraint does not change Ext^1 of
  // two fixed bundles.
  p.ext1_dim = ext1_formula(curve, adm);
  p.fiber_dim = sub(p.ext1_dim, 1);
  p.dim_left = moduli_dim(curve, split.left, fixed_det);
  p.dim_right = moduli_dim(curve, split.right, fixed_det);
  p.dim_z = add(add(p.dim_left, p.dim_right), p.fiber_dim);
  p.dim_target = moduli_dim(curve, parent, fixed_det);
  p.dim_gap = sub(p.dim_target, p.dim_z);
  return p;
}

}  // namespace extcorr
