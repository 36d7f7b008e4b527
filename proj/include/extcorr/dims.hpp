#pragma once

// Riemann-Roch bookkeeping for the extension correspondence
//
//   M(s,e) x M(t,f)  <--p--  Z = P(Ext^1(F, E))  --q-->  M(r,d)
//
// and its fixed-determinant analogue N(s,L1) x N(t,L2) <- Z^det -> N(r,L).

#include "extcorr/farey.hpp"
#include "extcorr/stability.hpp"

namespace extcorr {

struct CurveData {
  Int genus;

  explicit CurveData(Int g);
  /// Genus >= 2: the stable moduli spaces are the intended objects.
  bool stable_regime() const noexcept { return genus >= 2; }
};

/// chi(F, E) = dim Hom(F, E) - dim Ext^1(F, E) = e*t - f*s + s*t*(1 - g).
Int euler_char(const CurveData& curve, const AdmissibleSplit& split);

/// dim Ext^1(F, E) = (d-e)*s - e*(r-s) + s*(r-s)*(g-1), valid since
/// Hom(F, E) = 0 when slope(F) > slope(E). Throws NegativeDimension if the
/// formula goes negative (only possible for g = 0).
Int ext1_dim(const CurveData& curve, const AdmissibleSplit& split);

/// r^2 (g-1) + 1 for M(r,d); (r^2 - 1)(g-1) for N(r,L). Throws NotCoprime.
Int moduli_dim(const CurveData& curve, const RankDegree& x, bool fixed_det);

enum class DimRegime { Stable, Formal };

const char* to_string(DimRegime r) noexcept;

/// Dimensions of the correspondence diagram for the Farey split. In the
/// formal regime (g < 2) the fields are the raw signed Riemann-Roch integers
/// and may be zero or negative.
struct CorrespondenceProfile {
  Int genus;
  FareySplit split;
  bool fixed_det;
  DimRegime regime;
  Int euler_char;
  Int ext1_dim;
  Int fiber_dim;   // ext1_dim - 1
  Int dim_left;
  Int dim_right;
  Int dim_z;       // dim_left + dim_right + fiber_dim
  Int dim_target;
  Int dim_gap;     // dim_target - dim_z
};

CorrespondenceProfile correspondence_profile(const CurveData& curve,
                                             const RankDegree& parent,
                                             bool fixed_det);

}  // namespace extcorr
