#pragma once

#include "harbourne/arrangement.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace harbourne {

/// Chern data of the resolved (Z/nZ)^d cover X_n of an abelian surface
/// branched with index n over the d components of an ordinary arrangement.
/// All values are divided by n^(d-2).
struct CoverInvariants {
  std::int64_t n = 2;
  Rat euler_norm;   // e(X_n) / n^(d-2)
  Rat k2_norm;      // K^2 / n^(d-2)
  Rat defect_norm;  // (3 c2 - K^2) / n^(d-2) = 3 euler_norm - k2_norm
};

/// Coefficients of n^(k-2) in e(F_p) and (F_p)^2 for the curve F_p lying over
/// the exceptional divisor of a k-point (k >= 3): (2n + k(1 - n), -1).
struct FiberFactors {
  BigInt euler_factor;
  BigInt self_int_factor;
};

FiberFactors exceptional_fiber(std::int64_t k, std::int64_t n);

Rat euler_cover(const Arrangement& arr, std::int64_t n);
Rat canonical_square_cover(const Arrangement& arr, std::int64_t n);
/// Normalized Miyaoka-Yau defect; non-negative whenever the cover exists.
Rat my_defect(const Arrangement& arr, std::int64_t n);

CoverInvariants cover_invariants(const Arrangement& arr, std::int64_t n);

/// Multiplies a normalized invariant back by n^(d-2). Requires d >= 2.
Rat unnormalized(const Rat& normalized, std::int64_t n, const BigInt& d);

/// Right-hand side of Miyaoka's bound 3c2 - K^2 >= (9/2) m - sum D_j^2 for m
/// disjoint (-2)-curves and disjoint elliptic curves D_j (D_j^2 < 0). Assumes
/// non-negative Kodaira dimension; that hypothesis is not checked here.
Rat miyaoka_refined_rhs(const BigInt& m_minus2_curves, std::span<const std::int64_t> elliptic_self_ints);

struct RefinedDefect {
  Rat defect;
  Rat refined_rhs;
  bool holds = false;
};

/// Compares the normalized defect at n = 2 or 3 with the contribution of the
/// special curves on X_n. For n = 2: 2^(d-3) t3 disjoint (-2)-curves and
/// 2^(d-4) t4 elliptic (-4)-curves give (9/4) t3 + t4. For n = 3:
/// 3^(d-3) t3 elliptic (-3)-curves give t3.
RefinedDefect refined_defect_check(const Arrangement& arr, std::int64_t n);

struct BallQuotientReport {
  BigInt log_ck_square;  // (K_X + C)^2 = f1 - f0 on the blow-up at Sing(C)
  BigInt log_euler;      // e(X \ C) = f0
  bool is_ball_quotient = false;
  /// Values of n in 2..10 where my_defect != f0 (n - 3)^2; empty when the
  /// criterion does not hold or the identity checks out.
  std::vector<std::int64_t> defect_violations;
};

/// Logarithmic Chern numbers of an elliptic arrangement on an abelian
/// surface and the ball-quotient test (K + C)^2 = 3 e(X \ C), i.e. 4 f0 = f1
/// with only 4-points.
BallQuotientReport ball_quotient_check(const Arrangement& arr);

/// True when the spectrum has only 4-points and 4 f0 = f1.
bool has_ball_quotient_spectrum(const SingularitySpectrum& spectrum);

}  // namespace harbourne
