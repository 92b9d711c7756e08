#pragma once

#include "harbourne/arrangement.hpp"

#include <cstdint>

namespace harbourne {

// Every predicate has the form lhs >= rhs. Both sides are always computed,
// even when the hypotheses behind a bound fail; `applicable` records the
// hypothesis check.

/// -f1/f0 >= (t2 + t3/4 - 7g + 7)/f0 - 4.
BoundResult elliptic_bound(const SingularitySpectrum& spectrum, const BigInt& genus);

/// Weaker end of the elliptic chain for g = 1: (t2 + t3/4)/f0 - 4 >= -4.
BoundResult elliptic_chain_floor(const SingularitySpectrum& spectrum);

/// (2g - 2 - f1)/f0 >= (2 t2 + 9/8 t3 + 1/2 t4 + 8 - 8g)/f0 - 9/2, on an
/// ordinary abelian arrangement.
BoundResult genus_bound(const Arrangement& arr);

/// 10g - 10 + t2 + 3/4 t3 >= sum_{k>=5} (2k - 9) t_k.
BoundResult abelian_spectrum_ineq(const SingularitySpectrum& spectrum, const BigInt& genus);

struct LineBounds {
  Rat h_sing;
  BoundResult b1;  // h_sing >= -4 + (2d + t2 + t3/4)/f0
  BoundResult b2;  // h_sing >= (3/2 d + 2 t2 + 9/8 t3 + 1/2 t4)/f0 - 9/2
  bool b2_ge_b1 = false;
};

LineBounds line_bounds(std::int64_t d, const SingularitySpectrum& spectrum);

struct HirzebruchLineChecks {
  BoundResult zzbauer;  // t2 + 3/4 t3 >= d + sum_{k>=5} (k - 4) t_k
  BoundResult hirz86;   // t2 + 3/4 t3 >= d + sum_{k>=5} (2k - 9) t_k
};

HirzebruchLineChecks hirzebruch_line_checks(std::int64_t d, const SingularitySpectrum& spectrum);

/// H at Sing(C), the H-index with its witness, and every bound that applies
/// to the arrangement's kind, in a fixed order: elliptic_bound,
/// elliptic_chain (g = 1), genus_bound, abelian_spectrum (abelian input);
/// b1, b2, zzbauer, hirz86 (line arrangements).
HReport h_report(const Arrangement& arr);

}  // namespace harbourne
