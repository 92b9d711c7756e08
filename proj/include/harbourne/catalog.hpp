#pragma once

#include "harbourne/arrangement.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace harbourne {

/// A published value attached to a catalog entry, checked by `check`.
struct Claim {
  std::string quantity;  // see report.hpp: evaluate_quantity()
  Rat value;
  std::string anchor;    // what the claim is about, for check output
};

struct CatalogEntry {
  std::string name;
  Arrangement arrangement;
  std::vector<Claim> expected;
};

/// 9 lines, 12 triple points.
Arrangement dual_hesse();
/// 4 elliptic curves on (C/Z[i])^2 through one common 4-point.
Arrangement hirzebruch_gauss();
/// 6 elliptic curves on (C/Z[j])^2 with three 4-points.
Arrangement holzapfel_eisenstein();
/// m fibers of E x E' -> E and n fibers of E x E' -> E', meeting in m n nodes.
Arrangement product_fibers(std::int64_t m, std::int64_t n);
/// Diagonal plus both coordinate axes of E x E: one 3-point at the origin.
Arrangement diagonal_config();
/// Klein arrangement: 21 lines, t3 = 28, t4 = 21.
Arrangement klein();
/// Fermat arrangement of 18 lines: t3 = 36, t6 = 3.
Arrangement fermat18();

struct CnFamily {
  /// C_n in the plane: (4/3)(n^2 - 3) cubics with (1/3)(n^2 - 3)(n^2 - 9)
  /// 4-points and twelve (n^2 - 3)-fold points at the dual Hesse points.
  /// Not ordinary: the twelve base points carry infinitely-near triple
  /// points, so C^2 is supplied as an override consistent with cn_h_value.
  Arrangement plane;
  /// H_n on the blow-up Z of the twelve dual Hesse points: the same number
  /// of elliptic fibers, 4(n^2 - 3) 3-points and the same 4-points.
  Arrangement on_z;
};

/// Requires n a positive multiple of 3 (BadParameter otherwise).
CnFamily cn_family(std::int64_t n);

struct CnHValue {
  Rat h;
  BigInt c_bar_square;
  BigInt s;
};

/// H(C_n, Sing C_n) from the strict-transform bookkeeping on Z:
/// C_bar^2 = -(n^2 - 9)(4/3)(n^2 - 3) + 8(n^2 - 3),
/// s = 12 + (1/3)(n^2 - 3)(n^2 - 9).
CnHValue cn_h_value(std::int64_t n);

/// Closed form of H(C_n) + 4 = (24n^2 + 72) / ((n^2 - 3)(n^2 - 9) + 36).
Rat cn_gap_closed_form(std::int64_t n);

/// Resolves a stable catalog identifier: dual-hesse, hirzebruch-gauss,
/// holzapfel-eisenstein, product-M-N, diagonal, klein, fermat18, cn-N.
/// Throws UnknownCatalogName (or BadParameter for a bad cn-N / product-M-N).
CatalogEntry catalog_entry(std::string_view name);

struct CatalogListing {
  std::string name;
  std::string description;
};

/// Fixed entries followed by the two parametric families.
std::vector<CatalogListing> catalog_listing();

}  // namespace harbourne
