#include "harbourne/catalog.hpp"

#include "harbourne/error.hpp"

#include <charconv>
#include <limits>

namespace harbourne {

namespace {

Arrangement make(std::string label, Surface surface, std::vector<ComponentClass> components,
                 SingularitySpectrum spectrum) {
  Arrangement arr;
  arr.label = std::move(label);
  arr.surface = surface;
  arr.ordinary = true;
  arr.components = std::move(components);
  arr.spectrum = std::move(spectrum);
  return arr;
}

std::int64_t require_int64(const BigInt& value, const char* what) {
  if (value > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorKind::BadParameter, std::string(what) + " exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(value);
}

void require_cn_parameter(std::int64_t n) {
  if (n <= 0 || n % 3 != 0) {
    throw Error(ErrorKind::BadParameter,
                "C_n needs n a positive multiple of 3, got " + std::to_string(n));
  }
  // keeps n^2 - 3 a valid int multiplicity
  if (n > 46000) throw Error(ErrorKind::BadParameter, "C_n parameter too large");
}

std::optional<std::int64_t> parse_positive(std::string_view text) {
  if (text.empty() || text.front() == '0') return std::nullopt;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) return std::nullopt;
  return value;
}

}  // namespace

Arrangement dual_hesse() {
  return make("dual-hesse", Surface::ProjectivePlane, {{0, 1, 9}}, {{3, 12}});
}

Arrangement hirzebruch_gauss() {
  return make("hirzebruch-gauss", Surface::AbelianSurface, {{1, 0, 4}}, {{4, 1}});
}

Arrangement holzapfel_eisenstein() {
  return make("holzapfel-eisenstein", Surface::AbelianSurface, {{1, 0, 6}}, {{4, 3}});
}

Arrangement product_fibers(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadParameter, "product_fibers needs m, n >= 1");
  std::int64_t nodes = 0;
  if (__builtin_mul_overflow(m, n, &nodes)) {
    throw Error(ErrorKind::BadParameter, "product_fibers: m n exceeds 64-bit range");
  }
  SingularitySpectrum spectrum;
  spectrum.add(2, nodes);
  return make("product-" + std::to_string(m) + "-" + std::to_string(n), Surface::AbelianSurface,
              {{1, 0, m}, {1, 0, n}}, std::move(spectrum));
}

Arrangement diagonal_config() {
  return make("diagonal", Surface::AbelianSurface, {{1, 0, 3}}, {{3, 1}});
}

Arrangement klein() {
  return make("klein", Surface::ProjectivePlane, {{0, 1, 21}}, {{3, 28}, {4, 21}});
}

Arrangement fermat18() {
  return make("fermat18", Surface::ProjectivePlane, {{0, 1, 18}}, {{3, 36}, {6, 3}});
}

CnFamily cn_family(std::int64_t n) {
  require_cn_parameter(n);
  const BigInt q = BigInt(n) * n - 3;
  const std::int64_t curves = require_int64(4 * q / 3, "curve count");
  const std::int64_t fours = require_int64(q * (BigInt(n) * n - 9) / 3, "4-point count");
  const int base_mult = static_cast<int>(q);

  CnFamily out;
  out.plane.label = "cn-" + std::to_string(n);
  out.plane.surface = Surface::ProjectivePlane;
  out.plane.ordinary = false;
  out.plane.components = {{1, 9, curves}};
  out.plane.spectrum.add(4, fours);
  out.plane.spectrum.add(base_mult, 12);
  const CnHValue h = cn_h_value(n);
  out.plane.c_square_override = h.c_bar_square + BigInt(16) * fours + 12 * q * q;

  out.on_z.label = "cn-" + std::to_string(n) + "-on-z";
  out.on_z.surface = Surface::ProjectivePlane;
  out.on_z.ordinary = true;
  out.on_z.components = {{1, 0, curves}};
  out.on_z.spectrum.add(3, require_int64(4 * q, "3-point count"));
  out.on_z.spectrum.add(4, fours);
  return out;
}

CnHValue cn_h_value(std::int64_t n) {
  require_cn_parameter(n);
  const BigInt n2 = BigInt(n) * n;
  CnHValue out;
  // -(n^2 - 9) * (4/3)(n^2 - 3) + 8(n^2 - 3) = -(4/3)(n^2 - 3)(n^2 - 15)
  out.c_bar_square = -(n2 - 9) * 4 * (n2 - 3) / 3 + 8 * (n2 - 3);
  out.s = 12 + (n2 - 3) * (n2 - 9) / 3;
  out.h = Rat(out.c_bar_square, out.s);
  return out;
}

Rat cn_gap_closed_form(std::int64_t n) {
  const BigInt n2 = BigInt(n) * n;
  return Rat(24 * n2 + 72, (n2 - 3) * (n2 - 9) + 36);
}

CatalogEntry catalog_entry(std::string_view name) {
  const auto claim = [](std::string q, Rat v, std::string anchor) {
    return Claim{std::move(q), std::move(v), std::move(anchor)};
  };
  if (name == "dual-hesse") {
    return {"dual-hesse", dual_hesse(),
            {claim("pair_count", 36, "9 lines with 12 triple points: 9 choose 2 = 36 crossings"),
             claim("h_sing", Rat(-9, 4), "H at the 12 triple points"),
             claim("b2", Rat(-9, 4), "B2 bound is attained")}};
  }
  if (name == "hirzebruch-gauss") {
    return {"hirzebruch-gauss", hirzebruch_gauss(),
            {claim("h_index", -4, "elliptic H-index equals -4"),
             claim("is_ball_quotient", 1, "ball-quotient criterion 4 f0 = f1"),
             claim("defect_n3", 0, "Miyaoka-Yau defect f0 (n - 3)^2 vanishes at n = 3")}};
  }
  if (name == "holzapfel-eisenstein") {
    return {"holzapfel-eisenstein", holzapfel_eisenstein(),
            {claim("h_index", -4, "elliptic H-index equals -4"),
             claim("is_ball_quotient", 1, "ball-quotient criterion 4 f0 = f1"),
             claim("defect_n3", 0, "Miyaoka-Yau defect f0 (n - 3)^2 vanishes at n = 3")}};
  }
  if (name == "diagonal") {
    return {"diagonal", diagonal_config(),
            {claim("h_index", -3, "blow-up at the origin gives C_bar^2 = -3")}};
  }
  if (name == "klein") {
    return {"klein", klein(),
            {claim("pair_count", 210, "21 lines: 21 choose 2 = 210 crossings"),
             claim("h_sing", -3, "H at all singular points"),
             claim("b2", -3, "B2 bound is an equality")}};
  }
  if (name == "fermat18") {
    return {"fermat18", fermat18(),
            {claim("pair_count", 153, "18 lines: 18 choose 2 = 153 crossings"),
             claim("h_sing", Rat(-36, 13), "H at all singular points"),
             claim("b2", Rat(-36, 13), "B2 bound is an equality")}};
  }
  if (name.starts_with("product-")) {
    const auto rest = name.substr(8);
    const auto dash = rest.find('-');
    const auto m = dash == std::string_view::npos ? std::nullopt : parse_positive(rest.substr(0, dash));
    const auto n = dash == std::string_view::npos ? std::nullopt : parse_positive(rest.substr(dash + 1));
    if (!m || !n) {
      throw Error(ErrorKind::BadParameter,
                  "product entries are named product-M-N with M, N >= 1, got '" + std::string(name) + "'");
    }
    Arrangement arr = product_fibers(*m, *n);
    return {arr.label, arr, {claim("h_index", -2, "minimum over the m n nodes equals -2")}};
  }
  if (name.starts_with("cn-")) {
    const auto n = parse_positive(name.substr(3));
    if (!n) {
      throw Error(ErrorKind::BadParameter,
                  "cn entries are named cn-N with N a positive multiple of 3, got '" +
                      std::string(name) + "'");
    }
    CnFamily family = cn_family(*n);
    return {family.plane.label, family.plane,
            {claim("cn_gap", cn_gap_closed_form(*n), "H(C_n) + 4 closed form; tends to 0")}};
  }
  throw Error(ErrorKind::UnknownCatalogName, "unknown catalog entry '" + std::string(name) + "'");
}

std::vector<CatalogListing> catalog_listing() {
  return {
      {"dual-hesse", "P2: 9 lines, t3 = 12"},
      {"hirzebruch-gauss", "abelian: 4 elliptic curves, t4 = 1"},
      {"holzapfel-eisenstein", "abelian: 6 elliptic curves, t4 = 3"},
      {"diagonal", "abelian: diagonal and two axes of E x E, t3 = 1"},
      {"klein", "P2: 21 lines, t3 = 28, t4 = 21"},
      {"fermat18", "P2: 18 lines, t3 = 36, t6 = 3"},
      {"product-M-N", "abelian: M + N fibers of E x E', t2 = M N"},
      {"cn-N", "P2: cubic configuration C_N, N a positive multiple of 3 (non-ordinary)"},
  };
}

}  // namespace harbourne
