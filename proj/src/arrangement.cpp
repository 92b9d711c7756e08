#include "harbourne/arrangement.hpp"

#include "harbourne/error.hpp"

#include <algorithm>
#include <cmath>

namespace harbourne {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::BadInput, std::string(what) + " overflows 64-bit range");
  }
  return out;
}

void require_ordinary(const Arrangement& arr, const char* op) {
  if (!arr.ordinary) {
    throw Error(ErrorKind::NotOrdinary,
                std::string(op) + " requires an arrangement with ordinary singularities");
  }
}

// Exact integer square root of a non-negative value, or -1.
std::int64_t perfect_square_root(std::int64_t value) {
  if (value < 0) return -1;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(value)));
  while (root * root > value) --root;
  while ((root + 1) * (root + 1) <= value) ++root;
  return root * root == value ? root : -1;
}

}  // namespace

SingularitySpectrum::SingularitySpectrum(
    std::initializer_list<std::pair<const int, std::int64_t>> counts) {
  for (const auto& [k, t] : counts) add(k, t);
}

void SingularitySpectrum::add(int k, std::int64_t count) {
  if (k < 2) {
    throw Error(ErrorKind::BadMultiplicity,
                "multiplicity " + std::to_string(k) + " is not a singular point (need k >= 2)");
  }
  if (count < 0) {
    throw Error(ErrorKind::BadInput, "negative point count for multiplicity " + std::to_string(k));
  }
  if (count == 0) return;
  auto& slot = counts_[k];
  if (__builtin_add_overflow(slot, count, &slot)) {
    throw Error(ErrorKind::BadInput, "point count overflows 64-bit range");
  }
}

std::int64_t SingularitySpectrum::count(int k) const {
  const auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

SingularitySpectrum SingularitySpectrum::scaled(std::int64_t factor) const {
  SingularitySpectrum out;
  for (const auto& [k, t] : counts_) out.add(k, checked_mul(t, factor, "point count"));
  return out;
}

Moments f_moments(const SingularitySpectrum& spectrum) {
  Moments m{0, 0, 0};
  for (const auto& [k, t] : spectrum.counts()) {
    const BigInt tk = t;
    m.f0 += tk;
    m.f1 += tk * k;
    m.f2 += tk * k * k;
  }
  return m;
}

BigInt Arrangement::num_components() const {
  BigInt d = 0;
  for (const auto& c : components) d += c.count;
  return d;
}

BigInt Arrangement::genus_minus_one() const {
  BigInt g = 0;
  for (const auto& c : components) g += BigInt(c.count) * (c.genus - 1);
  return g;
}

BigInt Arrangement::sum_self() const {
  BigInt s = 0;
  for (const auto& c : components) s += BigInt(c.count) * c.self_intersection;
  return s;
}

bool Arrangement::all_elliptic() const {
  return !components.empty() &&
         std::all_of(components.begin(), components.end(),
                     [](const ComponentClass& c) { return c.genus == 1; });
}

bool Arrangement::is_line_arrangement() const {
  return surface == Surface::ProjectivePlane && !components.empty() &&
         std::all_of(components.begin(), components.end(), [](const ComponentClass& c) {
           return c.genus == 0 && c.self_intersection == 1;
         });
}

ValidationReport validate(const Arrangement& arr) {
  ValidationReport report;
  if (arr.components.empty()) report.errors.push_back("arrangement has no components (need d >= 1)");
  for (std::size_t i = 0; i < arr.components.size(); ++i) {
    const auto& c = arr.components[i];
    const std::string where = "component class " + std::to_string(i);
    if (c.count < 1) report.errors.push_back(where + ": count must be >= 1");
    if (c.genus < 0) report.errors.push_back(where + ": genus must be >= 0");
    if (arr.surface == Surface::AbelianSurface && c.self_intersection != 2 * c.genus - 2) {
      report.errors.push_back(where + ": self-intersection " + std::to_string(c.self_intersection) +
                              " violates adjunction on an abelian surface (expected " +
                              std::to_string(2 * c.genus - 2) + ")");
    }
  }
  if (arr.c_square_override && arr.ordinary) {
    report.errors.push_back("c_square_override is only allowed on non-ordinary arrangements");
  }
  if (!arr.ordinary) return report;

  const Moments m = f_moments(arr.spectrum);
  const BigInt pairs2 = m.f2 - m.f1;
  if (pairs2 % 2 != 0) {
    report.errors.push_back("f2 - f1 is odd; pair count is not an integer");
    return report;
  }
  if (arr.surface != Surface::ProjectivePlane || !report.ok()) return report;

  // In the plane C_i.C_j = deg_i * deg_j with deg^2 = C_i^2.
  BigInt degree_sum = 0;
  BigInt degree_sq_sum = 0;
  for (const auto& c : arr.components) {
    const std::int64_t deg = perfect_square_root(c.self_intersection);
    if (deg < 1) return report;  // pair count not determined
    degree_sum += BigInt(c.count) * deg;
    degree_sq_sum += BigInt(c.count) * deg * deg;
  }
  const BigInt expected = (degree_sum * degree_sum - degree_sq_sum) / 2;
  const BigInt actual = pairs2 / 2;
  if (expected != actual) {
    report.warnings.push_back("pair count from spectrum (" + actual.str() +
                              ") differs from the component intersection count (" +
                              expected.str() + ")");
  }
  return report;
}

void require_valid(const Arrangement& arr) {
  const auto report = validate(arr);
  if (!report.ok()) throw Error(ErrorKind::ValidationError, report.errors.front());
}

EulerNumbers euler_numbers(const Arrangement& arr) {
  require_ordinary(arr, "euler_numbers");
  if (arr.surface != Surface::AbelianSurface) {
    throw Error(ErrorKind::WrongSurface, "euler_numbers requires an abelian surface");
  }
  const Moments m = f_moments(arr.spectrum);
  const BigInt two_minus_2g = -2 * arr.genus_minus_one();
  EulerNumbers e;
  e.curve = two_minus_2g + m.f0 - m.f1;
  e.curve_minus_sing = two_minus_2g - m.f1;
  e.complement = -e.curve;
  return e;
}

BigInt self_intersection(const Arrangement& arr) {
  if (arr.c_square_override) return *arr.c_square_override;
  require_ordinary(arr, "self_intersection");
  const Moments m = f_moments(arr.spectrum);
  return arr.sum_self() + m.f2 - m.f1;
}

Rat h_at_points(const BigInt& c_square, const PointMultiset& points) {
  BigInt s = 0;
  BigInt subtracted = 0;
  for (const auto& [mult, how_many] : points) {
    if (mult < 0 || how_many < 0) {
      throw Error(ErrorKind::BadInput, "point multiplicities and counts must be non-negative");
    }
    s += how_many;
    subtracted += BigInt(how_many) * mult * mult;
  }
  if (s == 0) throw Error(ErrorKind::EmptyPointSet, "H(C, P) needs at least one point");
  return Rat(c_square - subtracted, s);
}

Rat h_at_points(const BigInt& c_square, std::span<const std::int64_t> multiplicities) {
  PointMultiset points;
  for (const auto m : multiplicities) {
    if (m < 0) throw Error(ErrorKind::BadInput, "point multiplicities must be non-negative");
    ++points[m];
  }
  return h_at_points(c_square, points);
}

Rat h_at_sing(const Arrangement& arr) {
  require_ordinary(arr, "h_at_sing");
  const Moments m = f_moments(arr.spectrum);
  if (m.f0 == 0) throw Error(ErrorKind::NoSingularities, "arrangement has no singular points");
  return Rat(self_intersection(arr) - m.f2, m.f0);
}

std::int64_t Witness::size() const {
  std::int64_t s = 0;
  for (const auto& [k, t] : taken) s += t;
  return s;
}

HIndex h_index(const Arrangement& arr) {
  require_ordinary(arr, "h_index");
  if (arr.spectrum.empty()) {
    throw Error(ErrorKind::NoSingularities, "arrangement has no singular points");
  }
  const BigInt c_square = self_intersection(arr);

  std::optional<Rat> best;
  BigInt best_size = 0;
  BigInt taken = 0;
  BigInt removed = 0;
  const auto consider = [&](const BigInt& size, const BigInt& sub) {
    Rat value(c_square - sub, size);
    if (!best || value < *best) {
      best = std::move(value);
      best_size = size;
    }
  };
  const auto& counts = arr.spectrum.counts();
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    const BigInt k = it->first;
    const BigInt t = it->second;
    consider(taken + 1, removed + k * k);
    if (t > 1) consider(taken + t, removed + t * k * k);
    taken += t;
    removed += t * k * k;
  }

  HIndex out{*best, {}};
  BigInt remaining = best_size;
  for (auto it = counts.rbegin(); it != counts.rend() && remaining > 0; ++it) {
    const BigInt take = std::min<BigInt>(remaining, BigInt(it->second));
    out.witness.taken.emplace_back(it->first, static_cast<std::int64_t>(take));
    remaining -= take;
  }
  return out;
}

Arrangement pullback(const Arrangement& arr, std::int64_t degree) {
  if (degree < 1) throw Error(ErrorKind::BadParameter, "pullback degree must be >= 1");
  Arrangement out = arr;
  for (auto& c : out.components) c.count = checked_mul(c.count, degree, "component count");
  out.spectrum = arr.spectrum.scaled(degree);
  if (out.c_square_override) *out.c_square_override *= degree;
  return out;
}

Arrangement isogeny_scale(const Arrangement& arr, std::int64_t degree) {
  if (arr.surface != Surface::AbelianSurface) {
    throw Error(ErrorKind::WrongSurface, "isogeny_scale requires an abelian surface");
  }
  return pullback(arr, degree);
}

std::string to_string(Surface surface) {
  return surface == Surface::AbelianSurface ? "abelian" : "P2";
}

}  // namespace harbourne
