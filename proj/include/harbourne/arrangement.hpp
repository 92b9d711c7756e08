#pragma once

#include "harbourne/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace harbourne {

/// Sparse map k -> t_k counting the ordinary k-points of an arrangement.
/// Keys are >= 2; zero counts are never stored.
class SingularitySpectrum {
 public:
  using Map = std::map<int, std::int64_t>;

  SingularitySpectrum() = default;
  SingularitySpectrum(std::initializer_list<std::pair<const int, std::int64_t>> counts);

  /// Adds `count` points of multiplicity `k`. Throws BadMultiplicity for
  /// k < 2 and BadInput for a negative count or an overflowing total.
  void add(int k, std::int64_t count);

  std::int64_t count(int k) const;
  const Map& counts() const noexcept { return counts_; }
  bool empty() const noexcept { return counts_.empty(); }
  int max_multiplicity() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

  /// Every count multiplied by `factor` (>= 1).
  SingularitySpectrum scaled(std::int64_t factor) const;

  friend bool operator==(const SingularitySpectrum&, const SingularitySpectrum&) = default;

 private:
  Map counts_;
};

struct Moments {
  BigInt f0;  // number of singular points
  BigInt f1;  // sum of multiplicities
  BigInt f2;  // sum of squared multiplicities
};

Moments f_moments(const SingularitySpectrum& spectrum);

enum class Surface { ProjectivePlane, AbelianSurface };

struct ComponentClass {
  std::int64_t genus = 0;
  std::int64_t self_intersection = 0;
  std::int64_t count = 1;

  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

/// A reduced curve C = sum C_i on a surface, described combinatorially.
///
/// Identical components are stored once with a multiplicity `count`. When
/// `c_square_override` is set the arrangement is non-ordinary and C^2 is
/// taken from it verbatim.
struct Arrangement {
  std::string label;
  Surface surface = Surface::ProjectivePlane;
  bool ordinary = true;
  std::vector<ComponentClass> components;
  SingularitySpectrum spectrum;
  std::optional<BigInt> c_square_override;

  /// d: number of irreducible components.
  BigInt num_components() const;
  /// g - 1 = sum over components of (g_i - 1).
  BigInt genus_minus_one() const;
  BigInt genus() const { return genus_minus_one() + 1; }
  /// sum of C_i^2.
  BigInt sum_self() const;
  /// True when every component has geometric genus 1.
  bool all_elliptic() const;
  /// True for a plane arrangement made only of lines (genus 0, C_i^2 = 1).
  bool is_line_arrangement() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

/// Outcome of validate(): hard invariant failures and soft advisories.
struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return errors.empty(); }
};

/// Hard checks: d >= 1, count >= 1, genus >= 0, abelian adjunction
/// C_i^2 = 2g_i - 2, override only on non-ordinary input, f2 - f1 even for
/// ordinary input. Soft check: for ordinary input the pair count
/// (f2 - f1)/2 equals sum_{i<j} C_i.C_j when the component data determines it
/// (plane curves whose self-intersections are perfect squares).
ValidationReport validate(const Arrangement& arr);

/// Throws ValidationError carrying the first hard error, if any.
void require_valid(const Arrangement& arr);

struct EulerNumbers {
  BigInt curve;               // e(C)
  BigInt curve_minus_sing;    // e(C \ Sing C)
  BigInt complement;          // e(A \ C)
};

/// Euler numbers of an ordinary arrangement on an abelian surface.
EulerNumbers euler_numbers(const Arrangement& arr);

/// C^2 = sum C_i^2 + f2 - f1, or the override when present.
BigInt self_intersection(const Arrangement& arr);

/// multiplicity -> number of points of that multiplicity.
using PointMultiset = std::map<std::int64_t, std::int64_t>;

/// H(C, P) = (C^2 - sum m_p^2) / |P| for the blow-up at P, where `points`
/// lists the multiplicity of C at each point of P.
Rat h_at_points(const BigInt& c_square, const PointMultiset& points);
Rat h_at_points(const BigInt& c_square, std::span<const std::int64_t> multiplicities);

/// H(C, Sing C) = (C^2 - f2) / f0.
Rat h_at_sing(const Arrangement& arr);

/// Points taken at each multiplicity, highest multiplicity first.
struct Witness {
  std::vector<std::pair<int, std::int64_t>> taken;

  std::int64_t size() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct HIndex {
  Rat value;
  Witness witness;
};

/// H-index: minimum of H(C, P) over nonempty subsets P of Sing(C).
///
/// Only singular points are candidates. A smooth point of C (m = 1) turns
/// N/s into (N - 1)/(s + 1), which is smaller only when N/s > -1, and a point
/// off C (m = 0) helps only when N/s > 0; the arrangements of interest have
/// H <= -1, and the restriction keeps the minimum well defined.
///
/// For a fixed size s the best subset takes the s points of largest
/// multiplicity. Growing the subset inside one multiplicity group gives a
/// Moebius function of the number taken, so only the first and last point of
/// each group need evaluating. Ties go to the smallest subset.
HIndex h_index(const Arrangement& arr);

/// Pullback along a finite map of degree `degree` unramified over C: every
/// t_k, component count, override and (g - 1) is multiplied by the degree.
Arrangement pullback(const Arrangement& arr, std::int64_t degree);

/// Same data transformation as pullback, for an isogeny of abelian surfaces.
Arrangement isogeny_scale(const Arrangement& arr, std::int64_t degree);

struct BoundResult {
  std::string name;
  Rat lhs;
  Rat rhs;
  bool holds = false;  // lhs >= rhs
  bool applicable = true;
  std::string applicability_note;
};

struct HReport {
  Rat h_at_sing;
  Rat h_index;
  Witness witness;
  std::vector<BoundResult> bounds;
};

std::string to_string(Surface surface);

}  // namespace harbourne
