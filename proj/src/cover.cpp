#include "harbourne/cover.hpp"

#include "harbourne/error.hpp"

namespace harbourne {

namespace {

struct CoverData {
  BigInt g;
  BigInt f0;
  BigInt f1;
  BigInt t2;
  BigInt n;
};

CoverData cover_data(const Arrangement& arr, std::int64_t n, const char* op) {
  if (arr.surface != Surface::AbelianSurface) {
    throw Error(ErrorKind::WrongSurface, std::string(op) + " requires an abelian surface");
  }
  if (!arr.ordinary) {
    throw Error(ErrorKind::NotOrdinary, std::string(op) + " requires ordinary singularities");
  }
  if (arr.num_components() < 2) {
    throw Error(ErrorKind::BadInput, std::string(op) + " requires d >= 2 components");
  }
  if (n < 2) throw Error(ErrorKind::BadParameter, "branching order n must be >= 2");
  const Moments m = f_moments(arr.spectrum);
  return {arr.genus(), m.f0, m.f1, BigInt(arr.spectrum.count(2)), BigInt(n)};
}

}  // namespace

FiberFactors exceptional_fiber(std::int64_t k, std::int64_t n) {
  if (k < 3) {
    throw Error(ErrorKind::BadMultiplicity, "exceptional fibers exist only over k-points with k >= 3");
  }
  if (n < 2) throw Error(ErrorKind::BadParameter, "branching order n must be >= 2");
  return {BigInt(2 * n) + BigInt(k) * (1 - n), BigInt(-1)};
}

Rat euler_cover(const Arrangement& arr, std::int64_t n) {
  const auto [g, f0, f1, t2, nn] = cover_data(arr, n, "euler_cover");
  return Rat((2 * g - 2 + f1 - f0) * nn * nn + 2 * (1 - g + f0 - f1) * nn + f1 - t2);
}

Rat canonical_square_cover(const Arrangement& arr, std::int64_t n) {
  const auto [g, f0, f1, t2, nn] = cover_data(arr, n, "canonical_square_cover");
  return Rat((2 * g - 2 + 3 * f1 - 4 * f0) * nn * nn + 4 * (f0 - f1 - g + 1) * nn - f0 + f1 + t2 +
             2 * g - 2);
}

Rat my_defect(const Arrangement& arr, std::int64_t n) {
  const auto [g, f0, f1, t2, nn] = cover_data(arr, n, "my_defect");
  return Rat((f0 + 4 * g - 4) * nn * nn + 2 * (f0 - f1 - g + 1) * nn + 2 * f1 + f0 - 4 * t2 -
             2 * g + 2);
}

CoverInvariants cover_invariants(const Arrangement& arr, std::int64_t n) {
  return {n, euler_cover(arr, n), canonical_square_cover(arr, n), my_defect(arr, n)};
}

Rat unnormalized(const Rat& normalized, std::int64_t n, const BigInt& d) {
  if (d < 2) throw Error(ErrorKind::BadInput, "normalization needs d >= 2");
  BigInt scale = 1;
  for (BigInt i = 2; i < d; ++i) scale *= n;
  return normalized * Rat(scale);
}

Rat miyaoka_refined_rhs(const BigInt& m_minus2_curves,
                        std::span<const std::int64_t> elliptic_self_ints) {
  if (m_minus2_curves < 0) throw Error(ErrorKind::BadInput, "number of (-2)-curves must be >= 0");
  Rat rhs = Rat(9, 2) * Rat(m_minus2_curves);
  for (const auto d2 : elliptic_self_ints) {
    if (d2 >= 0) {
      throw Error(ErrorKind::BadInput, "elliptic curve self-intersections must be negative");
    }
    rhs -= Rat(d2);
  }
  return rhs;
}

RefinedDefect refined_defect_check(const Arrangement& arr, std::int64_t n) {
  if (n != 2 && n != 3) throw Error(ErrorKind::BadOrder, "refined defect check needs n = 2 or 3");
  RefinedDefect out;
  out.defect = my_defect(arr, n);
  const Rat t3(arr.spectrum.count(3));
  const Rat t4(arr.spectrum.count(4));
  out.refined_rhs = n == 2 ? Rat(9, 4) * t3 + t4 : t3;
  out.holds = out.defect >= out.refined_rhs;
  return out;
}

bool has_ball_quotient_spectrum(const SingularitySpectrum& spectrum) {
  const Moments m = f_moments(spectrum);
  const bool only_fours = spectrum.counts().size() == 1 && spectrum.count(4) > 0;
  return only_fours && 4 * m.f0 == m.f1;
}

BallQuotientReport ball_quotient_check(const Arrangement& arr) {
  if (arr.surface != Surface::AbelianSurface) {
    throw Error(ErrorKind::WrongSurface, "ball_quotient_check requires an abelian surface");
  }
  if (!arr.all_elliptic()) {
    throw Error(ErrorKind::NotElliptic, "ball_quotient_check requires genus-1 components");
  }
  if (!arr.ordinary) {
    throw Error(ErrorKind::NotOrdinary, "ball_quotient_check requires ordinary singularities");
  }
  const Moments m = f_moments(arr.spectrum);
  BallQuotientReport out;
  out.log_ck_square = m.f1 - m.f0;
  out.log_euler = m.f0;
  out.is_ball_quotient = has_ball_quotient_spectrum(arr.spectrum);
  if (out.is_ball_quotient && arr.num_components() >= 2) {
    for (std::int64_t n = 2; n <= 10; ++n) {
      if (my_defect(arr, n) != Rat(m.f0 * (n - 3) * (n - 3))) out.defect_violations.push_back(n);
    }
  }
  return out;
}

}  // namespace harbourne
