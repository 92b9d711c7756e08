#include "harbourne/inequalities.hpp"

#include "harbourne/error.hpp"

namespace harbourne {

namespace {

BoundResult make_bound(std::string name, Rat lhs, Rat rhs) {
  BoundResult b;
  b.name = std::move(name);
  b.holds = lhs >= rhs;
  b.lhs = std::move(lhs);
  b.rhs = std::move(rhs);
  return b;
}

Rat singular_count(const SingularitySpectrum& spectrum) {
  const Moments m = f_moments(spectrum);
  if (m.f0 == 0) throw Error(ErrorKind::NoSingularities, "bound needs at least one singular point");
  return Rat(m.f0);
}

Rat t(const SingularitySpectrum& spectrum, int k) { return Rat(spectrum.count(k)); }

}  // namespace

BoundResult elliptic_bound(const SingularitySpectrum& spectrum, const BigInt& genus) {
  const Rat f0 = singular_count(spectrum);
  const Rat f1(f_moments(spectrum).f1);
  const Rat g(genus);
  Rat rhs = (t(spectrum, 2) + t(spectrum, 3) / 4 - 7 * g + 7) / f0 - 4;
  BoundResult b = make_bound("elliptic_bound", -f1 / f0, std::move(rhs));
  if (genus != 1) b.applicability_note = "genus != 1: general-genus form";
  return b;
}

BoundResult elliptic_chain_floor(const SingularitySpectrum& spectrum) {
  const Rat f0 = singular_count(spectrum);
  return make_bound("elliptic_chain", (t(spectrum, 2) + t(spectrum, 3) / 4) / f0 - 4, Rat(-4));
}

BoundResult genus_bound(const Arrangement& arr) {
  if (arr.surface != Surface::AbelianSurface) {
    throw Error(ErrorKind::WrongSurface, "genus_bound requires an abelian surface");
  }
  if (!arr.ordinary) throw Error(ErrorKind::NotOrdinary, "genus_bound requires ordinary singularities");
  const auto& sp = arr.spectrum;
  const Rat f0 = singular_count(sp);
  const Rat f1(f_moments(sp).f1);
  const Rat g(arr.genus());
  Rat lhs = (2 * g - 2 - f1) / f0;
  Rat rhs = (2 * t(sp, 2) + Rat(9, 8) * t(sp, 3) + Rat(1, 2) * t(sp, 4) + 8 - 8 * g) / f0 - Rat(9, 2);
  return make_bound("genus_bound", std::move(lhs), std::move(rhs));
}

BoundResult abelian_spectrum_ineq(const SingularitySpectrum& spectrum, const BigInt& genus) {
  Rat lhs = 10 * Rat(genus) - 10 + t(spectrum, 2) + Rat(3, 4) * t(spectrum, 3);
  Rat rhs;
  for (const auto& [k, tk] : spectrum.counts()) {
    if (k >= 5) rhs += Rat(BigInt(2 * k - 9) * tk);
  }
  return make_bound("abelian_spectrum", std::move(lhs), std::move(rhs));
}

LineBounds line_bounds(std::int64_t d, const SingularitySpectrum& spectrum) {
  if (d < 2) throw Error(ErrorKind::BadInput, "line bounds need d >= 2 lines");
  const Rat f0 = singular_count(spectrum);
  const Rat f1(f_moments(spectrum).f1);
  const Rat dd(d);
  LineBounds out;
  out.h_sing = (dd - f1) / f0;
  const Rat b1 = Rat(-4) + (2 * dd + t(spectrum, 2) + t(spectrum, 3) / 4) / f0;
  const Rat b2 = (Rat(3, 2) * dd + 2 * t(spectrum, 2) + Rat(9, 8) * t(spectrum, 3) +
                  Rat(1, 2) * t(spectrum, 4)) / f0 - Rat(9, 2);
  out.b1 = make_bound("b1", out.h_sing, b1);
  out.b2 = make_bound("b2", out.h_sing, b2);
  out.b2_ge_b1 = b2 >= b1;
  return out;
}

HirzebruchLineChecks hirzebruch_line_checks(std::int64_t d, const SingularitySpectrum& spectrum) {
  if (d < 2) throw Error(ErrorKind::BadInput, "line checks need d >= 2 lines");
  const Rat lhs = t(spectrum, 2) + Rat(3, 4) * t(spectrum, 3);
  Rat zz_rhs(d);
  Rat hz_rhs(d);
  for (const auto& [k, tk] : spectrum.counts()) {
    if (k < 5) continue;
    zz_rhs += Rat(BigInt(k - 4) * tk);
    hz_rhs += Rat(BigInt(2 * k - 9) * tk);
  }
  const auto absent = [&](std::int64_t k) { return k < 2 || spectrum.count(static_cast<int>(k)) == 0; };
  const bool base = d >= 6 && absent(d) && absent(d - 1) && absent(d - 2);

  HirzebruchLineChecks out{make_bound("zzbauer", lhs, zz_rhs), make_bound("hirz86", lhs, hz_rhs)};
  out.hirz86.applicable = base;
  out.zzbauer.applicable = base && absent(d - 3);
  if (!out.hirz86.applicable) out.hirz86.applicability_note = "needs d >= 6 and t_d = t_{d-1} = t_{d-2} = 0";
  if (!out.zzbauer.applicable) {
    out.zzbauer.applicability_note = "needs d >= 6 and t_d = t_{d-1} = t_{d-2} = t_{d-3} = 0";
  }
  return out;
}

HReport h_report(const Arrangement& arr) {
  HReport report;
  report.h_at_sing = h_at_sing(arr);
  auto index = h_index(arr);
  report.h_index = std::move(index.value);
  report.witness = std::move(index.witness);

  if (arr.surface == Surface::AbelianSurface) {
    const BigInt g = arr.genus();
    report.bounds.push_back(elliptic_bound(arr.spectrum, g));
    if (g == 1) report.bounds.push_back(elliptic_chain_floor(arr.spectrum));
    report.bounds.push_back(genus_bound(arr));
    report.bounds.push_back(abelian_spectrum_ineq(arr.spectrum, g));
  } else if (arr.is_line_arrangement() && arr.num_components() >= 2) {
    const auto d = static_cast<std::int64_t>(arr.num_components());
    auto lines = line_bounds(d, arr.spectrum);
    auto checks = hirzebruch_line_checks(d, arr.spectrum);
    // H >= B1 rests on the zzbauer inequality, H >= B2 on hirz86.
    lines.b1.applicable = checks.zzbauer.applicable;
    lines.b1.applicability_note = checks.zzbauer.applicability_note;
    lines.b2.applicable = checks.hirz86.applicable;
    lines.b2.applicability_note = checks.hirz86.applicability_note;
    report.bounds.push_back(std::move(lines.b1));
    report.bounds.push_back(std::move(lines.b2));
    report.bounds.push_back(std::move(checks.zzbauer));
    report.bounds.push_back(std::move(checks.hirz86));
  }
  return report;
}

}  // namespace harbourne
