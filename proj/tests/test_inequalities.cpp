#include "doctest.h"

#include "harbourne/catalog.hpp"
#include "harbourne/cover.hpp"
#include "harbourne/error.hpp"
#include "harbourne/inequalities.hpp"
#include "support/generators.hpp"

using namespace harbourne;

namespace {

Rat frac(std::int64_t p, std::int64_t q) { return Rat(BigInt(p), BigInt(q)); }

SingularitySpectrum generic_six() { return {{2, 15}}; }

}  // namespace

TEST_CASE("elliptic_bound") {
  const auto a = elliptic_bound({{4, 1}}, 1);
  CHECK(a.lhs == Rat(-4));
  CHECK(a.rhs == Rat(-4));
  CHECK(a.holds);

  const auto b = elliptic_bound({{2, 1}}, 1);
  CHECK(b.lhs == Rat(-2));
  CHECK(b.rhs == Rat(-3));
  CHECK(b.holds);

  const auto c = elliptic_bound({{3, 1}}, 1);
  CHECK(c.lhs == Rat(-3));
  CHECK(c.rhs == frac(-15, 4));
  CHECK(c.holds);

  CHECK_THROWS_AS(elliptic_bound({}, 1), Error);
}

TEST_CASE("genus_bound") {
  const auto hg = genus_bound(hirzebruch_gauss());
  CHECK(hg.lhs == Rat(-4));
  CHECK(hg.rhs == Rat(-4));
  CHECK(hg.holds);

  const auto hz = genus_bound(holzapfel_eisenstein());
  CHECK(hz.lhs == Rat(-4));
  CHECK(hz.rhs == Rat(-4));

  const auto dg = genus_bound(diagonal_config());
  CHECK(dg.lhs == Rat(-3));
  CHECK(dg.rhs == frac(-27, 8));
  CHECK(dg.holds);

  CHECK_THROWS_AS(genus_bound(klein()), Error);
}

TEST_CASE("abelian_spectrum_ineq") {
  const auto a = abelian_spectrum_ineq({{4, 1}}, 1);
  CHECK(a.lhs == Rat(0));
  CHECK(a.rhs == Rat(0));
  CHECK(a.holds);

  const auto b = abelian_spectrum_ineq({{5, 1}}, 1);
  CHECK(b.lhs == Rat(0));
  CHECK(b.rhs == Rat(1));
  CHECK_FALSE(b.holds);

  const auto c = abelian_spectrum_ineq({{2, 4}, {5, 2}}, 1);
  CHECK(c.lhs == Rat(4));
  CHECK(c.rhs == Rat(2));
  CHECK(c.holds);
}

TEST_CASE("line_bounds") {
  const auto kl = line_bounds(21, klein().spectrum);
  CHECK(kl.h_sing == Rat(-3));
  CHECK(kl.b1.rhs == Rat(-3));
  CHECK(kl.b2.rhs == Rat(-3));
  CHECK(kl.b1.holds);
  CHECK(kl.b2.holds);
  CHECK(kl.b2_ge_b1);

  const auto fe = line_bounds(18, fermat18().spectrum);
  CHECK(fe.h_sing == frac(-36, 13));
  CHECK(fe.b1.rhs == frac(-37, 13));
  CHECK(fe.b2.rhs == frac(-36, 13));
  CHECK(fe.b2_ge_b1);

  const auto g6 = line_bounds(6, generic_six());
  CHECK(g6.h_sing == frac(-8, 5));
  CHECK(g6.b1.rhs == frac(-11, 5));
  CHECK(g6.b2.rhs == frac(-19, 10));
  CHECK(g6.b2_ge_b1);

  const auto dh = line_bounds(9, dual_hesse().spectrum);
  CHECK(dh.h_sing == frac(-9, 4));
  CHECK(dh.b2.rhs == frac(-9, 4));
}

TEST_CASE("line H agrees with the general (C^2 - f2)/f0") {
  for (const auto& arr : {klein(), fermat18(), dual_hesse()}) {
    const auto d = static_cast<std::int64_t>(arr.num_components());
    CHECK(line_bounds(d, arr.spectrum).h_sing == h_at_sing(arr));
  }
}

TEST_CASE("hirzebruch_line_checks") {
  const auto kl = hirzebruch_line_checks(21, klein().spectrum);
  CHECK(kl.hirz86.lhs == Rat(21));
  CHECK(kl.hirz86.rhs == Rat(21));
  CHECK(kl.hirz86.holds);
  CHECK(kl.hirz86.applicable);

  const auto fe = hirzebruch_line_checks(18, fermat18().spectrum);
  CHECK(fe.hirz86.lhs == Rat(27));
  CHECK(fe.hirz86.rhs == Rat(27));
  CHECK(fe.hirz86.holds);

  const auto g6 = hirzebruch_line_checks(6, generic_six());
  CHECK(g6.zzbauer.lhs == Rat(15));
  CHECK(g6.zzbauer.rhs == Rat(6));
  CHECK(g6.zzbauer.holds);
  CHECK(g6.zzbauer.applicable);

  // a pencil: all 5 lines through one point
  const auto pencil = hirzebruch_line_checks(5, {{5, 1}});
  CHECK_FALSE(pencil.hirz86.applicable);
  CHECK_FALSE(pencil.zzbauer.applicable);

  // t_{d-3} != 0 blocks only zzbauer
  const auto near = hirzebruch_line_checks(7, {{4, 1}, {2, 15}});
  CHECK(near.hirz86.applicable);
  CHECK_FALSE(near.zzbauer.applicable);
}

TEST_CASE("B2 - B1 closed form and B2 >= B1 under hirz86") {
  gen::Source src;
  int conditioned = 0;
  while (conditioned < 300) {
    const auto d = src.uniform(2, 40);
    const auto sp = src.spectrum(8, 30);
    const auto lines = line_bounds(d, sp);
    const auto hz = hirzebruch_line_checks(d, sp);
    const Rat f0(f_moments(sp).f0);
    Rat tail;
    for (const auto& [k, t] : sp.counts()) {
      if (k >= 5) tail += Rat(t);
    }
    const Rat expected = (Rat(-d) / 2 + Rat(sp.count(2)) / 2 + frac(3, 8) * Rat(sp.count(3)) - tail / 2) / f0;
    CHECK(lines.b2.rhs - lines.b1.rhs == expected);
    if (!hz.hirz86.holds) continue;
    ++conditioned;
    CHECK(lines.b2_ge_b1);
  }
}

TEST_CASE("elliptic_bound is the n = 3 refined defect rearranged") {
  gen::Source src;
  for (int i = 0; i < 300; ++i) {
    const auto arr = src.any_genus_abelian(src.spectrum(8, 25));
    const auto b = elliptic_bound(arr.spectrum, arr.genus());
    const auto r = refined_defect_check(arr, 3);
    const Rat f0(f_moments(arr.spectrum).f0);
    CHECK((b.lhs - b.rhs) * 4 * f0 == r.defect - r.refined_rhs);
    CHECK(b.holds == r.holds);
  }
}

TEST_CASE("genus_bound is the n = 2 refined defect rearranged, exactly at genus 1") {
  gen::Source src;
  for (int i = 0; i < 300; ++i) {
    const auto arr = src.any_genus_abelian(src.spectrum(8, 25));
    const auto b = genus_bound(arr);
    const auto r = refined_defect_check(arr, 2);
    const Rat f0(f_moments(arr.spectrum).f0);
    const Rat g_minus_1(arr.genus_minus_one());
    // the bound's constant 8 - 8g exceeds the rearrangement's 3 - 3g by 5(1 - g)
    CHECK((b.lhs - b.rhs) * 2 * f0 == r.defect - r.refined_rhs + 10 * g_minus_1);
    if (arr.genus() == 1) CHECK((b.lhs - b.rhs) * 2 * f0 == r.defect - r.refined_rhs);
  }
}

TEST_CASE("elliptic chain for g = 1") {
  gen::Source src;
  for (int i = 0; i < 300; ++i) {
    const auto sp = src.spectrum(8, 10);
    const auto chain = elliptic_chain_floor(sp);
    CHECK(chain.holds);
    CHECK((chain.lhs == Rat(-4)) == (sp.count(2) == 0 && sp.count(3) == 0));
    CHECK(chain.lhs == elliptic_bound(sp, 1).rhs);
  }
}

TEST_CASE("h_report collects the bounds in fixed order") {
  const auto hg = h_report(hirzebruch_gauss());
  REQUIRE(hg.bounds.size() == 4);
  CHECK(hg.bounds[0].name == "elliptic_bound");
  CHECK(hg.bounds[1].name == "elliptic_chain");
  CHECK(hg.bounds[2].name == "genus_bound");
  CHECK(hg.bounds[3].name == "abelian_spectrum");
  CHECK(hg.h_index == Rat(-4));
  CHECK(hg.h_index <= hg.h_at_sing);

  const auto kl = h_report(klein());
  REQUIRE(kl.bounds.size() == 4);
  CHECK(kl.bounds[0].name == "b1");
  CHECK(kl.bounds[3].name == "hirz86");
  for (const auto& b : kl.bounds) {
    CHECK(b.holds);
    CHECK(b.applicable);
  }

  CHECK(h_report(cn_family(9).on_z).bounds.empty());
}
