#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace indrep;

TEST(Invariants, NewmanGenus) {
  EXPECT_EQ(newman_genus(24, 4), Rational(0));
  EXPECT_EQ(newman_genus(192, 8), Rational(5));
  EXPECT_EQ(newman_genus(6, 2), Rational(0));
  EXPECT_THROW(newman_genus(10, 4), std::domain_error);
  EXPECT_THROW(newman_genus(10, 0), std::domain_error);
}

TEST(Invariants, WohlfahrtLevel) {
  EXPECT_EQ(wohlfahrt_level(Alpha(0, 1)), 4u);
  EXPECT_EQ(wohlfahrt_level(Alpha(1, 4)), 4u);
  EXPECT_EQ(wohlfahrt_level(Alpha(1, 8)), 8u);
  EXPECT_EQ(wohlfahrt_level(Alpha(1, 3)), 12u);
  EXPECT_EQ(wohlfahrt_level(Alpha(2, 5)), 20u);
  for (std::int64_t q = 1; q <= 30; ++q)
    EXPECT_EQ(wohlfahrt_level(Alpha(1, q)), static_cast<std::uint64_t>(4 * Alpha(1, q).n())) << q;
}

TEST(KernelReport, Formulas) {
  auto r = kernel_report(Alpha(1, 4), false);
  EXPECT_EQ(r.N, 1);
  EXPECT_EQ(r.index, 24);
  EXPECT_EQ(r.genus, 0);
  EXPECT_EQ(r.cusps, 6);
  EXPECT_EQ(r.level, 4);
  EXPECT_EQ(r.free_generators, 5);
  EXPECT_FALSE(r.cross_checks);

  r = kernel_report(Alpha(1, 8), false);
  EXPECT_EQ(r.index, 192);
  EXPECT_EQ(r.genus, 5);
  EXPECT_EQ(r.cusps, 24);
  EXPECT_EQ(r.level, 8);
  EXPECT_EQ(r.free_generators, 33);
  EXPECT_EQ(r.area_over_pi, Rational(64));
  EXPECT_EQ(r.gauss_bonnet_over_pi, Rational(64));

  r = kernel_report(Alpha(1, 3), false);
  EXPECT_EQ(r.index, 648);
  EXPECT_EQ(r.genus, 28);
  EXPECT_EQ(r.cusps, 54);
  EXPECT_EQ(r.level, 12);
}

TEST(KernelReport, VerifiedByEnumeration) {
  for (const Alpha& a : {Alpha(0, 1), Alpha(1, 8), Alpha(1, 3), Alpha(2, 5), Alpha(1, 16)}) {
    auto r = kernel_report(a, true);
    ASSERT_TRUE(r.cross_checks) << a;
    EXPECT_EQ(r.cross_checks->group_order, static_cast<std::uint64_t>(r.index));
    EXPECT_EQ(r.cross_checks->diagonal_order, static_cast<std::uint64_t>(r.N * r.N * r.N));
    EXPECT_EQ(r.cross_checks->t_order, static_cast<std::uint64_t>(r.level));
  }
  EXPECT_THROW(kernel_report(Alpha(1, 7), true, 1000), GroupTooLarge);
}

TEST(KernelReport, CuspCountMatchesOrbitCount) {
  // cusps of ker U_α = orbits of <U_α(T)> on G_α acting by left multiplication
  for (const Alpha& a : {Alpha(1, 8), Alpha(1, 3)}) {
    auto g = image_group(a);
    auto t = u_alpha(a, ModularElement::T());
    std::set<Monomial> seen;
    std::int64_t orbits = 0;
    for (const auto& x : g.elements()) {
      if (seen.count(x)) continue;
      ++orbits;
      for (Monomial y = x; seen.insert(y).second;) y = t * y;
    }
    EXPECT_EQ(orbits, kernel_report(a, false).cusps) << a;
  }
}

TEST(Congruence, Decisions) {
  SchreierCache cache;
  auto c = decide_congruence(Alpha(0, 1), cache);
  EXPECT_TRUE(c.congruent);
  EXPECT_EQ(c.kernel, KernelId::Gamma4);
  EXPECT_FALSE(c.witness);

  c = decide_congruence(Alpha(1, 4), cache);
  EXPECT_TRUE(c.congruent);
  EXPECT_EQ(c.kernel, KernelId::Gamma4);

  c = decide_congruence(Alpha(1, 8), cache);
  EXPECT_TRUE(c.congruent);
  EXPECT_EQ(c.kernel, KernelId::Gamma8);
  EXPECT_EQ(c.image_order, 192u);

  c = decide_congruence(Alpha(3, 8), cache);
  EXPECT_EQ(c.kernel, KernelId::Gamma8);

  for (const Alpha& a : {Alpha(1, 3), Alpha(1, 5), Alpha(2, 5), Alpha(1, 7), Alpha(1, 16), Alpha(5, 12)}) {
    c = decide_congruence(a, cache);
    EXPECT_FALSE(c.congruent) << a;
    EXPECT_EQ(c.kernel, KernelId::Noncongruence);
    ASSERT_TRUE(c.witness) << a;
    EXPECT_TRUE(witness_reverifies(c)) << a;
    EXPECT_TRUE(in_gamma(c.witness->matrix, 4 * a.n()));
    EXPECT_FALSE(u_alpha(a, c.witness->matrix).is_identity());
  }
}

TEST(Congruence, WitnessFixtures) {
  SchreierCache cache;
  const std::pair<Alpha, ModularElement> fixtures[] = {
      {Alpha(1, 3), ModularElement(121, 36, 84, 25)},   {Alpha(1, 5), ModularElement(339, 100, 200, 59)},
      {Alpha(2, 5), ModularElement(339, 100, 200, 59)}, {Alpha(1, 7), ModularElement(671, 140, 532, 111)},
      {Alpha(1, 16), ModularElement(209, 80, 128, 49)},
  };
  for (const auto& [a, m] : fixtures) {
    auto c = decide_congruence(a, cache);
    ASSERT_TRUE(c.witness) << a;
    EXPECT_EQ(c.witness->matrix, m) << a;
  }
}

TEST(Congruence, TamperedWitnessFailsReverification) {
  auto c = decide_congruence(Alpha(1, 3));
  ASSERT_TRUE(c.witness);
  auto bad = c;
  bad.witness->matrix = ModularElement::T(12);
  EXPECT_FALSE(witness_reverifies(bad));
  bad = c;
  bad.witness->word = parse_word("T^12");
  EXPECT_FALSE(witness_reverifies(bad));
}

TEST(Congruence, UndecidedPastModulusBound) {
  EXPECT_THROW(decide_congruence(Alpha(1, 17), 64), UndecidedAtBound);
  EXPECT_THROW(decide_congruence(Alpha(1, 5), 16), ModulusBoundExceeded);
}

TEST(Congruence, SymmetricUnderConjugation) {
  SchreierCache cache;
  for (std::int64_t q = 1; q <= 12; ++q)
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Alpha a(p, q);
      EXPECT_EQ(decide_congruence(a, cache).congruent, decide_congruence(a.conjugate(), cache).congruent) << a;
    }
}

TEST(Abelianness, Probe) {
  auto r2 = abelianness_probe(2, 500, 7);
  EXPECT_EQ(r2.level, 16u);
  EXPECT_TRUE(r2.all_in_level());
  EXPECT_FALSE(r2.witness_commutator);

  auto r3 = abelianness_probe(3, 500, 7);
  EXPECT_EQ(r3.level, 32u);
  ASSERT_TRUE(r3.witness_commutator);
  EXPECT_EQ(*r3.witness_commutator, ModularElement(17, 64, 64, 241));
  EXPECT_FALSE(*r3.witness_in_level);
  EXPECT_TRUE(in_gamma(*r3.witness_commutator, 16));

  auto again = abelianness_probe(3, 500, 7);
  EXPECT_EQ(again.in_level, r3.in_level);
}

TEST(GammaD, Arithmetic) {
  auto g = gamma_d_info(1);
  EXPECT_EQ(g.index_in_psl, 6);
  EXPECT_EQ(g.cusps, 3);
  EXPECT_EQ(g.area_over_pi, Rational(2));
  EXPECT_EQ(g.gauss_bonnet_over_pi, g.area_over_pi);
  EXPECT_TRUE(g.known_congruent);
  EXPECT_FALSE(g.zograf_applicable);

  for (std::int64_t d = 1; d <= 100; ++d) {
    auto info = gamma_d_info(d);
    EXPECT_EQ(info.area_over_pi, info.gauss_bonnet_over_pi) << d;
    EXPECT_EQ(info.zograf_applicable, d >= 16) << d;
    EXPECT_EQ(info.congruence_excluded_by_bound, d >= 22) << d;
  }
  EXPECT_THROW(gamma_d_info(0), std::domain_error);
}

TEST(Scan, AlphaEnumeration) {
  auto half = scan_alphas(4, false);
  std::vector<std::string> s;
  for (const auto& a : half) s.push_back(a.to_string());
  EXPECT_EQ(s, (std::vector<std::string>{"0", "1/4", "1/3", "1/2"}));
  EXPECT_EQ(scan_alphas(4, true).size(), 6u);
  EXPECT_THROW(scan_alphas(0, false), std::domain_error);
}

TEST(Scan, CongruentSetUpToSixteen) {
  SchreierCache cache;
  std::vector<std::string> congruent;
  for (const auto& row : scan(16, false, cache))
    if (row.certificate.congruent) congruent.push_back(row.report.alpha.to_string());
  EXPECT_EQ(congruent, (std::vector<std::string>{"0", "1/8", "1/4", "3/8", "1/2"}));
}
