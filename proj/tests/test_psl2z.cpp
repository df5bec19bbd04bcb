#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace indrep;

namespace {

ModularElement M(long a, long b, long c, long d) { return ModularElement(a, b, c, d); }

}  // namespace

TEST(ModularElement, CanonicalFormIgnoresSign) {
  auto m = M(7, -12, -4, 7);
  EXPECT_EQ(m, M(-7, 12, 4, -7));
  EXPECT_EQ(m.c(), 4);
  EXPECT_EQ(ModularElement(m.a(), m.b(), m.c(), m.d()), m);
  EXPECT_EQ(M(-1, 0, 0, -1), ModularElement::identity());
  EXPECT_EQ(M(-1, -5, 0, -1), M(1, 5, 0, 1));
}

TEST(ModularElement, RejectsWrongDeterminant) {
  EXPECT_THROW(M(3, 8, 8, 27), ParseError);
  EXPECT_THROW(M(0, 0, 0, 0), ParseError);
}

TEST(ModularElement, Mul) {
  const auto S = ModularElement::S(), T = ModularElement::T();
  EXPECT_TRUE((S * S).is_identity());
  EXPECT_EQ(ModularElement::T(3) * ModularElement::T(-7), M(1, -4, 0, 1));
  EXPECT_EQ(power(T, -2) * (S * power(T, -4) * S) * power(T, -2), M(7, -12, -4, 7));
  EXPECT_TRUE(power(S * T, 3).is_identity());
  auto x = M(5, 2, 7, 3);
  EXPECT_TRUE((x * x.inverse()).is_identity());
  EXPECT_TRUE((x.inverse() * x).is_identity());
}

TEST(ModularElement, EvalWord) {
  EXPECT_EQ(eval_word(parse_word("S T^4 S")), M(-1, 0, 4, -1));
  EXPECT_TRUE(eval_word(STWord()).is_identity());
  EXPECT_EQ(eval_word(parse_word("T^-1 S T^4 S T")), M(-5, -4, 4, 3));
}

TEST(ModularElement, WordEvaluationIsAHomomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto w1 = oracle::random_word(rng, 40), w2 = oracle::random_word(rng, 40);
    ASSERT_EQ(eval_word(w1 + w2), eval_word(w1) * eval_word(w2));
    ASSERT_EQ(eval_word(w1.inverse()), eval_word(w1).inverse());
  }
}

TEST(ModularElement, MulIsAssociative) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto x = eval_word(oracle::random_word(rng, 15));
    auto y = eval_word(oracle::random_word(rng, 15));
    auto z = eval_word(oracle::random_word(rng, 15));
    ASSERT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(STWord, FreeReduction) {
  EXPECT_TRUE((STWord::s() + STWord::s()).empty());
  EXPECT_EQ(parse_word("T^3 T^-1 S").to_string(), "T^2 S");
  EXPECT_TRUE(parse_word("S T^2 T^-2 S").empty());
  auto w = parse_word("T S T^-4 S T^-1");
  EXPECT_TRUE((w + w.inverse()).empty());
  EXPECT_EQ(parse_word("T^+2 T").to_string(), "T^3");
}

TEST(STWord, ParseErrors) {
  EXPECT_THROW(parse_word("S X"), ParseError);
  EXPECT_THROW(parse_word("T^"), ParseError);
  EXPECT_THROW(parse_word("T^2x"), ParseError);
  EXPECT_THROW(parse_matrix("[[1,2],[3]]"), ParseError);
  EXPECT_THROW(parse_matrix("[[1,1],[0,1]] x"), ParseError);
  EXPECT_EQ(parse_matrix(" [ [ 1 , -4 ] ,[0, 1]] "), M(1, -4, 0, 1));
  EXPECT_EQ(parse_element("T^-4"), M(1, -4, 0, 1));
}

TEST(DecomposeST, Examples) {
  EXPECT_TRUE(decompose_st(ModularElement::identity()).empty());
  EXPECT_EQ(decompose_st(M(1, 7, 0, 1)).to_string(), "T^7");
  EXPECT_EQ(decompose_st(ModularElement::S()).to_string(), "S");
  auto g4 = M(7, -12, -4, 7);
  EXPECT_EQ(eval_word(decompose_st(g4)), g4);
}

TEST(DecomposeST, RoundTripAndLogarithmicLength) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    auto m = eval_word(oracle::random_word(rng, 40));
    auto w = decompose_st(m);
    ASSERT_EQ(eval_word(w), m);
    // each S-step at least halves |c|
    BigInt c = abs(m.c());
    std::size_t s_count = 0;
    for (const auto& t : w.tokens()) s_count += t.is_s;
    std::size_t bound = 1;
    while (c > 0) {
      c >>= 1;
      ++bound;
    }
    ASSERT_LE(s_count, bound) << m;
  }
}

TEST(Membership, Gamma0) {
  EXPECT_TRUE(in_gamma0(ModularElement::T(), 4));
  EXPECT_FALSE(in_gamma0(ModularElement::S(), 4));
  EXPECT_TRUE(in_gamma0(M(-1, 0, 4, -1), 4));
  EXPECT_EQ(delta_gamma04(ModularElement::T()), 1);
  EXPECT_EQ(delta_gamma04(ModularElement::S()), 0);
  // S T² S = ±[[-1,0],[2,-1]], lower-left 2 mod 4
  auto st2s = eval_word(parse_word("S T^2 S"));
  int c_mod4 = static_cast<int>(((st2s.c() % 4) + 4) % 4);
  EXPECT_EQ(delta_gamma04(st2s), c_mod4 == 0 ? 1 : 0);
  EXPECT_EQ(delta_gamma04(st2s), 0);
}

TEST(Membership, PrincipalCongruence) {
  EXPECT_TRUE(in_gamma(M(1, 4, 0, 1), 4));
  EXPECT_TRUE(in_gamma(M(17, 64, 64, 241), 16));
  EXPECT_FALSE(in_gamma(M(17, 64, 64, 241), 32));
  EXPECT_FALSE(in_gamma(ModularElement::S(), 2));
  EXPECT_TRUE(in_gamma(M(-1, 4, 0, -1), 4));
}

TEST(Membership, MaximalNormalSubgroupH) {
  for (const auto& g : gamma4_generators()) EXPECT_TRUE(in_h(g, 4));
  EXPECT_FALSE(in_h(ModularElement::S(), 4));

  // brute-force a det-1 element congruent to diag(3,3) mod 8
  std::optional<ModularElement> found;
  for (long a = 3; a < 200 && !found; a += 8)
    for (long d = 3; d < 200 && !found; d += 8)
      for (long b = 8; b <= a * d && !found; b += 8)
        if ((a * d - 1) % b == 0 && ((a * d - 1) / b) % 8 == 0) found = M(a, b, (a * d - 1) / b, d);
  ASSERT_TRUE(found);
  EXPECT_FALSE(in_gamma(*found, 8));
  EXPECT_TRUE(in_h(*found, 8));
  // mod 4 the only square roots of 1 are ±1, so H(4) = Γ(4) on this element
  EXPECT_EQ(in_h(*found, 4), in_gamma(*found, 4));
}

TEST(IndexFormulas, Gamma) {
  EXPECT_EQ(index_gamma(2), 6u);
  EXPECT_EQ(index_gamma(4), 24u);
  EXPECT_EQ(index_gamma(8), 192u);
  EXPECT_THROW(index_gamma(1), std::domain_error);
  for (std::int64_t n = 2; n <= 12; ++n) EXPECT_EQ(index_gamma(n), oracle::count_psl2_zn(n)) << n;
}

TEST(IndexFormulas, Gamma0) {
  EXPECT_EQ(index_gamma0(4), 6u);
  EXPECT_EQ(index_gamma0(1), 1u);
  EXPECT_EQ(index_gamma0(6), 12u);
  // right cosets Γ₀(n)g inside PSL(2,Z/n): g ~ h iff g h⁻¹ has c ≡ 0
  for (unsigned n : {4u, 6u, 9u, 10u}) {
    auto data = enumerate_psl2_zn(n);
    std::vector<ResidueElement> reps;
    for (const auto& e : data.elements) {
      bool known = false;
      for (const auto& r : reps)
        if ((e * r.inverse()).entries()[2] == 0) {
          known = true;
          break;
        }
      if (!known) reps.push_back(e);
    }
    EXPECT_EQ(reps.size(), index_gamma0(n)) << n;
  }
}

TEST(ResidueElement, ReductionIsAHomomorphism) {
  std::mt19937_64 rng(14);
  for (unsigned n : {2u, 4u, 7u, 12u, 60u}) {
    for (int i = 0; i < 200; ++i) {
      auto x = eval_word(oracle::random_word(rng, 20));
      auto y = eval_word(oracle::random_word(rng, 20));
      ASSERT_EQ(ResidueElement::reduce(x * y, n),
                ResidueElement::reduce(x, n) * ResidueElement::reduce(y, n));
      ASSERT_EQ(ResidueElement::reduce(x, n), ResidueElement::reduce(M(-1, 0, 0, -1) * x, n));
    }
  }
}

TEST(Properties, Gamma4CommutatorsLieInGamma16) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 1000; ++i) {
    auto h1 = random_gamma4_element(rng), h2 = random_gamma4_element(rng);
    ASSERT_TRUE(in_gamma(h1 * h2 * h1.inverse() * h2.inverse(), 16));
  }
}
