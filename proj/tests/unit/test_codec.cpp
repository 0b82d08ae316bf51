#include "support.hpp"

#include "dposet/algebra.hpp"

using namespace dposet;
using namespace testing_support;

TEST(Codec, PosetRoundTrip) {
  for (Family f : {Family::SP, Family::HOP, Family::OF, Family::SPF})
    for (int n = 0; n <= 4; ++n)
      for (const auto& p : enumerate(f, n)) {
        EXPECT_EQ(parse_special(format(p)), p);
        EXPECT_EQ(canonical_form(parse_poset(format(p.to_double()))), p.to_double());
      }
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_plane(Family::PP, n)) EXPECT_EQ(canonical_form(parse_poset(format(p))), p);
}

TEST(Codec, PermutationRoundTrip) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& s : all_permutations(n)) EXPECT_EQ(parse_permutation(format(s)), s);
  Permutation big = perm("[10,3,2,1,4,5,6,7,8,9]");
  EXPECT_EQ(parse_permutation(format(big)), big);
}

TEST(Codec, LinearCombinations) {
  auto x = parse_lincomb<SpecialPoset>("3/2*SP(2;1<2) - SP(2;) + SP(2;1<2)");
  EXPECT_EQ(x.coeff(sp("SP(2;1<2)")), Rational(5, 2));
  EXPECT_EQ(x.coeff(sp("SP(2;)")), -1);
  EXPECT_EQ(parse_lincomb<SpecialPoset>(format(x)), x);
  auto z = parse_lincomb<SpecialPoset, GaussRational>("(1+2*I)*SP(1;)");
  EXPECT_EQ(z.coeff(sp("SP(1;)")), parse_gauss("1+2*I"));
  EXPECT_TRUE(parse_lincomb<SpecialPoset>("0").empty());
  EXPECT_EQ(lincomb_kind("12 + 21"), BasisKind::Permutation);
  EXPECT_THROW_MSG(lincomb_kind("12 + SP(2;)"), "mixed basis kinds");
  EXPECT_THROW_MSG(parse_lincomb<SpecialPoset>("I*SP(1;)"), "is not real");
}

TEST(Codec, Scalars) {
  EXPECT_EQ(to_string(parse_gauss("1/2-3/2*I")), "1/2-3/2*I");
  EXPECT_EQ(to_string(parse_gauss("-I")), "-I");
  EXPECT_EQ(to_string(GaussRational::i() * GaussRational::i()), "-1");
}
