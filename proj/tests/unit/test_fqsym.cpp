#include "support.hpp"

#include "dposet/fqsym.hpp"

#include <random>

using namespace dposet;
using namespace testing_support;

namespace {

FQ fq(const char* text) { return parse_lincomb<Permutation>(text); }

FQ2 t2(const char* a, const char* b) {
  FQ2 out;
  auto side = [](const char* s) { return *s ? perm(s) : Permutation(); };
  out.add({side(a), side(b)}, 1);
  return out;
}

}  // namespace

TEST(Shuffle, Examples) {
  EXPECT_EQ(shuffle_product(perm("1"), perm("1")), fq("12 + 21"));
  EXPECT_EQ(shuffle_product(perm("132"), perm("21")),
            fq("13254+13524+15324+51324+13542+15342+51342+15432+51432+54132"));
  EXPECT_EQ(shuffle_product(perm("12"), perm("1")), fq("123+132+312"));
}

TEST(Shuffle, MatchesOracle) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& s : all_permutations(a))
        for (const auto& t : all_permutations(b)) {
          std::multiset<oracle::Word> got;
          for (const auto& u : shuffles(s, t)) got.insert(to_word(u));
          EXPECT_EQ(got, oracle::shuffle(to_word(s), to_word(t)));
        }
}

TEST(Coproduct, Examples) {
  FQ2 expected = t2("", "41325") + t2("1", "1324") + t2("21", "213") + t2("312", "12") + t2("4132", "1") +
                 t2("41325", "");
  EXPECT_EQ(fq_coproduct(perm("41325")), expected);
  EXPECT_EQ(fq_coproduct(perm("1")), t2("", "1") + t2("1", ""));
  EXPECT_EQ(fq_coproduct(perm("21")), t2("", "21") + t2("1", "1") + t2("21", ""));
}

TEST(Standardize, Examples) {
  std::vector<int> a{4, 1, 3}, b{2, 5}, c{1, 3, 2, 5};
  EXPECT_EQ(standardize(a), perm("312"));
  EXPECT_EQ(standardize(b), perm("12"));
  EXPECT_EQ(standardize(c), perm("1324"));
}

TEST(Pairing, IsInverseDelta) {
  for (const auto& s : all_permutations(4))
    for (const auto& t : all_permutations(4)) EXPECT_EQ(fq_pairing(s, t), s.inverse() == t ? 1 : 0);
}

TEST(Pairing, HopfDuality) {
  std::mt19937 rng(11);
  auto s3 = all_permutations(3), s1 = all_permutations(1), s4 = all_permutations(4);
  for (int trial = 0; trial < 200; ++trial) {
    FQ x(s1[0]), y(s3[rng() % s3.size()]), z(s4[rng() % s4.size()]);
    Rational lhs = fq_pairing(fq_product(x, y), z), rhs = 0;
    for (const auto& [ab, c] : fq_coproduct(z.begin()->first))
      rhs += c * fq_pairing(x.begin()->first, ab.first) * fq_pairing(y.begin()->first, ab.second);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(WeakOrder, MatchesOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : all_permutations(n)) {
      std::set<oracle::Word> got;
      for (const auto& s : weak_interval_down(t)) got.insert(to_word(s));
      EXPECT_EQ(got, oracle::weak_down(to_word(t)));
    }
  for (const auto& s : all_permutations(4))
    for (const auto& t : all_permutations(4)) {
      auto down = oracle::weak_down(to_word(t));
      EXPECT_EQ(weak_order_leq(s, t), down.count(to_word(s)) > 0);
    }
}

TEST(Nwarrow, Examples) {
  EXPECT_EQ(fq_nwarrow(perm("123"), perm("12")), fq("12345"));
  EXPECT_EQ(fq_nwarrow(perm("132"), perm("12")), fq("13245+13425+13452"));
  EXPECT_EQ(fq_nwarrow(perm("312"), perm("12")), fq("31245+31425+31452+34125+34152+34512"));
}

TEST(Dendriform, HalvesSumToReducedCoproduct) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : all_permutations(n)) {
      auto [a, b] = fq_dendriform_coproducts(s);
      EXPECT_EQ(a + b, fq_reduced_coproduct(s));
    }
}

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation(std::vector<int>{1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
  EXPECT_EQ(perm("[10,3,2,1,4,5,6,7,8,9]").size(), 10);
}
