#include "support.hpp"

#include "dposet/algebra.hpp"

#include <random>

using namespace dposet;
using namespace testing_support;

namespace {

HSP lc(const char* text) { return parse_lincomb<SpecialPoset>(text); }
HSP2 t2(const char* a, const char* b, long c = 1) {
  HSP2 out;
  out.add({sp(a), sp(b)}, c);
  return out;
}

}  // namespace

TEST(Product, Bilinear) {
  EXPECT_EQ(lc_product(lc("2*SP(1;)"), lc("SP(1;)")), lc("2*SP(2;)"));
  EXPECT_EQ(lc_product(lc("SP(1;) - SP(2;1<2)"), lc("SP(1;)")), lc("SP(2;) - SP(3;1<2)"));
}

TEST(Coproduct, Examples) {
  EXPECT_EQ(reduced_coproduct(sp("SP(3;1<2,1<3)")), t2("SP(2;1<2)", "SP(1;)", 2) + t2("SP(1;)", "SP(2;)"));
  EXPECT_TRUE(reduced_coproduct(sp("SP(1;)")).empty());
  EXPECT_EQ(reduced_coproduct(sp("SP(3;1<2,2<3)")), t2("SP(1;)", "SP(2;1<2)") + t2("SP(2;1<2)", "SP(1;)"));
  HSP2 full;
  full.add({SpecialPoset(), sp("SP(1;)")}, 1);
  full.add({sp("SP(1;)"), SpecialPoset()}, 1);
  EXPECT_EQ(coproduct(sp("SP(1;)")), full);
}

TEST(Coproduct, IdealCountOracle) {
  for (const auto& p : enumerate(Family::SP, 4)) {
    Rational total = 0;
    for (const auto& [k, c] : coproduct(p)) total += c;
    std::size_t brute = 0;
    oracle::Rel r = to_rel(p.order());
    for (int s = 0; s < 16; ++s) {
      bool up = true;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          if (r.lt[a][b] && (s >> a & 1) && !(s >> b & 1)) up = false;
      brute += up;
    }
    EXPECT_EQ(total, Rational(static_cast<long>(brute))) << format(p);
  }
}

TEST(Bialgebra, CoassociativeAndMultiplicative) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : enumerate(Family::SP, n)) {
      HSP2 d = coproduct(p);
      Tensor3<SpecialPoset> left, right;
      for (const auto& [ab, c] : d) {
        for (const auto& [xy, c2] : coproduct(ab.first)) left.add({xy.first, xy.second, ab.second}, c * c2);
        for (const auto& [xy, c2] : coproduct(ab.second)) right.add({ab.first, xy.first, xy.second}, c * c2);
      }
      EXPECT_EQ(left, right) << format(p);
    }
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 4; ++b)
      for (const auto& p : enumerate(Family::SP, a))
        for (const auto& q : enumerate(Family::SP, b)) {
          HSP2 lhs = coproduct(basis_product(p, q)), rhs;
          for (const auto& [x, cx] : coproduct(p))
            for (const auto& [y, cy] : coproduct(q))
              rhs.add({basis_product(x.first, y.first), basis_product(x.second, y.second)}, cx * cy);
          EXPECT_EQ(lhs, rhs);
        }
}

TEST(Pairing, PictureOracle) {
  for (int n = 1; n <= 3; ++n) {
    const auto& basis = enumerate(Family::SP, n);
    oracle::Rel tot = oracle::total(n);
    for (const auto& p : basis)
      for (const auto& q : basis)
        EXPECT_EQ(pairing_basis(p, q), oracle::pictures(to_rel(p.order()), tot, to_rel(q.order()), tot));
  }
  auto plane = enumerate_plane(Family::PP, 4);
  for (const auto& p : plane)
    for (const auto& q : plane)
      EXPECT_EQ(pairing_basis(p, q),
                oracle::pictures(to_rel(p.first()), to_rel(p.second()), to_rel(q.first()), to_rel(q.second())));
}

TEST(Pairing, GramTables) {
  IntMatrix sp2 = gram_matrix(Family::SP, 2);
  EXPECT_EQ(sp2, (IntMatrix{{2, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(gram_matrix(Family::SPP, 2), (IntMatrix{{2, 1}, {1, 1}}));
  EXPECT_EQ(gram_matrix(Family::PP, 2), (IntMatrix{{2, 1}, {1, 0}}));
}

TEST(Pairing, HopfDuality) {
  // <xy, z> = <x (x) y, Delta z> on a fixed-seed sample of degree-4 triples
  std::mt19937 rng(2024);
  const auto& b1 = enumerate(Family::SP, 1);
  const auto& b3 = enumerate(Family::SP, 3);
  const auto& b2 = enumerate(Family::SP, 2);
  const auto& b4 = enumerate(Family::SP, 4);
  for (int trial = 0; trial < 300; ++trial) {
    bool split13 = trial % 2;
    const auto& left = split13 ? b1 : b2;
    const auto& right = split13 ? b3 : b2;
    HSP x(left[rng() % left.size()]), y(right[rng() % right.size()]), z(b4[rng() % b4.size()]);
    EXPECT_EQ(pairing(lc_product(x, y), z), pairing(tensor(x, y), lc_coproduct(z)));
  }
}

TEST(Antipode, ConvolutionInverse) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate(Family::SP, n)) {
      HSP acc;
      for (const auto& [ab, c] : coproduct(p)) {
        HSP part = lc_product(antipode(HSP(ab.first)), HSP(ab.second));
        part *= c;
        acc += part;
      }
      EXPECT_TRUE(acc.empty()) << format(p);
    }
}

TEST(Pairing, DoublePosetProductDuality) {
  auto plane2 = enumerate_plane(Family::PP, 2);
  auto plane1 = enumerate_plane(Family::PP, 1);
  auto plane3 = enumerate_plane(Family::PP, 3);
  for (const auto& a : plane1)
    for (const auto& b : plane2)
      for (const auto& z : plane3) {
        HDP x(a), y(b), w(z);
        EXPECT_EQ(pairing(lc_product(x, y), w), pairing(tensor(x, y), lc_coproduct(w)));
      }
}
