#include "support.hpp"

#include "dposet/series.hpp"

using namespace dposet;

namespace {

RatSeries series(std::vector<long> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return RatSeries(q);
}

std::vector<Rational> head(const RatSeries& s, int from, int to) {
  return std::vector<Rational>(s.coeffs().begin() + from, s.coeffs().begin() + to + 1);
}

std::vector<Rational> q(std::vector<long> c) { return {c.begin(), c.end()}; }

}  // namespace

TEST(Series, Arithmetic) {
  EXPECT_EQ(series({1, -1, 0, 0}).inverse(), series({1, 1, 1, 1}));
  EXPECT_EQ(series({1, 1, 0}) * series({1, -1, 0}), series({1, 0, -1}));
  EXPECT_EQ(series({1, 2, 7, 44}).inverse(), series({1, -2, -3, -24}));
  EXPECT_EQ((series({1, 2}) + series({0, 1, 5})).order(), 1);
  EXPECT_THROW_MSG(series({0, 1}).inverse(), "zero constant term");
  EXPECT_EQ(to_string(series({0, 1, 1, 10})), "x + x^2 + 10*x^3");
}

TEST(Series, DecorationTable) {
  EXPECT_EQ(head(decoration_counts(Family::SP, 5), 1, 5), q({1, 1, 10, 148, 3336}));
  EXPECT_EQ(head(decoration_counts(Family::OF, 5), 1, 5), q({1, 1, 7, 66, 786}));
  EXPECT_EQ(head(decoration_counts(Family::HOF, 5), 1, 5), q({1, 0, 1, 6, 39}));
  EXPECT_EQ(head(decoration_counts(Family::SWNP, 5), 1, 5), q({1, 0, 1, 4, 17}));
  EXPECT_EQ(head(decoration_counts(Family::SPF, 4), 1, 4), q({1, 0, 0, 0}));
}

TEST(Series, PoincareCounts) {
  EXPECT_EQ(head(poincare_series(Family::SP, 5), 0, 5), q({1, 1, 3, 19, 219, 4231}));
  EXPECT_EQ(head(poincare_series(Family::SPP, 5), 0, 5), q({1, 1, 2, 6, 24, 120}));
}

TEST(Series, RejectsNonFreeSeries) {
  EXPECT_THROW(decoration_series(series({1, 3, 0})), std::domain_error);
}
