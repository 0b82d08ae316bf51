#pragma once

#include "dposet/poset.hpp"
#include "dposet/scalar.hpp"

#include <string>
#include <vector>

namespace dposet {

// c_0 + c_1 x + ... + c_N x^N, exact through order N
class RatSeries {
 public:
  RatSeries() = default;
  explicit RatSeries(int order) : c_(order + 1, Rational(0)) {}
  RatSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  Rational& operator[](int k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // result truncated to the smaller order
  friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  friend bool operator==(const RatSeries&, const RatSeries&) = default;

  // throws "zero constant term"
  RatSeries inverse() const;

 private:
  std::vector<Rational> c_;
};

// "1 + x - 3/2*x^2"
std::string to_string(const RatSeries& s);

// c_n = |enumerate(f, n)|
RatSeries poincare_series(Family f, int order);

// D = (F - 1) / F^2; throws "family not free-over-forests at this order" on a negative or fractional coefficient
RatSeries decoration_series(const RatSeries& f);
RatSeries decoration_counts(Family f, int order);

}  // namespace dposet
