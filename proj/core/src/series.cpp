#include "dposet/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace dposet {

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k)
    for (int i = 0; i <= k; ++i) r[k] += a[i] * b[k - i];
  return r;
}

RatSeries RatSeries::inverse() const {
  if (c_.empty() || sgn(c_[0]) == 0) throw std::domain_error("zero constant term");
  RatSeries r(order());
  r[0] = 1 / c_[0];
  for (int k = 1; k <= order(); ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += c_[i] * r[k - i];
    r[k] = -acc / c_[0];
  }
  return r;
}

std::string to_string(const RatSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    const Rational& c = s[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (k == 0) {
      out += to_string(a);
      continue;
    }
    if (a != 1) out += to_string(a) + "*";
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

RatSeries poincare_series(Family f, int order) {
  RatSeries s(order);
  s[0] = 1;
  for (int n = 1; n <= order; ++n) s[n] = static_cast<long>(enumerate(f, n).size());
  return s;
}

RatSeries decoration_series(const RatSeries& f) {
  RatSeries one(f.order());
  one[0] = 1;
  RatSeries d = (f - one) * (f * f).inverse();
  for (const auto& c : d.coeffs())
    if (sgn(c) < 0 || c.get_den() != 1) throw std::domain_error("family not free-over-forests at this order");
  return d;
}

RatSeries decoration_counts(Family f, int order) { return decoration_series(poincare_series(f, order)); }

}  // namespace dposet
