#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dposet {

using Rational = mpq_class;
using Integer = mpz_class;

// a + b*I over the rationals
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}
  GaussRational(Rational re) : re_(std::move(re)) {}
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_real() const { return im_ == 0; }
  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  // throws std::domain_error on division by zero
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussRational& z) { return sgn(z.re()) == 0 && sgn(z.im()) == 0; }

std::string to_string(const Rational& q);
// "a/b+c/d*I"; purely real values print as rationals, purely imaginary as "c/d*I"
std::string to_string(const GaussRational& z);

// accepts "3", "-2/5"
Rational parse_rational(std::string_view text);
// accepts rationals, "I", "-I", "2*I", "2I", "1/2+3/4*I", "(1+2I)"
GaussRational parse_gauss(std::string_view text);

// exact conversion; throws std::domain_error if the value has an imaginary part
Rational real_part_exact(const GaussRational& z);

}  // namespace dposet
