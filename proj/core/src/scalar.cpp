#include "dposet/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace dposet {

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  Rational d = o.norm();
  if (sgn(d) == 0) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussRational& z) {
  if (sgn(z.im()) == 0) return z.re().get_str();
  std::string imag;
  if (z.im() == 1)
    imag = "I";
  else if (z.im() == -1)
    imag = "-I";
  else
    imag = z.im().get_str() + "*I";
  if (sgn(z.re()) == 0) return imag;
  std::string out = z.re().get_str();
  if (imag[0] != '-') out += '+';
  return out + imag;
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool valid_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool digits = false, slash = false, den = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || den);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (!valid_rational(s)) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s, 10);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

GaussRational parse_gauss(std::string_view text) {
  std::string s = strip(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  GaussRational out;
  // split into signed summands at top-level +/- (not the leading sign)
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != '+' && s[i] != '-') continue;
    if (i < s.size() && s[i - 1] == '/') continue;
    std::string part = s.substr(start, i - start);
    start = i;
    bool imaginary = !part.empty() && part.back() == 'I';
    if (imaginary) {
      part.pop_back();
      if (!part.empty() && part.back() == '*') part.pop_back();
      if (part.empty() || part == "+") part = "1";
      if (part == "-") part = "-1";
      out += GaussRational(Rational(0), parse_rational(part));
    } else {
      out += GaussRational(parse_rational(part));
    }
  }
  return out;
}

Rational real_part_exact(const GaussRational& z) {
  if (!z.is_real()) throw std::domain_error("value " + to_string(z) + " is not real");
  return z.re();
}

}  // namespace dposet
