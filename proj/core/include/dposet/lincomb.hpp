#pragma once

#include "dposet/scalar.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace dposet {

// Finitely supported map from an ordered basis to scalars; zero coefficients are never stored.
template <class Key, class Coeff = Rational>
class LinComb {
 public:
  using key_type = Key;
  using coeff_type = Coeff;
  using container = std::map<Key, Coeff>;

  LinComb() = default;
  explicit LinComb(Key k, Coeff c = Coeff(1)) { add(std::move(k), c); }

  void add(const Key& k, const Coeff& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Coeff& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Coeff(-1); }
  friend LinComb operator*(const Coeff& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  container terms_;
};

template <class Key, class Coeff = Rational>
using Tensor2 = LinComb<std::pair<Key, Key>, Coeff>;

template <class Key, class Coeff = Rational>
using Tensor3 = LinComb<std::tuple<Key, Key, Key>, Coeff>;

// sum over terms of c * f(key), f returning a LinComb
template <class Out, class Key, class Coeff, class F>
Out linear_map(const LinComb<Key, Coeff>& x, F&& f) {
  Out out;
  for (const auto& [k, c] : x) {
    Out img = f(k);
    img *= c;
    out += img;
  }
  return out;
}

template <class Out, class K1, class K2, class Coeff, class F>
Out bilinear_map(const LinComb<K1, Coeff>& x, const LinComb<K2, Coeff>& y, F&& f) {
  Out out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Out img = f(a, b);
      img *= Coeff(ca * cb);
      out += img;
    }
  return out;
}

// a (x) b on basis terms, extended bilinearly
template <class K, class C>
Tensor2<K, C> tensor(const LinComb<K, C>& a, const LinComb<K, C>& b) {
  Tensor2<K, C> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add({x, y}, C(cx * cy));
  return out;
}

template <class K, class C>
Tensor3<K, C> tensor(const Tensor2<K, C>& a, const LinComb<K, C>& b) {
  Tensor3<K, C> out;
  for (const auto& [xy, c1] : a)
    for (const auto& [z, c2] : b) out.add({xy.first, xy.second, z}, C(c1 * c2));
  return out;
}

template <class K, class C>
Tensor3<K, C> tensor(const LinComb<K, C>& a, const Tensor2<K, C>& b) {
  Tensor3<K, C> out;
  for (const auto& [x, c1] : a)
    for (const auto& [yz, c2] : b) out.add({x, yz.first, yz.second}, C(c1 * c2));
  return out;
}

// (f (x) id) and (id (x) f) on Tensor2, producing Tensor3
template <class K, class C, class F>
Tensor3<K, C> apply_left(const Tensor2<K, C>& t, F&& f) {
  Tensor3<K, C> out;
  for (const auto& [ab, c] : t) {
    Tensor2<K, C> img = f(ab.first);
    for (const auto& [xy, d] : img) out.add({xy.first, xy.second, ab.second}, C(c * d));
  }
  return out;
}

template <class K, class C, class F>
Tensor3<K, C> apply_right(const Tensor2<K, C>& t, F&& f) {
  Tensor3<K, C> out;
  for (const auto& [ab, c] : t) {
    Tensor2<K, C> img = f(ab.second);
    for (const auto& [xy, d] : img) out.add({ab.first, xy.first, xy.second}, C(c * d));
  }
  return out;
}

// swap the two tensor factors
template <class K, class C>
Tensor2<K, C> flip(const Tensor2<K, C>& t) {
  Tensor2<K, C> out;
  for (const auto& [ab, c] : t) out.add({ab.second, ab.first}, c);
  return out;
}

// product of tensors componentwise: (a (x) b)(c (x) d) = ac (x) bd, given a basis product
template <class K, class C, class Mul>
Tensor2<K, C> tensor_product(const Tensor2<K, C>& s, const Tensor2<K, C>& t, Mul&& mul) {
  Tensor2<K, C> out;
  for (const auto& [ab, c1] : s)
    for (const auto& [cd, c2] : t) {
      LinComb<K, C> l = mul(ab.first, cd.first);
      LinComb<K, C> r = mul(ab.second, cd.second);
      for (const auto& [x, cx] : l)
        for (const auto& [y, cy] : r) out.add({x, y}, C(c1 * c2 * cx * cy));
    }
  return out;
}

template <class K>
LinComb<K, GaussRational> to_gauss(const LinComb<K, Rational>& x) {
  LinComb<K, GaussRational> out;
  for (const auto& [k, c] : x) out.add(k, GaussRational(c));
  return out;
}

}  // namespace dposet
