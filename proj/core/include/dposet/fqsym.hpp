#pragma once

#include "dposet/lincomb.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dposet {

// sigma(1)...sigma(n) stored 1-based
class Permutation {
 public:
  Permutation() = default;
  // throws std::invalid_argument unless the word is a permutation of 1..n
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  // 1-based position, 1-based value
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<std::uint8_t>& word() const { return word_; }

  Permutation inverse() const;
  // (this o other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> word_;
};

inline int degree(const Permutation& p) { return p.size(); }

using FQ = LinComb<Permutation>;
using FQ2 = Tensor2<Permutation>;

// order-isomorphic permutation of a word with distinct letters; throws on repeats
Permutation standardize(std::span<const int> word);

// sum over (k,l)-shuffles of sigma and shifted tau
std::vector<Permutation> shuffles(const Permutation& s, const Permutation& t);
FQ shuffle_product(const Permutation& s, const Permutation& t);
FQ2 fq_coproduct(const Permutation& s);
FQ2 fq_reduced_coproduct(const Permutation& s);
int fq_pairing(const Permutation& s, const Permutation& t);

// value-pair inversions (a,b), a<b, with a written after b
std::vector<std::pair<int, int>> inversion_set(const Permutation& s);
// right weak order; throws on degree mismatch
bool weak_order_leq(const Permutation& s, const Permutation& t);
std::vector<Permutation> weak_interval_down(const Permutation& t);

// shuffles whose letters from shifted t all come after the maximal letter of s
FQ fq_nwarrow(const Permutation& s, const Permutation& t);
// (Delta_prec, Delta_succ), cut at or after the position of n vs before it
std::pair<FQ2, FQ2> fq_dendriform_coproducts(const Permutation& s);

std::vector<Permutation> all_permutations(int n);

template <class C>
LinComb<Permutation, C> fq_product(const LinComb<Permutation, C>& x, const LinComb<Permutation, C>& y) {
  LinComb<Permutation, C> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& s : shuffles(a, b)) out.add(s, C(ca * cb));
  return out;
}

template <class C>
C fq_pairing(const LinComb<Permutation, C>& x, const LinComb<Permutation, C>& y) {
  C out(0);
  for (const auto& [a, ca] : x) {
    C cb = y.coeff(a.inverse());
    if (!is_zero(cb)) out += C(ca * cb);
  }
  return out;
}

}  // namespace dposet
