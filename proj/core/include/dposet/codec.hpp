#pragma once

#include "dposet/fqsym.hpp"
#include "dposet/lincomb.hpp"
#include "dposet/poset.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace dposet {

// Literals:
//   SP(n; a<b, c<d)             first order by covering (or closure) pairs, labels are ranks
//   PP(n; h: a<b,...; r: ...)    plane poset
//   DP(n; o1: ...; o2: ...)      general double poset
//   41325 or [10,3,...]          permutation; [] is the empty one
DoublePoset parse_poset(std::string_view text);
SpecialPoset parse_special(std::string_view text);
Permutation parse_permutation(std::string_view text);

std::string format(const SpecialPoset& p);
// SP form when the second order is the standard total order, PP form when plane, DP otherwise
std::string format(const DoublePoset& p);
std::string format(const Permutation& p);

enum class BasisKind { Special, Double, Permutation };
// kind of a single basis literal, from its prefix
BasisKind basis_kind(std::string_view literal);
// common kind of all terms; throws "mixed basis kinds"
BasisKind lincomb_kind(std::string_view text);

struct RawTerm {
  GaussRational coeff;
  std::string basis;
};
// split "3/2*SP(2;1<2) - SP(2;) + (1+2I)*SP(2;2<1)" into terms; "0" is the empty sum
std::vector<RawTerm> split_lincomb(std::string_view text);

template <class K>
K parse_basis(std::string_view text) {
  if constexpr (std::is_same_v<K, SpecialPoset>)
    return parse_special(text);
  else if constexpr (std::is_same_v<K, DoublePoset>)
    return parse_poset(text);
  else
    return parse_permutation(text);
}

template <class K>
constexpr BasisKind kind_of() {
  if constexpr (std::is_same_v<K, SpecialPoset>)
    return BasisKind::Special;
  else if constexpr (std::is_same_v<K, DoublePoset>)
    return BasisKind::Double;
  else
    return BasisKind::Permutation;
}

template <class K, class C = Rational>
LinComb<K, C> parse_lincomb(std::string_view text) {
  LinComb<K, C> out;
  for (auto& t : split_lincomb(text)) {
    if (basis_kind(t.basis) != kind_of<K>()) throw std::invalid_argument("mixed basis kinds");
    if constexpr (std::is_same_v<C, Rational>)
      out.add(parse_basis<K>(t.basis), real_part_exact(t.coeff));
    else
      out.add(parse_basis<K>(t.basis), t.coeff);
  }
  return out;
}

std::string format_coeff_prefix(const Rational& c, bool leading);
std::string format_coeff_prefix(const GaussRational& c, bool leading);

template <class Key, class C, class F>
std::string format_terms(const LinComb<Key, C>& x, F&& fmt) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    out += format_coeff_prefix(c, first);
    out += fmt(k);
    first = false;
  }
  return out;
}

template <class K, class C>
std::string format(const LinComb<K, C>& x) {
  return format_terms(x, [](const K& k) { return format(k); });
}

template <class K, class C>
std::string format(const Tensor2<K, C>& x) {
  return format_terms(x, [](const std::pair<K, K>& k) { return format(k.first) + " (x) " + format(k.second); });
}

template <class K, class C>
std::string format(const Tensor3<K, C>& x) {
  return format_terms(x, [](const std::tuple<K, K, K>& k) {
    return format(std::get<0>(k)) + " (x) " + format(std::get<1>(k)) + " (x) " + format(std::get<2>(k));
  });
}

}  // namespace dposet
