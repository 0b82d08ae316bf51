#pragma once

#include "dposet/lincomb.hpp"
#include "dposet/matrix.hpp"
#include "dposet/poset.hpp"

#include <map>

namespace dposet {

using HSP = LinComb<SpecialPoset>;
using HSP2 = Tensor2<SpecialPoset>;
using HDP = LinComb<DoublePoset>;
using HDP2 = Tensor2<DoublePoset>;

// ---- basis level

// product and coproducts on double posets return canonical forms
DoublePoset basis_product(const DoublePoset& p, const DoublePoset& q);
inline SpecialPoset basis_product(const SpecialPoset& p, const SpecialPoset& q) { return compose(p, q); }

HSP2 coproduct(const SpecialPoset& p);
HSP2 reduced_coproduct(const SpecialPoset& p);
HDP2 coproduct(const DoublePoset& p);
HDP2 reduced_coproduct(const DoublePoset& p);

// number of pictures between P and Q (0 when sizes differ)
long pairing_basis(const DoublePoset& p, const DoublePoset& q);
long pairing_basis(const SpecialPoset& p, const SpecialPoset& q);

// [<P_i, P_j>] over enumerate(f, n); plane families use their plane-poset incarnation
IntMatrix gram_matrix(Family f, int n);

// ---- linear extensions

template <class K, class C>
LinComb<K, C> lc_product(const LinComb<K, C>& x, const LinComb<K, C>& y) {
  LinComb<K, C> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(basis_product(a, b), C(ca * cb));
  return out;
}

template <class K, class C>
Tensor2<K, C> lc_coproduct(const LinComb<K, C>& x) {
  Tensor2<K, C> out;
  for (const auto& [a, ca] : x)
    for (const auto& [t, ct] : coproduct(a)) out.add(t, C(ca * ct));
  return out;
}

template <class K, class C>
Tensor2<K, C> lc_reduced_coproduct(const LinComb<K, C>& x) {
  Tensor2<K, C> out;
  for (const auto& [a, ca] : x)
    for (const auto& [t, ct] : reduced_coproduct(a)) out.add(t, C(ca * ct));
  return out;
}

template <class K, class C>
C pairing(const LinComb<K, C>& x, const LinComb<K, C>& y) {
  C out(0);
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      long v = pairing_basis(a, b);
      if (v) out += C(ca * cb) * C(v);
    }
  return out;
}

// <a (x) b, c (x) d> = <a,c><b,d>
template <class K, class C>
C pairing(const Tensor2<K, C>& x, const Tensor2<K, C>& y) {
  C out(0);
  for (const auto& [ab, c1] : x)
    for (const auto& [cd, c2] : y) {
      long v = pairing_basis(ab.first, cd.first) * pairing_basis(ab.second, cd.second);
      if (v) out += C(c1 * c2) * C(v);
    }
  return out;
}

// coefficient of the empty poset
template <class K, class C>
C counit(const LinComb<K, C>& x) {
  return x.coeff(K());
}

template <class K>
const LinComb<K>& antipode_basis(const K& p);

template <class K, class C>
LinComb<K, C> antipode(const LinComb<K, C>& x) {
  LinComb<K, C> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : antipode_basis(a)) out.add(b, C(ca * C(cb)));
  return out;
}

}  // namespace dposet
