#include "dposet/algebra.hpp"

#include <mutex>

namespace dposet {

DoublePoset basis_product(const DoublePoset& p, const DoublePoset& q) { return canonical_form(compose(p, q)); }

namespace {

template <class K>
Tensor2<K> split_by_ideals(const K& p, bool reduced) {
  Tensor2<K> out;
  VertexSet all = full_set(p.size());
  for (VertexSet i : ideals(p)) {
    if (reduced && (i == 0 || i == all)) continue;
    K low = restrict_to(p, all & ~i), high = restrict_to(p, i);
    if constexpr (std::is_same_v<K, DoublePoset>) {
      low = canonical_form(low);
      high = canonical_form(high);
    }
    out.add({low, high}, 1);
  }
  return out;
}

// backtracking over sigma(0), sigma(1), ... with both picture conditions checked pairwise
struct PictureCounter {
  const StrictOrder &p1, &p2, &q1, &q2;
  int n;
  std::array<int, kMaxVertices> sigma{};
  long count = 0;

  void run(int i, VertexSet used) {
    if (i == n) {
      ++count;
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (contains(used, t)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int s = sigma[j];
        if (p1.less(j, i) && !q2.less(s, t)) ok = false;
        else if (p1.less(i, j) && !q2.less(t, s)) ok = false;
        else if (q1.less(s, t) && !p2.less(j, i)) ok = false;
        else if (q1.less(t, s) && !p2.less(i, j)) ok = false;
      }
      if (!ok) continue;
      sigma[i] = t;
      run(i + 1, used | (VertexSet(1) << t));
    }
  }
};

long count_pictures(const StrictOrder& p1, const StrictOrder& p2, const StrictOrder& q1, const StrictOrder& q2) {
  if (p1.size() != q1.size()) return 0;
  PictureCounter c{p1, p2, q1, q2, p1.size()};
  c.run(0, 0);
  return c.count;
}

}  // namespace

HSP2 coproduct(const SpecialPoset& p) { return split_by_ideals(p, false); }
HSP2 reduced_coproduct(const SpecialPoset& p) { return split_by_ideals(p, true); }
HDP2 coproduct(const DoublePoset& p) { return split_by_ideals(p, false); }
HDP2 reduced_coproduct(const DoublePoset& p) { return split_by_ideals(p, true); }

long pairing_basis(const DoublePoset& p, const DoublePoset& q) {
  return count_pictures(p.first(), p.second(), q.first(), q.second());
}

long pairing_basis(const SpecialPoset& p, const SpecialPoset& q) {
  if (p.size() != q.size()) return 0;
  StrictOrder tot = StrictOrder::total(p.size());
  return count_pictures(p.order(), tot, q.order(), tot);
}

IntMatrix gram_matrix(Family f, int n) {
  if (is_plane_family(f)) {
    auto basis = enumerate_plane(f, n);
    IntMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) g(i, j) = g(j, i) = pairing_basis(basis[i], basis[j]);
    return g;
  }
  const auto& basis = enumerate(f, n);
  IntMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) g(i, j) = g(j, i) = pairing_basis(basis[i], basis[j]);
  return g;
}

// S(P) = -P - sum over nontrivial ideals of S(P \ I) I ; S(1) = 1
template <class K>
const LinComb<K>& antipode_basis(const K& p) {
  static std::recursive_mutex mu;
  static std::map<K, LinComb<K>> memo;
  std::lock_guard lock(mu);
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  LinComb<K> out;
  if (p.size() == 0) {
    out.add(p, 1);
  } else {
    out.add(p, -1);
    for (const auto& [t, c] : reduced_coproduct(p)) {
      LinComb<K> left = antipode_basis(t.first);
      LinComb<K> prod = lc_product(left, LinComb<K>(t.second));
      prod *= Rational(-c);
      out += prod;
    }
  }
  return memo.emplace(p, std::move(out)).first->second;
}

template const LinComb<SpecialPoset>& antipode_basis(const SpecialPoset&);
template const LinComb<DoublePoset>& antipode_basis(const DoublePoset&);

}  // namespace dposet
