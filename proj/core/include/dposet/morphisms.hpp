#pragma once

#include "dposet/algebra.hpp"
#include "dposet/fqsym.hpp"
#include "dposet/matrix.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace dposet {

// all sigma with x_i <_1 x_j => sigma^-1(i) < sigma^-1(j), sorted
std::vector<Permutation> linear_extensions(const SpecialPoset& p);

FQ theta(const SpecialPoset& p);

template <class C>
LinComb<Permutation, C> theta(const LinComb<SpecialPoset, C>& x) {
  LinComb<Permutation, C> out;
  for (const auto& [p, c] : x)
    for (const auto& s : linear_extensions(p)) out.add(s, c);
  return out;
}

// rows: all_permutations(n); columns: enumerate(f, n)
IntMatrix theta_matrix(Family f, int n);

// i <_h j iff i<j and s(i)<s(j); i <_r j iff i<j and s(i)>s(j)
DoublePoset phi(const Permutation& s);
// (P, <=_h, <=), already labelled by the induced order
SpecialPoset phi_special(const Permutation& s);
// throws "not plane"
Permutation psi(const DoublePoset& p);
// throws "not a special plane poset"
Permutation psi(const SpecialPoset& p);

// inverse of theta restricted to span(HOF); degree <= theta_hof_bound()
LinComb<SpecialPoset> theta_hof_inverse(const FQ& y);
int theta_hof_bound();

LinComb<SpecialPoset> upsilon(const SpecialPoset& p);
LinComb<SpecialPoset> upsilon(const LinComb<SpecialPoset>& x);

// ---- rewriting towards heap-ordered forests

struct RewriteSite {
  int rule = 1;
  // 1-based labels; rule 1 uses (j, i) with j covering-below i, rule 2 uses i < j < k
  int i = 0, j = 0, k = 0;
  friend auto operator<=>(const RewriteSite&, const RewriteSite&) = default;
};

// rule 1 sites first, each group in lexicographic order
std::vector<RewriteSite> rewrite_sites(const SpecialPoset& p);
LinComb<SpecialPoset> rewrite_at(const SpecialPoset& p, const RewriteSite& site);
// first site; throws "already a heap-ordered forest"
LinComb<SpecialPoset> rewrite_step(const SpecialPoset& p);

// picks an index into the site list
using SiteChooser = std::function<std::size_t(const std::vector<RewriteSite>&)>;
// rewrite until every term is a heap-ordered forest; throws "rewriting fuel exhausted"
LinComb<SpecialPoset> rewrite_exhaustively(const LinComb<SpecialPoset>& x, const SiteChooser& choose,
                                           long fuel = 100000);

// SP, HOP, OF: kernel of theta; other families: radical of the Gram matrix.
// Vectors are primitive integer combinations of enumerate(f, n).
std::vector<LinComb<SpecialPoset>> pairing_kernel_basis(Family f, int n);

// S_P equals the weak-order interval below psi(P)^-1; throws "not a special plane poset"
bool bruhat_interval_check(const SpecialPoset& p);
// tau with S_P = {s <= tau}, if any
std::optional<Permutation> find_interval_top(const SpecialPoset& p);

}  // namespace dposet
