#include "dposet/fqsym.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dposet {

Permutation::Permutation(std::vector<int> word) {
  int n = static_cast<int>(word.size());
  if (n > 255) throw std::invalid_argument("permutation too long");
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  word_.assign(word.begin(), word.end());
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(size());
  for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("degree mismatch");
  std::vector<int> w(size());
  for (int i = 0; i < size(); ++i) w[i] = word_[other.word_[i] - 1];
  return Permutation(std::move(w));
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated letters");
  std::vector<int> w;
  for (int v : word) w.push_back(int(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return Permutation(std::move(w));
}

std::vector<Permutation> shuffles(const Permutation& s, const Permutation& t) {
  int k = s.size(), l = t.size(), n = k + l;
  std::vector<Permutation> out;
  // choose the positions of the letters of s
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> w(n);
    int a = 0, b = 0;
    for (int i = 0; i < n; ++i) w[i] = mask[i] ? s.word()[a++] : t.word()[b++] + k;
    out.emplace_back(std::move(w));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

FQ shuffle_product(const Permutation& s, const Permutation& t) {
  FQ out;
  for (auto& p : shuffles(s, t)) out.add(p, 1);
  return out;
}

namespace {

std::pair<Permutation, Permutation> cut(const Permutation& s, int k) {
  std::vector<int> a(s.word().begin(), s.word().begin() + k);
  std::vector<int> b(s.word().begin() + k, s.word().end());
  return {standardize(a), standardize(b)};
}

}  // namespace

FQ2 fq_coproduct(const Permutation& s) {
  FQ2 out;
  for (int k = 0; k <= s.size(); ++k) out.add(cut(s, k), 1);
  return out;
}

FQ2 fq_reduced_coproduct(const Permutation& s) {
  FQ2 out;
  for (int k = 1; k < s.size(); ++k) out.add(cut(s, k), 1);
  return out;
}

int fq_pairing(const Permutation& s, const Permutation& t) { return s == t.inverse() ? 1 : 0; }

std::vector<std::pair<int, int>> inversion_set(const Permutation& s) {
  std::vector<std::pair<int, int>> out;
  auto pos = s.inverse();
  for (int a = 1; a <= s.size(); ++a)
    for (int b = a + 1; b <= s.size(); ++b)
      if (pos(a) > pos(b)) out.emplace_back(a, b);
  return out;
}

bool weak_order_leq(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("degree mismatch");
  auto is = inversion_set(s), it = inversion_set(t);
  return std::includes(it.begin(), it.end(), is.begin(), is.end());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> weak_interval_down(const Permutation& t) {
  std::vector<Permutation> out;
  for (auto& s : all_permutations(t.size()))
    if (weak_order_leq(s, t)) out.push_back(s);
  return out;
}

FQ fq_nwarrow(const Permutation& s, const Permutation& t) {
  if (s.size() == 0 || t.size() == 0) throw std::invalid_argument("nwarrow needs nonempty operands");
  int k = s.size();
  FQ out;
  for (auto& p : shuffles(s, t)) {
    // letters of t occupy values > k; none may appear before the letter k
    bool ok = true;
    for (int i = 1; i <= p.size() && ok; ++i) {
      if (p(i) == k) break;
      if (p(i) > k) ok = false;
    }
    if (ok) out.add(p, 1);
  }
  return out;
}

std::pair<FQ2, FQ2> fq_dendriform_coproducts(const Permutation& s) {
  int n = s.size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  int m = s.inverse()(n);
  FQ2 prec, succ;
  for (int k = m; k <= n - 1; ++k) prec.add(cut(s, k), 1);
  for (int k = 1; k <= m - 1; ++k) succ.add(cut(s, k), 1);
  return {prec, succ};
}

}  // namespace dposet
