#pragma once

// Brute-force reference computations. Nothing here calls the library's
// algorithms; inputs and outputs are plain relation matrices and words.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

constexpr int kMax = 8;

// strict order as a boolean matrix, 0-based vertices
struct Rel {
  int n = 0;
  std::array<std::array<bool, kMax>, kMax> lt{};
  bool operator<(const Rel& o) const { return std::tie(n, lt) < std::tie(o.n, o.lt); }
  bool operator==(const Rel& o) const { return n == o.n && lt == o.lt; }
};

using Word = std::vector<int>;  // 1-based letters

inline bool is_strict_order(const Rel& r) {
  for (int i = 0; i < r.n; ++i) {
    if (r.lt[i][i]) return false;
    for (int j = 0; j < r.n; ++j)
      for (int k = 0; k < r.n; ++k)
        if (r.lt[i][j] && r.lt[j][k] && !r.lt[i][k]) return false;
  }
  return true;
}

// every strict order on n labelled points, by scanning all relations
inline std::vector<Rel> all_strict_orders(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<Rel> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    Rel r;
    r.n = n;
    bool ok = true;
    for (std::size_t b = 0; b < slots.size() && ok; ++b)
      if (mask >> b & 1) {
        auto [i, j] = slots[b];
        if (r.lt[j][i]) ok = false;
        r.lt[i][j] = true;
      }
    if (ok && is_strict_order(r)) out.push_back(r);
  }
  return out;
}

inline Rel total(int n) {
  Rel r;
  r.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r.lt[i][j] = true;
  return r;
}

inline bool is_cover(const Rel& r, int a, int b) {
  if (!r.lt[a][b]) return false;
  for (int c = 0; c < r.n; ++c)
    if (r.lt[a][c] && r.lt[c][b]) return false;
  return true;
}

inline int lower_covers(const Rel& r, int v) {
  int k = 0;
  for (int u = 0; u < r.n; ++u) k += is_cover(r, u, v);
  return k;
}

// heap-ordered: a < b forces label a < label b
inline bool heap_ordered(const Rel& r) {
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j)
      if (r.lt[i][j] && i > j) return false;
  return true;
}

// rooted forest with roots at the bottom
inline bool ordered_forest(const Rel& r) {
  for (int v = 0; v < r.n; ++v)
    if (lower_covers(r, v) > 1) return false;
  return true;
}

// double poset (h, r) is plane iff distinct points are comparable in exactly one order
inline bool plane(const Rel& h, const Rel& r) {
  for (int i = 0; i < h.n; ++i)
    for (int j = i + 1; j < h.n; ++j) {
      int k = (h.lt[i][j] || h.lt[j][i]) + (r.lt[i][j] || r.lt[j][i]);
      if (k != 1) return false;
    }
  return true;
}

inline std::vector<Word> permutations(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// words listing the vertices (1-based) with every a <_1 b written a before b; found by scanning n!
inline std::vector<Word> linear_extensions(const Rel& r) {
  std::vector<Word> out;
  for (const auto& w : permutations(r.n)) {
    std::vector<int> pos(r.n);
    for (int p = 0; p < r.n; ++p) pos[w[p] - 1] = p;
    bool ok = true;
    for (int a = 0; a < r.n && ok; ++a)
      for (int b = 0; b < r.n && ok; ++b)
        if (r.lt[a][b] && pos[a] > pos[b]) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

// pictures between (p1, p2) and (q1, q2): bijections s with
// x <_1 y => s(x) <_2 s(y) and s(x) <_1 s(y) => x <_2 y
inline long pictures(const Rel& p1, const Rel& p2, const Rel& q1, const Rel& q2) {
  if (p1.n != q1.n) return 0;
  int n = p1.n;
  long count = 0;
  for (const auto& w : permutations(n)) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int sx = w[x] - 1, sy = w[y] - 1;
        if (p1.lt[x][y] && !q2.lt[sx][sy]) ok = false;
        if (q1.lt[sx][sy] && !p2.lt[x][y]) ok = false;
      }
    count += ok;
  }
  return count;
}

// h: i<j and s(i)<s(j); r: i<j and s(i)>s(j)
inline std::pair<Rel, Rel> phi(const Word& s) {
  Rel h, r;
  h.n = r.n = static_cast<int>(s.size());
  for (int i = 0; i < h.n; ++i)
    for (int j = i + 1; j < h.n; ++j) (s[i] < s[j] ? h : r).lt[i][j] = true;
  return {h, r};
}

// all interleavings of s with t shifted by |s|
inline std::multiset<Word> shuffle(const Word& s, const Word& t) {
  int k = static_cast<int>(s.size()), l = static_cast<int>(t.size());
  std::multiset<Word> out;
  for (unsigned mask = 0; mask < (1u << (k + l)); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Word w;
    int a = 0, b = 0;
    for (int p = 0; p < k + l; ++p) w.push_back(mask >> p & 1 ? s[a++] : t[b++] + k);
    out.insert(w);
  }
  return out;
}

// right weak order down-set of t: repeatedly swap adjacent descents
inline std::set<Word> weak_down(const Word& t) {
  std::set<Word> seen{t};
  std::vector<Word> todo{t};
  while (!todo.empty()) {
    Word w = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        Word v = w;
        std::swap(v[i], v[i + 1]);
        if (seen.insert(v).second) todo.push_back(v);
      }
  }
  return seen;
}

// Laplace expansion
inline long det(const std::vector<std::vector<long>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    long term = m[0][c] * det(minor);
    out += c % 2 ? -term : term;
  }
  return out;
}

}  // namespace oracle
