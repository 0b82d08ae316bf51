#include "dposet/morphisms.hpp"

#include "dposet/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dposet {

std::vector<Permutation> linear_extensions(const SpecialPoset& p) {
  int n = p.size();
  std::vector<Permutation> out;
  std::vector<int> word;
  word.reserve(n);
  // vertices are placed in increasing label order among the minimal ones, so output is sorted
  auto rec = [&](auto&& self, VertexSet used) -> void {
    if (static_cast<int>(word.size()) == n) {
      out.emplace_back(word);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (contains(used, v)) continue;
      if (p.order().below(v) & ~used) continue;
      word.push_back(v + 1);
      self(self, used | (VertexSet(1) << v));
      word.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

FQ theta(const SpecialPoset& p) {
  FQ out;
  for (const auto& s : linear_extensions(p)) out.add(s, 1);
  return out;
}

namespace {

std::map<Permutation, std::size_t> permutation_index(int n) {
  std::map<Permutation, std::size_t> idx;
  for (const auto& s : all_permutations(n)) idx.emplace(s, idx.size());
  return idx;
}

}  // namespace

IntMatrix theta_matrix(Family f, int n) {
  const auto& basis = enumerate(f, n);
  auto idx = permutation_index(n);
  IntMatrix m(idx.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& s : linear_extensions(basis[c])) m(idx.at(s), c) = 1;
  return m;
}

DoublePoset phi(const Permutation& s) {
  int n = s.size();
  std::vector<std::pair<int, int>> h, r;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) (s(i) < s(j) ? h : r).emplace_back(i, j);
  return DoublePoset::from_pairs(n, h, r);
}

SpecialPoset phi_special(const Permutation& s) { return SpecialPoset(phi(s).first()); }

Permutation psi(const DoublePoset& p) {
  if (!p.is_plane()) throw std::invalid_argument("not plane");
  DoublePoset c = canonical_form(p);
  int n = c.size();
  std::vector<int> word(n, 0);
  VertexSet alive = full_set(n);
  for (int m = n; m >= 1; --m) {
    int local = kappa(restrict_to(c, alive));
    // local index counts alive vertices in increasing order
    int v = -1;
    for (int seen = -1; seen < local;)
      if (contains(alive, ++v)) ++seen;
    word[v] = m;
    alive &= ~(VertexSet(1) << v);
  }
  return Permutation(word);
}

Permutation psi(const SpecialPoset& p) { return psi(plane_from_special(p)); }

// ---- inverse of theta on heap-ordered forests

namespace {

struct HofSystem {
  std::vector<SpecialPoset> basis;
  std::map<Permutation, std::size_t> index;
  RatMatrix inverse;
};

const HofSystem& hof_system(int n) {
  static std::mutex mu;
  static std::map<int, HofSystem> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  HofSystem sys;
  sys.basis = enumerate(Family::HOF, n);
  sys.index = permutation_index(n);
  sys.inverse = inverse(theta_matrix(Family::HOF, n).cast<Rational>());
  return cache.emplace(n, std::move(sys)).first->second;
}

}  // namespace

int theta_hof_bound() { return 5; }

LinComb<SpecialPoset> theta_hof_inverse(const FQ& y) {
  std::map<int, FQ> by_degree;
  for (const auto& [s, c] : y) by_degree[s.size()].add(s, c);
  LinComb<SpecialPoset> out;
  for (const auto& [n, part] : by_degree) {
    if (n > theta_hof_bound()) throw std::invalid_argument("degree too large");
    const HofSystem& sys = hof_system(n);
    for (std::size_t r = 0; r < sys.basis.size(); ++r) {
      Rational acc = 0;
      for (const auto& [s, c] : part) acc += sys.inverse(r, sys.index.at(s)) * c;
      out.add(sys.basis[r], acc);
    }
  }
  return out;
}

LinComb<SpecialPoset> upsilon(const SpecialPoset& p) { return theta_hof_inverse(theta(p)); }

LinComb<SpecialPoset> upsilon(const LinComb<SpecialPoset>& x) { return theta_hof_inverse(theta(x)); }

// ---- rewriting

std::vector<RewriteSite> rewrite_sites(const SpecialPoset& p) {
  std::vector<RewriteSite> one, two;
  auto covers = p.order().covers();
  for (auto [a, b] : covers)
    if (a > b) one.push_back({1, b + 1, a + 1, 0});
  int n = p.size();
  for (int k = 0; k < n; ++k) {
    std::vector<int> low;
    for (auto [a, b] : covers)
      if (b == k) low.push_back(a);
    for (std::size_t x = 0; x < low.size(); ++x)
      for (std::size_t y = x + 1; y < low.size(); ++y) {
        int i = std::min(low[x], low[y]), j = std::max(low[x], low[y]);
        if (j < k) two.push_back({2, i + 1, j + 1, k + 1});
      }
  }
  std::sort(one.begin(), one.end());
  std::sort(two.begin(), two.end());
  one.insert(one.end(), two.begin(), two.end());
  return one;
}

LinComb<SpecialPoset> rewrite_at(const SpecialPoset& p, const RewriteSite& site) {
  auto covers = p.order().covers();
  std::vector<std::pair<int, int>> base;
  for (auto [a, b] : covers) base.emplace_back(a + 1, b + 1);
  auto without = [&](std::initializer_list<std::pair<int, int>> drop, std::initializer_list<std::pair<int, int>> add) {
    std::vector<std::pair<int, int>> r;
    for (auto e : base)
      if (std::find(drop.begin(), drop.end(), e) == drop.end()) r.push_back(e);
    r.insert(r.end(), add.begin(), add.end());
    return SpecialPoset::from_pairs(p.size(), r);
  };
  auto has = [&](int a, int b) { return std::find(base.begin(), base.end(), std::make_pair(a, b)) != base.end(); };
  LinComb<SpecialPoset> out;
  int i = site.i, j = site.j, k = site.k;
  if (site.rule == 1) {
    if (!(i < j && has(j, i))) throw std::invalid_argument("not a rewrite site");
    out.add(without({{j, i}}, {}), 1);
    out.add(without({{j, i}}, {{i, j}}), -1);
  } else {
    if (!(i < j && j < k && has(i, k) && has(j, k))) throw std::invalid_argument("not a rewrite site");
    out.add(without({{j, k}}, {}), 1);
    out.add(without({{j, k}}, {{i, j}}), -1);
    out.add(without({{j, k}, {i, k}}, {{i, j}, {j, k}}), 1);
  }
  return out;
}

LinComb<SpecialPoset> rewrite_step(const SpecialPoset& p) {
  auto sites = rewrite_sites(p);
  if (sites.empty()) throw std::invalid_argument("already a heap-ordered forest");
  return rewrite_at(p, sites.front());
}

LinComb<SpecialPoset> rewrite_exhaustively(const LinComb<SpecialPoset>& x, const SiteChooser& choose, long fuel) {
  LinComb<SpecialPoset> cur = x;
  for (;;) {
    auto it = std::find_if(cur.begin(), cur.end(), [](const auto& t) { return !rewrite_sites(t.first).empty(); });
    if (it == cur.end()) return cur;
    if (fuel-- <= 0) throw std::runtime_error("rewriting fuel exhausted");
    SpecialPoset p = it->first;
    Rational c = it->second;
    auto sites = rewrite_sites(p);
    std::size_t pick = choose(sites);
    if (pick >= sites.size()) throw std::out_of_range("site chooser out of range");
    LinComb<SpecialPoset> img = rewrite_at(p, sites[pick]);
    img *= c;
    cur.add(p, -c);
    cur += img;
  }
}

// ---- kernels and intervals

std::vector<LinComb<SpecialPoset>> pairing_kernel_basis(Family f, int n) {
  const auto& basis = enumerate(f, n);
  bool via_theta = f == Family::SP || f == Family::HOP || f == Family::OF;
  RankKernel rk = via_theta ? rank_kernel(theta_matrix(f, n)) : rank_kernel(gram_matrix(f, n));
  std::vector<LinComb<SpecialPoset>> out;
  for (const auto& v : rk.kernel) {
    LinComb<SpecialPoset> x;
    for (std::size_t i = 0; i < v.size(); ++i) x.add(basis[i], v[i]);
    out.push_back(std::move(x));
  }
  return out;
}

bool bruhat_interval_check(const SpecialPoset& p) {
  if (!is_special_plane(p)) throw std::invalid_argument("not a special plane poset");
  auto ext = linear_extensions(p);
  auto down = weak_interval_down(psi(p).inverse());
  std::sort(down.begin(), down.end());
  return ext == down;
}

std::optional<Permutation> find_interval_top(const SpecialPoset& p) {
  auto ext = linear_extensions(p);
  for (const auto& t : ext) {
    auto down = weak_interval_down(t);
    std::sort(down.begin(), down.end());
    if (down == ext) return t;
  }
  return std::nullopt;
}

}  // namespace dposet
