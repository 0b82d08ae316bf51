#include "dposet/poset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace dposet {

// ---- StrictOrder

StrictOrder::StrictOrder(int n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("poset too large");
  n_ = static_cast<std::uint8_t>(n);
}

StrictOrder StrictOrder::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  StrictOrder o(n);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("bad label");
    if (a == b) throw std::invalid_argument("not antisymmetric");
    o.up_[a - 1] |= std::uint16_t(1u << (b - 1));
  }
  o.close();
  return o;
}

StrictOrder StrictOrder::total(int n) {
  StrictOrder o(n);
  for (int i = 0; i < n; ++i) o.up_[i] = std::uint16_t(full_set(n) & ~full_set(i + 1));
  return o;
}

void StrictOrder::close() {
  // Warshall on bit rows
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (contains(up_[i], k)) up_[i] |= up_[k];
  for (int i = 0; i < n_; ++i)
    if (contains(up_[i], i)) throw std::invalid_argument("not antisymmetric");
}

VertexSet StrictOrder::below(int i) const {
  VertexSet s = 0;
  for (int j = 0; j < n_; ++j)
    if (contains(up_[j], i)) s |= VertexSet(1) << j;
  return s;
}

std::vector<std::pair<int, int>> StrictOrder::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (!less(i, j)) continue;
      // j covers i unless some k sits strictly between
      VertexSet between = up_[i] & below(j);
      if (between == 0) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::pair<int, int>> StrictOrder::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (less(i, j)) out.emplace_back(i, j);
  return out;
}

StrictOrder StrictOrder::restrict_to(VertexSet s) const {
  s &= full_set(n_);
  std::array<int, kMaxVertices> pos{};
  int m = 0;
  for (int i = 0; i < n_; ++i)
    if (contains(s, i)) pos[i] = m++;
  StrictOrder o(m);
  for (int i = 0; i < n_; ++i) {
    if (!contains(s, i)) continue;
    VertexSet row = up_[i] & s;
    std::uint16_t r = 0;
    for (int j = 0; j < n_; ++j)
      if (contains(row, j)) r |= std::uint16_t(1u << pos[j]);
    o.up_[pos[i]] = r;
  }
  return o;
}

StrictOrder StrictOrder::relabel(std::span<const int> new_label) const {
  StrictOrder o(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (less(i, j)) o.up_[new_label[i]] |= std::uint16_t(1u << new_label[j]);
  return o;
}

StrictOrder StrictOrder::disjoint_union(const StrictOrder& other) const {
  StrictOrder o(n_ + other.n_);
  for (int i = 0; i < n_; ++i) o.up_[i] = up_[i];
  for (int i = 0; i < other.n_; ++i) o.up_[n_ + i] = std::uint16_t(other.up_[i] << n_);
  return o;
}

bool StrictOrder::is_total() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!comparable(i, j)) return false;
  return true;
}

StrictOrder StrictOrder::inverse() const {
  StrictOrder o(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (less(i, j)) o.up_[j] |= std::uint16_t(1u << i);
  return o;
}

std::strong_ordering operator<=>(const StrictOrder& a, const StrictOrder& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int i = a.n_ - 1; i >= 0; --i)
    if (auto c = a.up_[i] <=> b.up_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---- DoublePoset / SpecialPoset

DoublePoset::DoublePoset(StrictOrder o1, StrictOrder o2) : o1_(std::move(o1)), o2_(std::move(o2)) {
  if (o1_.size() != o2_.size()) throw std::invalid_argument("orders of different sizes");
}

DoublePoset DoublePoset::from_pairs(int n, std::span<const std::pair<int, int>> o1,
                                    std::span<const std::pair<int, int>> o2) {
  return {StrictOrder::from_pairs(n, o1), StrictOrder::from_pairs(n, o2)};
}

bool DoublePoset::is_plane() const {
  int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (o1_.comparable(i, j) == o2_.comparable(i, j)) return false;
  return true;
}

SpecialPoset SpecialPoset::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  return SpecialPoset(StrictOrder::from_pairs(n, pairs));
}

// ---- families

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::DP, "DP"},
    {Family::SP, "SP"},
    {Family::HOP, "HOP"},
    {Family::OF, "OF"},
    {Family::HOF, "HOF"},
    {Family::SPP, "SPP"},
    {Family::SWNP, "SWNP"},
    {Family::SPF, "SPF"},
    {Family::PP, "PP"},
    {Family::WNP, "WNP"},
    {Family::PF, "PF"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (auto& [tag, name] : kFamilyNames)
    if (tag == f) return name;
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  std::string up;
  for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto& [tag, n] : kFamilyNames)
    if (n == up) return tag;
  return std::nullopt;
}

bool is_plane_family(Family f) { return f == Family::PP || f == Family::WNP || f == Family::PF; }

Family special_incarnation(Family f) {
  switch (f) {
    case Family::PP: return Family::SPP;
    case Family::WNP: return Family::SWNP;
    case Family::PF: return Family::SPF;
    default: return f;
  }
}

// ---- structural operations

namespace {

// rank of each vertex in a total order given as a StrictOrder
std::vector<int> ranks(const StrictOrder& total) {
  std::vector<int> r(total.size());
  for (int i = 0; i < total.size(); ++i) r[i] = std::popcount(total.below(i));
  return r;
}

StrictOrder union_order(const DoublePoset& p) {
  StrictOrder u(p.size());
  auto pairs1 = p.first().pairs();
  auto pairs2 = p.second().pairs();
  std::vector<std::pair<int, int>> all;
  for (auto [a, b] : pairs1) all.emplace_back(a + 1, b + 1);
  for (auto [a, b] : pairs2) all.emplace_back(a + 1, b + 1);
  return StrictOrder::from_pairs(p.size(), all);
}

}  // namespace

SpecialPoset as_special(const DoublePoset& p) {
  if (!p.second().is_total()) throw std::invalid_argument("second order is not total");
  auto r = ranks(p.second());
  return SpecialPoset(p.first().relabel(r));
}

DoublePoset compose(const DoublePoset& p, const DoublePoset& q) {
  StrictOrder o1 = p.first().disjoint_union(q.first());
  std::vector<std::pair<int, int>> pairs2;
  int a = p.size(), b = q.size();
  for (auto [i, j] : p.second().pairs()) pairs2.emplace_back(i + 1, j + 1);
  for (auto [i, j] : q.second().pairs()) pairs2.emplace_back(a + i + 1, a + j + 1);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) pairs2.emplace_back(i + 1, a + j + 1);
  return {o1, StrictOrder::from_pairs(a + b, pairs2)};
}

SpecialPoset compose(const SpecialPoset& p, const SpecialPoset& q) {
  return SpecialPoset(p.order().disjoint_union(q.order()));
}

std::vector<VertexSet> ideals(const StrictOrder& first) {
  int n = first.size();
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s <= full_set(n); ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (contains(s, i) && (first.above(i) & ~s)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

DoublePoset restrict_to(const DoublePoset& p, VertexSet s) {
  return {p.first().restrict_to(s), p.second().restrict_to(s)};
}

SpecialPoset restrict_to(const SpecialPoset& p, VertexSet s) {
  return SpecialPoset(p.order().restrict_to(s));
}

SpecialPoset induced_special(const DoublePoset& p) {
  if (!p.is_plane()) throw std::invalid_argument("induced order not total");
  StrictOrder u = union_order(p);
  if (!u.is_total()) throw std::invalid_argument("induced order not total");
  auto r = ranks(u);
  return SpecialPoset(p.first().relabel(r));
}

DoublePoset plane_from_special(const SpecialPoset& p) {
  if (!is_special_plane(p)) throw std::invalid_argument("not a special plane poset");
  int n = p.size();
  std::vector<std::pair<int, int>> r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!p.less(i, j)) r.emplace_back(i + 1, j + 1);
  return {p.order(), StrictOrder::from_pairs(n, r)};
}

DoublePoset iota(const DoublePoset& p) { return {p.second(), p.first()}; }

DoublePoset canonical_form(const DoublePoset& p) {
  int n = p.size();
  if (p.is_special()) {
    auto r = ranks(p.second());
    return {p.first().relabel(r), StrictOrder::total(n)};
  }
  if (p.is_plane()) {
    auto r = ranks(union_order(p));
    return {p.first().relabel(r), p.second().relabel(r)};
  }
  if (n > 8) throw std::invalid_argument("canonical form limited to 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  DoublePoset best = p;
  do {
    DoublePoset cand{p.first().relabel(perm), p.second().relabel(perm)};
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int kappa(const DoublePoset& p) {
  int n = p.size();
  if (n == 0) throw std::invalid_argument("empty poset");
  if (!p.is_plane()) throw std::invalid_argument("not plane");
  StrictOrder u = union_order(p);
  int best = -1;
  for (int y = 0; y < n; ++y) {
    bool ok = (u.below(y) & ~p.first().below(y)) == 0;
    if (ok && (best < 0 || u.less(best, y))) best = y;
  }
  return best;
}

SpecialPoset nwarrow(const SpecialPoset& p, const SpecialPoset& q) {
  if (p.size() == 0 || q.size() == 0) throw std::invalid_argument("nwarrow needs nonempty operands");
  int a = p.size(), n = a + q.size();
  int g = a - 1;
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : p.order().pairs()) pairs.emplace_back(i + 1, j + 1);
  for (auto [i, j] : q.order().pairs()) pairs.emplace_back(a + i + 1, a + j + 1);
  for (int x = 0; x < a; ++x) {
    if (x != g && !p.less(x, g)) continue;
    for (int y = a; y < n; ++y) pairs.emplace_back(x + 1, y + 1);
  }
  return SpecialPoset::from_pairs(n, pairs);
}

SpecialPoset b_plus(const SpecialPoset& forest) {
  if (!is_special_plane_forest(forest)) throw std::invalid_argument("B+ requires plane forest");
  int n = forest.size() + 1;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 2; j <= n; ++j) pairs.emplace_back(1, j);
  for (auto [i, j] : forest.order().pairs()) pairs.emplace_back(i + 2, j + 2);
  return SpecialPoset::from_pairs(n, pairs);
}

// ---- classification

bool is_heap_ordered(const SpecialPoset& p) {
  for (int i = 0; i < p.size(); ++i)
    if (p.order().below(i) & ~full_set(i)) return false;
  return true;
}

bool is_ordered_forest(const SpecialPoset& p) {
  // at most one lower cover, i.e. every principal down-set is a chain
  for (int x = 0; x < p.size(); ++x) {
    VertexSet b = p.order().below(x);
    for (int i = 0; i < p.size(); ++i)
      for (int j = i + 1; j < p.size(); ++j)
        if (contains(b, i) && contains(b, j) && !p.order().comparable(i, j)) return false;
  }
  return true;
}

bool is_special_plane(const SpecialPoset& p) {
  if (!is_heap_ordered(p)) return false;
  int n = p.size();
  // x <_r y iff x < y as labels and x, y not comparable; must be transitive
  auto r = [&](int x, int y) { return x < y && !p.order().comparable(x, y); };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!r(x, y)) continue;
      for (int z = y + 1; z < n; ++z)
        if (r(y, z) && !r(x, z)) return false;
    }
  return true;
}

namespace {

const SpecialPoset& pattern_reversed_chain() {
  static const SpecialPoset p = SpecialPoset::from_pairs(2, {{2, 1}});
  return p;
}
const SpecialPoset& pattern_skew_chain() {
  static const SpecialPoset p = SpecialPoset::from_pairs(3, {{1, 3}});
  return p;
}
const SpecialPoset& pattern_n_first() {
  static const SpecialPoset p = SpecialPoset::from_pairs(4, {{1, 2}, {1, 4}, {3, 4}});
  return p;
}
const SpecialPoset& pattern_n_second() {
  static const SpecialPoset p = SpecialPoset::from_pairs(4, {{1, 3}, {2, 3}, {2, 4}});
  return p;
}

// does some k-subset of p restrict to the pattern?
bool contains_pattern(const SpecialPoset& p, const SpecialPoset& pattern) {
  int n = p.size(), k = pattern.size();
  if (k > n) return false;
  for (VertexSet s = 0; s <= full_set(n); ++s)
    if (std::popcount(s) == k && restrict_to(p, s) == pattern) return true;
  return false;
}

}  // namespace

bool is_special_wn(const SpecialPoset& p) {
  return is_special_plane(p) && !contains_pattern(p, pattern_n_first()) &&
         !contains_pattern(p, pattern_n_second());
}

bool is_special_plane_forest(const SpecialPoset& p) {
  return is_ordered_forest(p) && is_special_plane(p);
}

bool heap_ordered_by_patterns(const SpecialPoset& p) {
  return !contains_pattern(p, pattern_reversed_chain());
}

bool special_plane_by_patterns(const SpecialPoset& p) {
  return !contains_pattern(p, pattern_reversed_chain()) && !contains_pattern(p, pattern_skew_chain());
}

bool in_family(const SpecialPoset& p, Family f) {
  switch (f) {
    case Family::DP:
    case Family::SP: return true;
    case Family::HOP: return is_heap_ordered(p);
    case Family::OF: return is_ordered_forest(p);
    case Family::HOF: return is_heap_ordered(p) && is_ordered_forest(p);
    case Family::SPP:
    case Family::PP: return is_special_plane(p);
    case Family::SWNP:
    case Family::WNP: return is_special_wn(p);
    case Family::SPF:
    case Family::PF: return is_special_plane_forest(p);
  }
  return false;
}

std::set<Family> classify(const DoublePoset& p) {
  std::set<Family> out;
  if (p.is_special()) {
    SpecialPoset s = as_special(p);
    out.insert(Family::SP);
    bool hop = is_heap_ordered(s), spp = is_special_plane(s);
    if (hop != heap_ordered_by_patterns(s) || spp != special_plane_by_patterns(s))
      throw std::logic_error("classification routes disagree");
    for (Family f : {Family::HOP, Family::OF, Family::HOF, Family::SPP, Family::SWNP, Family::SPF})
      if (in_family(s, f)) out.insert(f);
  }
  if (p.is_plane()) {
    SpecialPoset s = induced_special(p);
    out.insert(Family::PP);
    if (is_special_wn(s)) out.insert(Family::WNP);
    if (is_special_plane_forest(s)) out.insert(Family::PF);
  }
  return out;
}

// ---- enumeration

int enumeration_bound(Family f) {
  switch (special_incarnation(f)) {
    case Family::DP: return 0;
    case Family::SP: return 6;
    default: return 7;
  }
}

namespace {

std::vector<SpecialPoset> generate(Family f, int n) {
  std::vector<SpecialPoset> level{SpecialPoset()};
  bool heap = f != Family::SP && f != Family::OF;
  for (int k = 0; k < n; ++k) {
    std::vector<SpecialPoset> next;
    for (const auto& p : level) {
      const StrictOrder& o = p.order();
      VertexSet all = full_set(k);
      std::vector<VertexSet> downs, ups;
      for (VertexSet s = 0; s <= all; ++s) {
        bool down = true, up = true;
        for (int i = 0; i < k; ++i) {
          if (!contains(s, i)) continue;
          if (o.below(i) & ~s) down = false;
          if (o.above(i) & ~s) up = false;
        }
        if (down) downs.push_back(s);
        if (up && (!heap || s == 0)) ups.push_back(s);
      }
      for (VertexSet d : downs) {
        VertexSet common = all;
        for (int i = 0; i < k; ++i)
          if (contains(d, i)) common &= o.above(i);
        for (VertexSet u : ups) {
          if (u & ~common) continue;
          std::vector<std::pair<int, int>> pairs;
          for (auto [a, b] : o.covers()) pairs.emplace_back(a + 1, b + 1);
          for (int i = 0; i < k; ++i) {
            if (contains(d, i)) pairs.emplace_back(i + 1, k + 1);
            if (contains(u, i)) pairs.emplace_back(k + 1, i + 1);
          }
          SpecialPoset c = SpecialPoset::from_pairs(k + 1, pairs);
          if (in_family(c, f)) next.push_back(c);
        }
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace

const std::vector<SpecialPoset>& enumerate(Family f, int n) {
  f = special_incarnation(f);
  if (f == Family::DP) throw std::invalid_argument("family DP is not enumerable");
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > enumeration_bound(f)) throw std::invalid_argument("degree too large");
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::vector<SpecialPoset>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(f, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, generate(f, n)).first;
  return it->second;
}

std::vector<DoublePoset> enumerate_plane(Family f, int n) {
  if (!is_plane_family(f)) throw std::invalid_argument("not a plane family");
  std::vector<DoublePoset> out;
  for (const auto& s : enumerate(special_incarnation(f), n)) out.push_back(plane_from_special(s));
  return out;
}

}  // namespace dposet
