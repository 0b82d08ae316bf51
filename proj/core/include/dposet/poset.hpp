#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dposet {

inline constexpr int kMaxVertices = 16;

// bit i set <=> vertex i (0-based) is in the set
using VertexSet = std::uint32_t;

inline VertexSet full_set(int n) { return n >= 32 ? ~VertexSet(0) : (VertexSet(1) << n) - 1; }
inline bool contains(VertexSet s, int i) { return (s >> i) & 1u; }

// Strict partial order on {0..n-1}, stored transitively closed as successor rows.
class StrictOrder {
 public:
  StrictOrder() = default;
  explicit StrictOrder(int n);

  // pairs are 1-based (a,b) meaning a<b; closure is taken.
  // throws std::invalid_argument "bad label" / "not antisymmetric"
  static StrictOrder from_pairs(int n, std::span<const std::pair<int, int>> pairs);
  // standard total order 0<1<...<n-1
  static StrictOrder total(int n);

  int size() const { return n_; }
  bool less(int i, int j) const { return contains(up_[i], j); }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  VertexSet above(int i) const { return up_[i]; }
  VertexSet below(int i) const;

  // covering pairs, 0-based, sorted
  std::vector<std::pair<int, int>> covers() const;
  // all pairs of the closure, 0-based, sorted
  std::vector<std::pair<int, int>> pairs() const;

  // induced order on s, vertices renumbered in increasing order
  StrictOrder restrict_to(VertexSet s) const;
  // old vertex i becomes new_label[i]
  StrictOrder relabel(std::span<const int> new_label) const;
  // this on {0..n-1}, o on {n..n+m-1}, no relation across
  StrictOrder disjoint_union(const StrictOrder& o) const;

  bool is_total() const;
  StrictOrder inverse() const;

  // n first, then successor rows compared from the last vertex to the first
  friend std::strong_ordering operator<=>(const StrictOrder& a, const StrictOrder& b);
  friend bool operator==(const StrictOrder& a, const StrictOrder& b) = default;

 private:
  friend class SpecialPoset;
  friend class DoublePoset;
  void close();  // transitive closure, throws if a cycle appears

  std::uint8_t n_ = 0;
  std::array<std::uint16_t, kMaxVertices> up_{};
};

class SpecialPoset;

class DoublePoset {
 public:
  DoublePoset() = default;
  DoublePoset(StrictOrder o1, StrictOrder o2);

  static DoublePoset from_pairs(int n, std::span<const std::pair<int, int>> o1,
                                std::span<const std::pair<int, int>> o2);

  int size() const { return o1_.size(); }
  const StrictOrder& first() const { return o1_; }
  const StrictOrder& second() const { return o2_; }

  bool is_special() const { return o2_.is_total(); }
  // distinct elements comparable for exactly one of the two orders
  bool is_plane() const;

  friend auto operator<=>(const DoublePoset&, const DoublePoset&) = default;
  friend bool operator==(const DoublePoset&, const DoublePoset&) = default;

 private:
  StrictOrder o1_, o2_;
};

// Special poset with labels 1..n forced by the total second order; the first order is stored.
class SpecialPoset {
 public:
  SpecialPoset() = default;
  explicit SpecialPoset(StrictOrder o1) : o1_(std::move(o1)) {}

  // 1-based covering (or closure) pairs of the first order
  static SpecialPoset from_pairs(int n, std::span<const std::pair<int, int>> pairs);
  static SpecialPoset from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_pairs(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }
  static SpecialPoset antichain(int n) { return SpecialPoset(StrictOrder(n)); }
  static SpecialPoset chain(int n) { return SpecialPoset(StrictOrder::total(n)); }

  int size() const { return o1_.size(); }
  const StrictOrder& order() const { return o1_; }
  bool less(int i, int j) const { return o1_.less(i, j); }

  DoublePoset to_double() const { return {o1_, StrictOrder::total(size())}; }

  friend auto operator<=>(const SpecialPoset&, const SpecialPoset&) = default;
  friend bool operator==(const SpecialPoset&, const SpecialPoset&) = default;

 private:
  StrictOrder o1_;
};

inline int degree(const SpecialPoset& p) { return p.size(); }
inline int degree(const DoublePoset& p) { return p.size(); }

// ---- families

enum class Family { DP, SP, HOP, OF, HOF, SPP, SWNP, SPF, PP, WNP, PF };

std::string_view family_name(Family f);
// case-insensitive
std::optional<Family> family_from_name(std::string_view name);
// plane families have a special-poset incarnation
bool is_plane_family(Family f);
Family special_incarnation(Family f);

// ---- structural operations

// the special poset P with labels ordered by its second order; throws if that order is not total
SpecialPoset as_special(const DoublePoset& p);

DoublePoset compose(const DoublePoset& p, const DoublePoset& q);
SpecialPoset compose(const SpecialPoset& p, const SpecialPoset& q);

// up-sets of the first order, in increasing order of their bitmask
std::vector<VertexSet> ideals(const StrictOrder& first);
inline std::vector<VertexSet> ideals(const DoublePoset& p) { return ideals(p.first()); }
inline std::vector<VertexSet> ideals(const SpecialPoset& p) { return ideals(p.order()); }

DoublePoset restrict_to(const DoublePoset& p, VertexSet s);
SpecialPoset restrict_to(const SpecialPoset& p, VertexSet s);

// (P, <=_h, <=) for a plane poset; throws "induced order not total"
SpecialPoset induced_special(const DoublePoset& p);
// inverse of induced_special on SPP: (P, <=_h, <=_r) with <=_r the complementary pairs
DoublePoset plane_from_special(const SpecialPoset& p);
DoublePoset iota(const DoublePoset& p);

// special: unchanged; plane: relabelled by the induced order; general: least relabelling (n <= 8)
DoublePoset canonical_form(const DoublePoset& p);

// 0-based vertex; throws "empty poset" / "not plane"
int kappa(const DoublePoset& p);

// x in P lies below every y in Q iff x <=_1 g_P
SpecialPoset nwarrow(const SpecialPoset& p, const SpecialPoset& q);
// new minimum grafted below a plane forest
SpecialPoset b_plus(const SpecialPoset& forest);

// ---- classification

bool is_heap_ordered(const SpecialPoset& p);
bool is_ordered_forest(const SpecialPoset& p);
bool is_special_plane(const SpecialPoset& p);
bool is_special_wn(const SpecialPoset& p);
bool is_special_plane_forest(const SpecialPoset& p);

// forbidden-subposet characterisations (independent code path)
bool heap_ordered_by_patterns(const SpecialPoset& p);
bool special_plane_by_patterns(const SpecialPoset& p);

bool in_family(const SpecialPoset& p, Family f);
std::set<Family> classify(const DoublePoset& p);

// canonically sorted members of f of cardinality n (plane families in special form)
const std::vector<SpecialPoset>& enumerate(Family f, int n);
// plane families only: the plane posets, in the order of enumerate(special_incarnation(f), n)
std::vector<DoublePoset> enumerate_plane(Family f, int n);
int enumeration_bound(Family f);

}  // namespace dposet
