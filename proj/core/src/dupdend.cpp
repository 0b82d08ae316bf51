#include "dposet/dupdend.hpp"

#include "dposet/codec.hpp"
#include "dposet/fqsym.hpp"
#include "dposet/linalg.hpp"
#include "dposet/morphisms.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dposet {

namespace {

std::pair<HSP2, HSP2> split_by_vertex(const SpecialPoset& p, int v) {
  HSP2 outside, inside;
  VertexSet all = full_set(p.size());
  for (VertexSet i : ideals(p)) {
    if (i == 0 || i == all) continue;
    std::pair<SpecialPoset, SpecialPoset> term{restrict_to(p, all & ~i), restrict_to(p, i)};
    (contains(i, v) ? inside : outside).add(term, 1);
  }
  return {outside, inside};
}

void require_positive(const HSP& x) {
  for (const auto& [p, c] : x)
    if (p.size() == 0) throw std::invalid_argument("degree-0 term present");
}

void require_family(const HSP& x, Family f, const char* msg) {
  require_positive(x);
  for (const auto& [p, c] : x)
    if (!in_family(p, f)) throw std::invalid_argument(msg);
}

}  // namespace

std::pair<HSP2, HSP2> dendriform_coproducts(const SpecialPoset& p) {
  if (p.size() == 0) throw std::invalid_argument("degree-0 term present");
  return split_by_vertex(p, p.size() - 1);
}

std::pair<HSP2, HSP2> dendriform_coproducts_prime(const SpecialPoset& p) {
  if (p.size() == 0) throw std::invalid_argument("degree-0 term present");
  return split_by_vertex(p, 0);
}

const HSP& spf_prec_basis(const SpecialPoset& f, const SpecialPoset& g) {
  if (f.size() == 0 || g.size() == 0) throw std::invalid_argument("degree-0 term present");
  if (!is_special_plane_forest(f) || !is_special_plane_forest(g)) throw std::invalid_argument("support outside SPF");
  static std::recursive_mutex mu;
  static std::map<std::pair<SpecialPoset, SpecialPoset>, HSP> memo;
  std::lock_guard lock(mu);
  auto key = std::make_pair(f, g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  HSP out;
  VertexSet all = full_set(f.size());
  VertexSet first_tree = f.order().above(0) | 1u;
  if (first_tree == all) {
    out.add(b_plus(compose(restrict_to(f, all & ~1u), g)), 1);
  } else {
    SpecialPoset t = restrict_to(f, first_tree), rest = restrict_to(f, all & ~first_tree);
    if (!(compose(t, rest) == f)) throw std::logic_error("first tree is not a left factor");
    out += spf_prec_basis(t, compose(rest, g));
    for (const auto& [k, c] : spf_prec_basis(rest, g)) {
      HSP s = spf_succ_basis(t, k);
      s *= c;
      out += s;
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

HSP spf_succ_basis(const SpecialPoset& f, const SpecialPoset& g) {
  HSP out(compose(f, g));
  out -= spf_prec_basis(f, g);
  return out;
}

HSP sp_nwarrow(const HSP& x, const HSP& y) {
  require_positive(x);
  require_positive(y);
  return bilinear_map<HSP>(x, y, [](const SpecialPoset& a, const SpecialPoset& b) { return HSP(nwarrow(a, b)); });
}

std::pair<HSP2, HSP2> sp_dendriform_coproducts(const HSP& x) {
  require_positive(x);
  HSP2 l, r;
  for (const auto& [p, c] : x) {
    auto [a, b] = dendriform_coproducts(p);
    a *= c;
    b *= c;
    l += a;
    r += b;
  }
  return {l, r};
}

std::pair<HSP2, HSP2> spp_dendriform_coproducts(const HSP& x) {
  require_family(x, Family::SPP, "support outside SPP");
  HSP2 l, r;
  for (const auto& [p, c] : x) {
    auto [a, b] = dendriform_coproducts_prime(p);
    a *= c;
    b *= c;
    l += a;
    r += b;
  }
  return {l, r};
}

HSP spf_prec(const HSP& x, const HSP& y) {
  require_family(x, Family::SPF, "support outside SPF");
  require_family(y, Family::SPF, "support outside SPF");
  return bilinear_map<HSP>(x, y, [](const SpecialPoset& a, const SpecialPoset& b) { return spf_prec_basis(a, b); });
}

HSP spf_succ(const HSP& x, const HSP& y) {
  require_family(x, Family::SPF, "support outside SPF");
  require_family(y, Family::SPF, "support outside SPF");
  return bilinear_map<HSP>(x, y, spf_succ_basis);
}

std::vector<HSP> prim_tot_basis(int n) {
  if (n < 1) return {};
  const auto& basis = enumerate(Family::SPF, n);
  std::map<std::pair<int, std::pair<SpecialPoset, SpecialPoset>>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto [l, r] = dendriform_coproducts_prime(basis[j]);
    int tag = 0;
    for (const HSP2* part : {&l, &r}) {
      for (const auto& [t, c] : *part) {
        auto key = std::make_pair(tag, t);
        auto it = rows.try_emplace(key, rows.size()).first;
        cols[j].emplace_back(it->second, c);
      }
      ++tag;
    }
  }
  RatMatrix m(rows.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (auto& [i, c] : cols[j]) m(i, j) += c;
  std::vector<HSP> out;
  for (const auto& v : rank_kernel(m).kernel) {
    HSP x;
    for (std::size_t j = 0; j < v.size(); ++j) x.add(basis[j], v[j]);
    out.push_back(std::move(x));
  }
  return out;
}

// ---- axiom suites

namespace {

template <class K>
using L = LinComb<K>;
template <class K>
using T = Tensor2<K>;

template <class K>
struct Ops {
  std::function<const std::vector<K>&(int)> basis;
  std::function<L<K>(const K&, const K&)> mul, nw, prec, succ;
  std::function<T<K>(const K&)> red, dp, ds;
};

template <class K>
L<K> id(const K& k) {
  return L<K>(k);
}

// sum of c * f(a) (x) g(b) over the terms a (x) b of t
template <class K, class F, class G>
T<K> each(const T<K>& t, F&& f, G&& g) {
  T<K> out;
  for (const auto& [ab, c] : t) {
    T<K> part = tensor(L<K>(f(ab.first)), L<K>(g(ab.second)));
    part *= c;
    out += part;
  }
  return out;
}

// sum of f(a,c) (x) g(b,d) over a (x) b in s and c (x) d in t
template <class K, class F, class G>
T<K> cross(const T<K>& s, const T<K>& t, F&& f, G&& g) {
  T<K> out;
  for (const auto& [ab, c1] : s)
    for (const auto& [cd, c2] : t) {
      T<K> part = tensor(L<K>(f(ab.first, cd.first)), L<K>(g(ab.second, cd.second)));
      part *= Rational(c1 * c2);
      out += part;
    }
  return out;
}

template <class K, class F>
L<K> lift(const L<K>& x, const L<K>& y, F&& f) {
  return bilinear_map<L<K>>(x, y, f);
}

template <class K, class F>
T<K> lift(const L<K>& x, F&& f) {
  return linear_map<T<K>>(x, f);
}

template <class K>
T<K> simple(const K& a, const K& b) {
  return T<K>(std::make_pair(a, b));
}

// when set, only the tuple whose literals match is evaluated
thread_local const std::vector<std::string>* only_tuple = nullptr;

template <class... K>
bool selected(const K&... k) {
  if (!only_tuple) return true;
  std::vector<std::string> args{format(k)...};
  return args == *only_tuple;
}

struct Recorder {
  AxiomReport& report;

  template <class V>
  void eq(const char* axiom, std::vector<std::string> args, const V& lhs, const V& rhs) {
    if (lhs == rhs) return;
    report.violations.push_back({axiom, std::move(args), format(lhs), format(rhs)});
  }
  void eq_scalar(const char* axiom, std::vector<std::string> args, const Rational& lhs, const Rational& rhs) {
    if (lhs == rhs) return;
    report.violations.push_back({axiom, std::move(args), to_string(lhs), to_string(rhs)});
  }
};

template <class K, class F>
void for_singles(const Ops<K>& ops, int max, AxiomReport& r, F&& f) {
  for (int a = 1; a <= max; ++a)
    for (const K& x : ops.basis(a)) {
      if (!selected(x)) continue;
      ++r.tuples_checked;
      f(x);
    }
}

template <class K, class F>
void for_pairs(const Ops<K>& ops, int max, AxiomReport& r, F&& f) {
  for (int a = 1; a < max; ++a)
    for (int b = 1; a + b <= max; ++b)
      for (const K& x : ops.basis(a))
        for (const K& y : ops.basis(b)) {
          if (!selected(x, y)) continue;
          ++r.tuples_checked;
          f(x, y);
        }
}

template <class K, class F>
void for_triples(const Ops<K>& ops, int max, AxiomReport& r, F&& f) {
  for (int a = 1; a + 2 <= max; ++a)
    for (int b = 1; a + b + 1 <= max; ++b)
      for (int c = 1; a + b + c <= max; ++c)
        for (const K& x : ops.basis(a))
          for (const K& y : ops.basis(b))
            for (const K& z : ops.basis(c)) {
              if (!selected(x, y, z)) continue;
              ++r.tuples_checked;
              f(x, y, z);
            }
}

template <class K>
void check_duplicial(const Ops<K>& o, int max, AxiomReport& r) {
  Recorder rec{r};
  for_triples(o, max, r, [&](const K& x, const K& y, const K& z) {
    std::vector<std::string> args{format(x), format(y), format(z)};
    L<K> xy = o.mul(x, y), yz = o.mul(y, z), xny = o.nw(x, y), ynz = o.nw(y, z);
    rec.eq("duplicial.product-assoc", args, lift(xy, id(z), o.mul), lift(id(x), yz, o.mul));
    rec.eq("duplicial.nwarrow-assoc", args, lift(xny, id(z), o.nw), lift(id(x), ynz, o.nw));
    rec.eq("duplicial.mixed-assoc", args, lift(xy, id(z), o.nw), lift(id(x), ynz, o.mul));
  });
}

template <class K>
void check_codendriform(const Ops<K>& o, int max, AxiomReport& r, const char* tag) {
  Recorder rec{r};
  std::string a1 = std::string(tag) + ".1", a2 = std::string(tag) + ".2", a3 = std::string(tag) + ".3";
  for_singles(o, max, r, [&](const K& x) {
    std::vector<std::string> args{format(x)};
    T<K> l = o.dp(x), s = o.ds(x);
    rec.eq(a1.c_str(), args, apply_left(l, o.dp), apply_right(l, o.red));
    rec.eq(a2.c_str(), args, apply_left(l, o.ds), apply_right(s, o.dp));
    rec.eq(a3.c_str(), args, apply_left(s, o.red), apply_right(s, o.ds));
  });
}

template <class K>
void check_dupdend_compat(const Ops<K>& o, int max, AxiomReport& r) {
  Recorder rec{r};
  auto mul = [&](const K& a, const K& b) { return o.mul(a, b); };
  auto nw = [&](const K& a, const K& b) { return o.nw(a, b); };
  for_pairs(o, max, r, [&](const K& x, const K& y) {
    std::vector<std::string> args{format(x), format(y)};
    auto xl = [&](const K& a) { return o.mul(x, a); };
    auto yr = [&](const K& a) { return o.mul(a, y); };
    auto xnl = [&](const K& a) { return o.nw(x, a); };
    auto ynr = [&](const K& a) { return o.nw(a, y); };
    T<K> rx = o.red(x), lx = o.dp(x), sx = o.ds(x), ly = o.dp(y), sy = o.ds(y);
    L<K> xy = o.mul(x, y), xny = o.nw(x, y);

    T<K> rhs = simple(y, x) + each(ly, id<K>, xl) + each(ly, xl, id<K>) + each(rx, yr, id<K>) + cross(rx, ly, mul, mul);
    rec.eq("compat.product-prec", args, lift(xy, o.dp), rhs);
    rhs = simple(x, y) + each(sy, xl, id<K>) + each(sy, id<K>, xl) + each(rx, id<K>, yr) + cross(rx, sy, mul, mul);
    rec.eq("compat.product-succ", args, lift(xy, o.ds), rhs);
    rhs = each(ly, xnl, id<K>) + each(lx, ynr, id<K>) + cross(lx, ly, nw, mul);
    rec.eq("compat.nwarrow-prec", args, lift(xny, o.dp), rhs);
    rhs = simple(x, y) + each(sy, xnl, id<K>) + each(sx, id<K>, ynr) + each(lx, id<K>, yr) + cross(lx, sy, nw, mul);
    rec.eq("compat.nwarrow-succ", args, lift(xny, o.ds), rhs);
  });
}

// product against the primed coproducts
template <class K>
void check_codendriform_product(const Ops<K>& o, int max, AxiomReport& r) {
  Recorder rec{r};
  auto mul = [&](const K& a, const K& b) { return o.mul(a, b); };
  for_pairs(o, max, r, [&](const K& x, const K& y) {
    std::vector<std::string> args{format(x), format(y)};
    auto xl = [&](const K& a) { return o.mul(x, a); };
    auto yr = [&](const K& a) { return o.mul(a, y); };
    T<K> lx = o.dp(x), sx = o.ds(x), ry = o.red(y);
    L<K> xy = o.mul(x, y);
    T<K> rhs = simple(x, y) + each(lx, yr, id<K>) + each(lx, id<K>, yr) + each(ry, xl, id<K>) + cross(lx, ry, mul, mul);
    rec.eq("codendriform.product-prec", args, lift(xy, o.dp), rhs);
    rhs = simple(y, x) + each(sx, yr, id<K>) + each(sx, id<K>, yr) + each(ry, id<K>, xl) + cross(sx, ry, mul, mul);
    rec.eq("codendriform.product-succ", args, lift(xy, o.ds), rhs);
  });
}

template <class K>
void check_dendriform_hopf(const Ops<K>& o, int max, AxiomReport& r) {
  Recorder rec{r};
  auto mul = [&](const K& a, const K& b) { return o.mul(a, b); };
  auto prec = [&](const K& a, const K& b) { return o.prec(a, b); };
  auto succ = [&](const K& a, const K& b) { return o.succ(a, b); };
  for_pairs(o, max, r, [&](const K& x, const K& y) {
    std::vector<std::string> args{format(x), format(y)};
    auto xl = [&](const K& a) { return o.mul(x, a); };
    auto yr = [&](const K& a) { return o.mul(a, y); };
    auto xpl = [&](const K& a) { return o.prec(x, a); };
    auto ypr = [&](const K& a) { return o.prec(a, y); };
    auto xsl = [&](const K& a) { return o.succ(x, a); };
    auto ysr = [&](const K& a) { return o.succ(a, y); };
    T<K> rx = o.red(x), ry = o.red(y);
    T<K> rhs = simple(x, y) + each(ry, xpl, id<K>) + each(rx, id<K>, yr) + each(rx, ypr, id<K>) + cross(rx, ry, prec, mul);
    rec.eq("dendriform-hopf.prec", args, lift(o.prec(x, y), o.red), rhs);
    rhs = simple(y, x) + each(ry, xsl, id<K>) + each(ry, id<K>, xl) + each(rx, ysr, id<K>) + cross(rx, ry, succ, mul);
    rec.eq("dendriform-hopf.succ", args, lift(o.succ(x, y), o.red), rhs);
  });
}

// o.dp / o.ds are the primed coproducts
template <class K>
void check_bidendriform(const Ops<K>& o, int max, AxiomReport& r) {
  Recorder rec{r};
  auto mul = [&](const K& a, const K& b) { return o.mul(a, b); };
  auto prec = [&](const K& a, const K& b) { return o.prec(a, b); };
  auto succ = [&](const K& a, const K& b) { return o.succ(a, b); };
  for_pairs(o, max, r, [&](const K& x, const K& y) {
    std::vector<std::string> args{format(x), format(y)};
    auto xl = [&](const K& a) { return o.mul(x, a); };
    auto yr = [&](const K& a) { return o.mul(a, y); };
    auto xpl = [&](const K& a) { return o.prec(x, a); };
    auto ypr = [&](const K& a) { return o.prec(a, y); };
    auto xsl = [&](const K& a) { return o.succ(x, a); };
    auto ysr = [&](const K& a) { return o.succ(a, y); };
    T<K> lx = o.dp(x), sx = o.ds(x), ry = o.red(y);
    L<K> p = o.prec(x, y), s = o.succ(x, y);
    T<K> rhs = simple(x, y) + each(ry, xpl, id<K>) + each(lx, id<K>, yr) + each(lx, ypr, id<K>) + cross(lx, ry, prec, mul);
    rec.eq("bidendriform.prec-prec", args, lift(p, o.dp), rhs);
    rhs = each(sx, id<K>, yr) + each(sx, ypr, id<K>) + cross(sx, ry, prec, mul);
    rec.eq("bidendriform.prec-succ", args, lift(p, o.ds), rhs);
    rhs = each(lx, ysr, id<K>) + each(ry, xsl, id<K>) + cross(lx, ry, succ, mul);
    rec.eq("bidendriform.succ-prec", args, lift(s, o.dp), rhs);
    rhs = simple(y, x) + each(ry, id<K>, xl) + each(sx, ysr, id<K>) + cross(sx, ry, succ, mul);
    rec.eq("bidendriform.succ-succ", args, lift(s, o.ds), rhs);
  });
}

template <class K>
void check_dendriform_algebra(const Ops<K>& o, int max, AxiomReport& r) {
  Recorder rec{r};
  for_triples(o, max, r, [&](const K& x, const K& y, const K& z) {
    std::vector<std::string> args{format(x), format(y), format(z)};
    L<K> X = id(x), Z = id(z);
    rec.eq("D.1", args, lift(o.prec(x, y), Z, o.prec), lift(X, o.mul(y, z), o.prec));
    rec.eq("D.2", args, lift(o.succ(x, y), Z, o.prec), lift(X, o.prec(y, z), o.succ));
    rec.eq("D.3", args, lift(o.mul(x, y), Z, o.succ), lift(X, o.succ(y, z), o.succ));
  });
}

const std::vector<SpecialPoset>& spf_basis(int n) { return enumerate(Family::SPF, n); }

Ops<SpecialPoset> sp_ops(Family f) {
  Ops<SpecialPoset> o;
  o.basis = [f](int n) -> const std::vector<SpecialPoset>& { return enumerate(f, n); };
  o.mul = [](const SpecialPoset& a, const SpecialPoset& b) { return HSP(compose(a, b)); };
  o.nw = [](const SpecialPoset& a, const SpecialPoset& b) { return HSP(nwarrow(a, b)); };
  o.red = [](const SpecialPoset& a) { return reduced_coproduct(a); };
  o.dp = [](const SpecialPoset& a) { return dendriform_coproducts(a).first; };
  o.ds = [](const SpecialPoset& a) { return dendriform_coproducts(a).second; };
  o.prec = [](const SpecialPoset& a, const SpecialPoset& b) { return spf_prec_basis(a, b); };
  o.succ = spf_succ_basis;
  return o;
}

Ops<SpecialPoset> primed(Ops<SpecialPoset> o) {
  o.dp = [](const SpecialPoset& a) { return dendriform_coproducts_prime(a).first; };
  o.ds = [](const SpecialPoset& a) { return dendriform_coproducts_prime(a).second; };
  return o;
}

Ops<Permutation> fq_ops() {
  Ops<Permutation> o;
  o.basis = [](int n) -> const std::vector<Permutation>& {
    static std::mutex mu;
    static std::map<int, std::vector<Permutation>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_permutations(n)).first;
    return it->second;
  };
  o.mul = shuffle_product;
  o.nw = fq_nwarrow;
  o.red = fq_reduced_coproduct;
  o.dp = [](const Permutation& s) { return fq_dendriform_coproducts(s).first; };
  o.ds = [](const Permutation& s) { return fq_dendriform_coproducts(s).second; };
  return o;
}

FQ2 theta2(const HSP2& t) {
  FQ2 out;
  for (const auto& [ab, c] : t) {
    FQ2 part = tensor(theta(ab.first), theta(ab.second));
    part *= c;
    out += part;
  }
  return out;
}

void check_adjunction(int max, AxiomReport& r) {
  Recorder rec{r};
  for (int a = 1; a < max; ++a)
    for (int b = 1; a + b <= max; ++b)
      for (const auto& x : spf_basis(a))
        for (const auto& y : spf_basis(b))
          for (const auto& z : spf_basis(a + b)) {
            if (!selected(x, y, z)) continue;
            ++r.tuples_checked;
            std::vector<std::string> args{format(x), format(y), format(z)};
            auto [dl, ds] = dendriform_coproducts_prime(z);
            HSP2 xy = simple(x, y);
            rec.eq_scalar("adjunction.prec", args, pairing(spf_prec_basis(x, y), HSP(z)), pairing(xy, dl));
            rec.eq_scalar("adjunction.succ", args, pairing(spf_succ_basis(x, y), HSP(z)), pairing(xy, ds));
          }
}

void check_theta_dupdend(int max, AxiomReport& r) {
  Recorder rec{r};
  Ops<SpecialPoset> o = sp_ops(Family::SP);
  for_pairs(o, max, r, [&](const SpecialPoset& x, const SpecialPoset& y) {
    FQ rhs = bilinear_map<FQ>(theta(x), theta(y), fq_nwarrow);
    rec.eq("theta.nwarrow", {format(x), format(y)}, theta(HSP(nwarrow(x, y))), rhs);
  });
  for_singles(o, max, r, [&](const SpecialPoset& x) {
    auto [l, s] = dendriform_coproducts(x);
    FQ th = theta(x);
    FQ2 fl = linear_map<FQ2>(th, [](const Permutation& p) { return fq_dendriform_coproducts(p).first; });
    FQ2 fs = linear_map<FQ2>(th, [](const Permutation& p) { return fq_dendriform_coproducts(p).second; });
    rec.eq("theta.delta-prec", {format(x)}, theta2(l), fl);
    rec.eq("theta.delta-succ", {format(x)}, theta2(s), fs);
  });
}

void check_closure(int max, AxiomReport& r) {
  const Family fams[] = {Family::SP, Family::HOP, Family::SPP, Family::OF, Family::HOF, Family::SWNP, Family::SPF};
  for (Family f : fams) {
    Ops<SpecialPoset> o = sp_ops(f);
    std::string name(family_name(f));
    auto report = [&](const char* what, std::vector<std::string> args, const SpecialPoset& bad) {
      r.violations.push_back({name + "." + what, std::move(args), format(bad), "member of " + name});
    };
    for_pairs(o, max, r, [&](const SpecialPoset& x, const SpecialPoset& y) {
      SpecialPoset z = nwarrow(x, y);
      if (!in_family(z, f)) report("nwarrow", {format(x), format(y)}, z);
    });
    for_singles(o, max, r, [&](const SpecialPoset& x) {
      auto [l, s] = dendriform_coproducts(x);
      for (const HSP2* part : {&l, &s})
        for (const auto& [t, c] : *part)
          for (const SpecialPoset* q : {&t.first, &t.second})
            if (!in_family(*q, f)) report("coproduct", {format(x)}, *q);
    });
  }
}

}  // namespace

const std::vector<std::string>& axiom_suites() {
  static const std::vector<std::string> s{"duplicial",        "dendriform-coalgebra", "dupdend-compat",
                                          "codendriform",     "dendriform-hopf",      "bidendriform",
                                          "half-product-adjunction", "theta-dupdend",      "dendriform-algebra",
                                          "fqsym-dupdend",    "family-closure"};
  return s;
}

AxiomReport check_axioms(std::string_view suite, int max_degree, const std::vector<std::string>& tuple) {
  struct Scope {
    explicit Scope(const std::vector<std::string>* t) { only_tuple = t; }
    ~Scope() { only_tuple = nullptr; }
  } scope(tuple.empty() ? nullptr : &tuple);
  AxiomReport r;
  r.suite = std::string(suite);
  r.degree = max_degree;
  if (suite == "duplicial") {
    check_duplicial(sp_ops(Family::SP), max_degree, r);
  } else if (suite == "dendriform-coalgebra") {
    check_codendriform(sp_ops(Family::SP), max_degree, r, "coassoc");
  } else if (suite == "dupdend-compat") {
    check_dupdend_compat(sp_ops(Family::SP), max_degree, r);
  } else if (suite == "codendriform") {
    auto o = primed(sp_ops(Family::SPP));
    check_codendriform(o, max_degree, r, "coassoc-primed");
    check_codendriform_product(o, max_degree, r);
  } else if (suite == "dendriform-hopf") {
    check_dendriform_hopf(sp_ops(Family::SPF), max_degree, r);
  } else if (suite == "bidendriform") {
    check_bidendriform(primed(sp_ops(Family::SPF)), max_degree, r);
  } else if (suite == "half-product-adjunction") {
    check_adjunction(max_degree, r);
  } else if (suite == "theta-dupdend") {
    check_theta_dupdend(max_degree, r);
  } else if (suite == "dendriform-algebra") {
    check_dendriform_algebra(sp_ops(Family::SPF), max_degree, r);
  } else if (suite == "fqsym-dupdend") {
    auto o = fq_ops();
    check_duplicial(o, max_degree, r);
    check_codendriform(o, max_degree, r, "coassoc");
    check_dupdend_compat(o, max_degree, r);
  } else if (suite == "family-closure") {
    check_closure(max_degree, r);
  } else {
    throw std::invalid_argument("unknown suite");
  }
  return r;
}

}  // namespace dposet
