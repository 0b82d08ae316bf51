#include "dposet/graded.hpp"

#include "dposet/codec.hpp"
#include "dposet/morphisms.hpp"

#include <mutex>
#include <stdexcept>

namespace dposet {

std::vector<DoublePoset> family_basis(Family f, int n) {
  if (is_plane_family(f)) return enumerate_plane(f, n);
  std::vector<DoublePoset> out;
  for (const auto& p : enumerate(f, n)) out.push_back(p.to_double());
  return out;
}

namespace {

struct BasisIndex {
  std::vector<DoublePoset> basis;
  std::map<DoublePoset, std::size_t> index;
};

const BasisIndex& basis_index(Family f, int n) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, BasisIndex> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(f, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  BasisIndex b;
  b.basis = family_basis(f, n);
  for (std::size_t i = 0; i < b.basis.size(); ++i) b.index.emplace(b.basis[i], i);
  return cache.emplace(key, std::move(b)).first->second;
}

std::size_t locate(Family f, const DoublePoset& p) {
  const BasisIndex& b = basis_index(f, p.size());
  auto it = b.index.find(p);
  if (it == b.index.end())
    throw std::invalid_argument(format(p) + " is not in family " + std::string(family_name(f)));
  return it->second;
}

const GaussMatrix& block(const GradedMap& phi, int n) {
  auto it = phi.blocks.find(n);
  if (it == phi.blocks.end()) throw std::invalid_argument("missing degree block " + std::to_string(n));
  return it->second;
}

HDPG column(const GradedMap& phi, int n, std::size_t j) {
  const GaussMatrix& m = block(phi, n);
  const BasisIndex& t = basis_index(phi.target, n);
  HDPG out;
  for (std::size_t i = 0; i < t.basis.size(); ++i) out.add(t.basis[i], m(i, j));
  return out;
}

HDPG apply_basis(const GradedMap& phi, const DoublePoset& p) {
  if (p.size() == 0) return HDPG(p);
  return column(phi, p.size(), locate(phi.source, p));
}

Tensor2<DoublePoset, GaussRational> apply_tensor(const GradedMap& phi, const HDP2& t) {
  Tensor2<DoublePoset, GaussRational> out;
  for (const auto& [ab, c] : t) {
    auto part = tensor(apply_basis(phi, ab.first), apply_basis(phi, ab.second));
    part *= GaussRational(c);
    out += part;
  }
  return out;
}

}  // namespace

std::optional<std::pair<DoublePoset, DoublePoset>> split_product(const DoublePoset& p) {
  DoublePoset c = canonical_form(p);
  int n = c.size();
  VertexSet all = full_set(n);
  for (int k = 1; k < n; ++k) {
    VertexSet low = full_set(k);
    DoublePoset a = canonical_form(restrict_to(c, low)), b = canonical_form(restrict_to(c, all & ~low));
    if (basis_product(a, b) == c) return std::make_pair(a, b);
  }
  return std::nullopt;
}

HDPG apply_graded(const GradedMap& phi, const HDPG& x) {
  HDPG out;
  for (const auto& [p, c] : x) {
    HDPG img = apply_basis(phi, canonical_form(p));
    img *= c;
    out += img;
  }
  return out;
}

GaussMatrix multiplicative_block(const GradedMap& phi, int n, const std::map<DoublePoset, HDPG>& given) {
  const BasisIndex& s = basis_index(phi.source, n);
  const BasisIndex& t = basis_index(phi.target, n);
  GaussMatrix m(t.basis.size(), s.basis.size());
  for (std::size_t j = 0; j < s.basis.size(); ++j) {
    HDPG img;
    if (auto it = given.find(s.basis[j]); it != given.end()) {
      img = it->second;
    } else if (auto split = split_product(s.basis[j])) {
      img = lc_product(apply_basis(phi, split->first), apply_basis(phi, split->second));
    } else {
      throw std::invalid_argument("missing image of " + format(s.basis[j]));
    }
    for (const auto& [q, c] : img) m(locate(phi.target, canonical_form(q)), j) = c;
  }
  return m;
}

IsometryReport verify_graded_isometry(const GradedMap& phi, int max_degree) {
  IsometryReport r;
  r.max_degree = max_degree;
  for (int n = 1; n <= max_degree; ++n) {
    const GaussMatrix& m = block(phi, n);
    const BasisIndex& s = basis_index(phi.source, n);
    const BasisIndex& t = basis_index(phi.target, n);
    if (m.rows() != t.basis.size() || m.cols() != s.basis.size())
      throw std::invalid_argument("degree block " + std::to_string(n) + " has the wrong shape");
  }
  for (int n = 1; n <= max_degree; ++n) {
    const BasisIndex& s = basis_index(phi.source, n);
    GaussMatrix gs = gram_matrix(phi.source, n).cast<GaussRational>();
    GaussMatrix gt = gram_matrix(phi.target, n).cast<GaussRational>();
    const GaussMatrix& m = block(phi, n);
    GaussMatrix pulled = m.transpose() * gt * m;
    for (std::size_t i = 0; i < s.basis.size(); ++i)
      for (std::size_t j = i; j < s.basis.size(); ++j)
        if (!(pulled(i, j) == gs(i, j)))
          r.failures.push_back("pairing <" + format(s.basis[i]) + ", " + format(s.basis[j]) + "> = " +
                               to_string(gs(i, j)) + " but the images pair to " + to_string(pulled(i, j)));
    for (const auto& x : s.basis) {
      auto lhs = lc_reduced_coproduct(apply_basis(phi, x));
      auto rhs = apply_tensor(phi, reduced_coproduct(x));
      if (!(lhs == rhs))
        r.failures.push_back("coproduct of " + format(x) + ": " + format(lhs) + " vs " + format(rhs));
    }
  }
  for (int p = 1; p < max_degree; ++p)
    for (int q = 1; p + q <= max_degree; ++q)
      for (const auto& a : basis_index(phi.source, p).basis)
        for (const auto& b : basis_index(phi.source, q).basis) {
          auto lhs = apply_basis(phi, basis_product(a, b));
          auto rhs = lc_product(apply_basis(phi, a), apply_basis(phi, b));
          if (!(lhs == rhs))
            r.failures.push_back("product " + format(a) + " . " + format(b) + ": " + format(lhs) + " vs " +
                                 format(rhs));
        }
  return r;
}

GradedMap pp_to_spp_degree2(const GaussRational& alpha, const GaussRational& beta) {
  GradedMap phi;
  phi.source = Family::PP;
  phi.target = Family::SPP;
  phi.blocks[1] = GaussMatrix{{GaussRational(1)}};
  DoublePoset chain = canonical_form(DoublePoset(StrictOrder::total(2), StrictOrder(2)));
  HDPG img;
  img.add(SpecialPoset::antichain(2).to_double(), beta);
  img.add(SpecialPoset::chain(2).to_double(), alpha);
  phi.blocks[2] = multiplicative_block(phi, 2, {{chain, img}});
  return phi;
}

void add_pp_to_spp_degree3(GradedMap& phi, int family, const GaussRational& x) {
  if (family < 1 || family > 4) throw std::invalid_argument("family must be 1..4");
  const GaussRational i = GaussRational::i();
  auto q = [](long a, long b = 1) { return GaussRational(Rational(a, b)); };
  auto sp = [](std::initializer_list<std::pair<int, int>> pairs) { return SpecialPoset::from_pairs(3, pairs).to_double(); };
  DoublePoset c = sp({{1, 2}, {2, 3}}), t = sp({{1, 2}, {1, 3}}), p = sp({{1, 3}, {2, 3}}), a = sp({{1, 2}}),
              b = sp({{2, 3}}), e = sp({});
  auto comb = [](std::initializer_list<std::pair<DoublePoset, GaussRational>> terms) {
    HDPG out;
    for (const auto& [k, v] : terms) out.add(k, v);
    return out;
  };
  GaussRational x2 = x * x;

  HDPG chain_img, tree_img, root_img;
  if (family <= 2) {
    chain_img = comb({{c, q(1)}, {a, i * x - i}, {b, q(-1) - i * x}, {e, (q(1) + i) / q(2)}});
  } else {
    chain_img = comb({{c, q(-1)}, {a, (q(-3) * i * x - i) / q(3)}, {b, (q(3) * i * x - q(2) * i + q(3)) / q(3)},
                      {e, (q(3) * i - q(1)) / q(6)}});
  }
  tree_img = comb({{c, q(-1) - i + q(3) * x},
                   {t, -i},
                   {a, (q(3) * i * x2 - q(2) * i * x) / q(2)},
                   {b, (q(-3) * i * x2 + (q(-3) + i) * x + q(2) + i) / q(2)},
                   {e, x}});
  switch (family) {
    case 1:
      root_img = comb({{c, q(-3) * x + q(2) + q(2) * i},
                       {p, -i},
                       {a, (q(3) * i * x2 - q(2) * i * x) / q(2)},
                       {b, (q(3) * i * x2 + (q(6) - q(4) * i) * x - q(4) - q(2) * i) / q(2)},
                       {e, -x + q(1) + i}});
      break;
    case 2:
      root_img = comb({{c, q(-3) * x + q(2)},
                       {t, q(2) * i},
                       {p, i},
                       {a, (q(-3) * i * x2 + q(4) * i * x - q(6) * i) / q(2)},
                       {b, (q(3) * i * x2 + (q(6) - q(4) * i) * x - q(4) - q(2) * i) / q(2)},
                       {e, -x + q(1) + i}});
      break;
    case 3:
      root_img = comb({{c, q(-3) * x + q(2) * i},
                       {p, -i},
                       {a, (q(-9) * i * x2 - q(2) * i) / q(6)},
                       {b, (q(9) * i * x2 + q(18) * x - q(10) * i) / q(6)},
                       {e, (q(-3) * x + q(3) * i + q(1)) / q(3)}});
      break;
    default:
      root_img = comb({{c, q(-3) * x},
                       {t, q(2) * i},
                       {p, i},
                       {a, (q(-9) * i * x2 - q(14) * i) / q(6)},
                       {b, (q(9) * i * x2 + q(18) * x - q(10) * i) / q(6)},
                       {e, (q(-3) * x + q(3) * i + q(1)) / q(3)}});
      break;
  }
  std::map<DoublePoset, HDPG> given{{canonical_form(dposet::phi(Permutation({1, 2, 3}))), chain_img},
                                    {canonical_form(dposet::phi(Permutation({1, 3, 2}))), tree_img},
                                    {canonical_form(dposet::phi(Permutation({2, 1, 3}))), root_img}};
  phi.blocks[3] = multiplicative_block(phi, 3, given);
}

}  // namespace dposet
