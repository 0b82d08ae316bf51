#include "dposet/linalg.hpp"

#include <cmath>
#include <functional>
#include <optional>

namespace dposet {

RankKernel rank_kernel(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational piv = a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  RankKernel out;
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, f);
    // primitive integer representative with positive leading entry
    Integer l = 1, g = 0;
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) {
      x *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    for (auto& x : v)
      if (sgn(x) != 0) {
        if (sgn(x) < 0) g = -g;
        break;
      }
    for (auto& x : v) x /= g;
    out.kernel.push_back(std::move(v));
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string_view block_name(BlockKind b) {
  switch (b) {
    case BlockKind::PlusOne: return "plus_one";
    case BlockKind::MinusOne: return "minus_one";
    case BlockKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

namespace {

// basis-change bookkeeping: rows of p are the current basis vectors, b their Gram matrix
struct Reducer {
  IntMatrix b, p;
  std::size_t n;

  explicit Reducer(const IntMatrix& a) : b(a), p(IntMatrix::identity(a.rows())), n(a.rows()) {}

  // e_i += t e_j
  void transvect(std::size_t i, std::size_t j, const Integer& t) {
    if (sgn(t) == 0) return;
    for (std::size_t k = 0; k < n; ++k) p(i, k) += t * p(j, k);
    for (std::size_t k = 0; k < n; ++k) b(i, k) += t * b(j, k);
    for (std::size_t k = 0; k < n; ++k) b(k, i) += t * b(k, j);
  }
  void negate(std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) {
      p(i, k) = -p(i, k);
      b(i, k) = -b(i, k);
    }
    for (std::size_t k = 0; k < n; ++k) b(k, i) = -b(k, i);
  }
  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(p(i, k), p(j, k));
      std::swap(b(i, k), b(j, k));
    }
    for (std::size_t k = 0; k < n; ++k) std::swap(b(k, i), b(k, j));
  }

  // make sum c_k e_k (k >= s, gcd 1) the basis vector e_s
  void promote(std::size_t s, std::vector<Integer> c) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t k = s; k < n; ++k)
        if (sgn(c[k - s]) != 0 && (best == n || abs(c[k - s]) < abs(c[best - s]))) best = k;
      bool done = true;
      for (std::size_t k = s; k < n; ++k) {
        if (k == best || sgn(c[k - s]) == 0) continue;
        done = false;
        Integer q = c[k - s] / c[best - s];
        // e_best += q e_k leaves the vector fixed while c_k -= q c_best
        transvect(best, k, q);
        c[k - s] -= q * c[best - s];
      }
      if (done) {
        if (c[best - s] < 0) negate(best);
        swap(best, s);
        return;
      }
    }
  }

  Integer form(std::size_t s, const std::vector<Integer>& c) const {
    Integer q = 0;
    for (std::size_t i = s; i < n; ++i) {
      if (sgn(c[i - s]) == 0) continue;
      for (std::size_t j = s; j < n; ++j) q += c[i - s] * b(i, j) * c[j - s];
    }
    return q;
  }
};

Integer gcd_of(const std::vector<Integer>& c) {
  Integer g = 0;
  for (auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

// +1 positive definite, -1 negative definite, 0 otherwise (leading principal minors)
int definiteness(const IntMatrix& b, std::size_t s) {
  std::size_t m = b.rows() - s;
  bool pos = true, neg = true;
  for (std::size_t k = 1; k <= m; ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = b(s + i, s + j);
    int d = sgn(determinant(sub));
    if (d <= 0) pos = false;
    if (d != ((k % 2) ? -1 : 1)) neg = false;
  }
  return pos ? 1 : (neg ? -1 : 0);
}

// all c with sign*Q(c) = 1 on a definite block, by exact Fincke-Pohst enumeration
std::optional<std::vector<Integer>> unit_vector_definite(const Reducer& r, std::size_t s, int sign) {
  std::size_t m = r.n - s;
  // LDL^T of sign*B over Q
  RatMatrix q(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) q(i, j) = Rational(sign * r.b(s + i, s + j));
  std::vector<Rational> d(m);
  RatMatrix mu(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational acc = q(i, i);
    for (std::size_t k = 0; k < i; ++k) acc -= mu(i, k) * mu(i, k) * d[k];
    d[i] = acc;
    for (std::size_t j = i + 1; j < m; ++j) {
      Rational t = q(j, i);
      for (std::size_t k = 0; k < i; ++k) t -= mu(j, k) * mu(i, k) * d[k];
      mu(j, i) = t / d[i];
    }
  }
  // Q(x) = sum_i d_i (x_i + sum_{j>i} mu(j,i) x_j)^2
  std::vector<Integer> x(m, 0);
  std::optional<std::vector<Integer>> found;
  std::function<void(std::ptrdiff_t, Rational)> rec = [&](std::ptrdiff_t i, Rational budget) {
    if (found) return;
    if (i < 0) {
      bool nonzero = false;
      for (auto& v : x) nonzero = nonzero || sgn(v) != 0;
      if (nonzero && budget == 0) found = x;
      return;
    }
    Rational c = 0;
    for (std::size_t j = i + 1; j < m; ++j) c += mu(j, i) * x[j];
    double radius = std::sqrt(Rational(budget / d[i]).get_d());
    long lo = static_cast<long>(std::floor(-c.get_d() - radius)) - 1;
    long hi = static_cast<long>(std::ceil(-c.get_d() + radius)) + 1;
    for (long v = lo; v <= hi && !found; ++v) {
      Rational t = Rational(v) + c;
      Rational used = d[i] * t * t;
      if (used > budget) continue;
      x[i] = v;
      rec(i - 1, budget - used);
    }
    x[i] = 0;
  };
  rec(static_cast<std::ptrdiff_t>(m) - 1, Rational(1));
  return found;
}

// greedy: shrink |B(i,i)| via e_i += t e_j; true if something changed
bool shrink_diagonal(Reducer& r, std::size_t s) {
  for (std::size_t i = s; i < r.n; ++i)
    for (std::size_t j = s; j < r.n; ++j) {
      if (i == j || sgn(r.b(j, j)) == 0) continue;
      const Integer &a = r.b(i, i), &bb = r.b(i, j), &c = r.b(j, j);
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), Integer(-bb).get_mpz_t(), c.get_mpz_t());
      for (Integer t : {Integer(fl), Integer(fl + 1), Integer(fl - 1)}) {
        if (sgn(t) == 0) continue;
        Integer v = a + 2 * t * bb + t * t * c;
        if (abs(v) < abs(a)) {
          r.transvect(i, j, t);
          return true;
        }
      }
    }
  return false;
}

// positive definite majorant of the block from s: with P B P^T = D over Q, M = P^-1 |D| P^-T
RatMatrix majorant(const IntMatrix& b, std::size_t s) {
  std::size_t m = b.rows() - s;
  RatMatrix q(m, m), p = RatMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) q(i, j) = Rational(b(s + i, s + j));
  auto add_row = [&](std::size_t i, std::size_t j, const Rational& t) {
    for (std::size_t k = 0; k < m; ++k) p(i, k) += t * p(j, k);
    for (std::size_t k = 0; k < m; ++k) q(i, k) += t * q(j, k);
    for (std::size_t k = 0; k < m; ++k) q(k, i) += t * q(k, j);
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(q(i, i)) == 0) {
      for (std::size_t j = i + 1; j < m && sgn(q(i, i)) == 0; ++j)
        if (sgn(q(j, i)) != 0) add_row(i, j, Rational(sgn(q(j, j)) == 0 || sgn(q(j, j)) == sgn(q(i, j)) ? 1 : -1));
    }
    if (sgn(q(i, i)) == 0) throw std::logic_error("singular block");
    for (std::size_t j = i + 1; j < m; ++j) add_row(j, i, Rational(-q(j, i) / q(i, i)));
  }
  RatMatrix d(m, m);
  for (std::size_t i = 0; i < m; ++i) d(i, i) = abs(q(i, i));
  RatMatrix pi = inverse(p);
  return pi * d * pi.transpose();
}

Integer round_nearest(const Rational& x) {
  Rational h = x + Rational(1, 2);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return out;
}

// LLL on the block from s measured by a majorant; the same moves act on the form
void lll_reduce(Reducer& r, std::size_t s) {
  std::size_t m = r.n - s;
  if (m < 2) return;
  RatMatrix g = majorant(r.b, s);
  auto transvect = [&](std::size_t i, std::size_t j, const Integer& t) {
    Rational rt(t);
    for (std::size_t k = 0; k < m; ++k) g(i, k) += rt * g(j, k);
    for (std::size_t k = 0; k < m; ++k) g(k, i) += rt * g(k, j);
    r.transvect(s + i, s + j, t);
  };
  auto swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m; ++k) std::swap(g(i, k), g(j, k));
    for (std::size_t k = 0; k < m; ++k) std::swap(g(k, i), g(k, j));
    r.swap(s + i, s + j);
  };
  auto gram_schmidt = [&](RatMatrix& mu, std::vector<Rational>& bstar) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rational t = g(i, j);
        for (std::size_t k = 0; k < j; ++k) t -= mu(j, k) * mu(i, k) * bstar[k];
        mu(i, j) = t / bstar[j];
      }
      Rational t = g(i, i);
      for (std::size_t k = 0; k < i; ++k) t -= mu(i, k) * mu(i, k) * bstar[k];
      bstar[i] = t;
    }
  };
  RatMatrix mu(m, m);
  std::vector<Rational> bstar(m);
  const Rational delta(3, 4);
  std::size_t k = 1;
  while (k < m) {
    for (std::size_t j = k; j-- > 0;) {
      gram_schmidt(mu, bstar);
      Integer t = round_nearest(mu(k, j));
      if (sgn(t) != 0) transvect(k, j, Integer(-t));
    }
    gram_schmidt(mu, bstar);
    if (bstar[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
      ++k;
    } else {
      swap(k, k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// small-coefficient search for a primitive vector with Q in {0, +1, -1}
std::optional<std::vector<Integer>> small_vector(const Reducer& r, std::size_t s) {
  std::size_t m = r.n - s;
  for (long bound = 1; bound <= 3; ++bound) {
    double total = std::pow(2.0 * bound + 1, double(m));
    if (total > 4e6) break;
    std::vector<Integer> c(m, -bound);
    for (;;) {
      Integer g = gcd_of(c);
      if (g == 1) {
        Integer q = r.form(s, c);
        if (abs(q) <= 1) return c;
      }
      std::size_t k = 0;
      while (k < m && c[k] == bound) c[k++] = -bound;
      if (k == m) break;
      c[k] += 1;
    }
  }
  return std::nullopt;
}

}  // namespace

CongruenceCertificate congruence_diagonalize(const IntMatrix& a) {
  if (!a.symmetric()) throw std::invalid_argument("matrix not symmetric");
  if (abs(determinant(a)) != 1) throw std::invalid_argument("matrix not unimodular");
  Reducer r(a);
  std::size_t n = r.n, s = 0;
  std::vector<BlockKind> blocks;
  while (s < n) {
    // a unit on the diagonal splits off as a 1x1 block
    std::size_t k = s;
    while (k < n && abs(r.b(k, k)) != 1) ++k;
    if (k < n) {
      r.swap(s, k);
      Integer e = r.b(s, s);
      for (std::size_t m = s + 1; m < n; ++m) r.transvect(m, s, -r.b(m, s) * e);
      blocks.push_back(e == 1 ? BlockKind::PlusOne : BlockKind::MinusOne);
      ++s;
      continue;
    }
    k = s;
    while (k < n && sgn(r.b(k, k)) != 0) ++k;
    if (k < n) {
      r.swap(s, k);
      // Euclid on the column of the isotropic vector, rows below s only
      for (;;) {
        std::size_t best = n;
        for (std::size_t m = s + 1; m < n; ++m)
          if (sgn(r.b(m, s)) != 0 && (best == n || abs(r.b(m, s)) < abs(r.b(best, s)))) best = m;
        if (best == n) throw std::logic_error("isotropic vector orthogonal to everything");
        bool single = true;
        for (std::size_t m = s + 1; m < n; ++m) {
          if (m == best || sgn(r.b(m, s)) == 0) continue;
          single = false;
          Integer q = r.b(m, s) / r.b(best, s);
          r.transvect(m, best, -q);
        }
        if (single) {
          r.swap(s + 1, best);
          break;
        }
      }
      if (r.b(s + 1, s) == -1) r.negate(s + 1);
      if (r.b(s + 1, s) != 1) throw std::logic_error("pivot is not a unit");
      for (std::size_t m = s + 2; m < n; ++m) r.transvect(m, s, -r.b(m, s + 1));
      Integer q;
      mpz_fdiv_q_2exp(q.get_mpz_t(), r.b(s + 1, s + 1).get_mpz_t(), 1);
      r.transvect(s + 1, s, -q);
      if (sgn(r.b(s + 1, s + 1)) == 0) {
        blocks.push_back(BlockKind::Hyperbolic);
      } else {
        // [[0,1],[1,1]] -> [[1,1],[1,0]] -> diag(1,-1)
        r.swap(s, s + 1);
        r.transvect(s + 1, s, Integer(-1));
        blocks.push_back(BlockKind::PlusOne);
        blocks.push_back(BlockKind::MinusOne);
      }
      s += 2;
      continue;
    }
    if (shrink_diagonal(r, s)) continue;
    int def = definiteness(r.b, s);
    if (def != 0) {
      auto v = unit_vector_definite(r, s, def);
      if (!v) throw NotBlockDecomposable("definite form without unit vectors has no block decomposition");
      r.promote(s, *v);
      continue;
    }
    lll_reduce(r, s);
    auto v = small_vector(r, s);
    if (!v) throw std::runtime_error("congruence search exhausted");
    r.promote(s, *v);
  }
  CongruenceCertificate cert{r.p, r.b, blocks};
  if (!check_certificate(a, cert)) throw std::logic_error("congruence certificate failed verification");
  return cert;
}

bool check_certificate(const IntMatrix& a, const CongruenceCertificate& cert) {
  if (abs(determinant(cert.transform)) != 1) return false;
  if (!(cert.transform * a * cert.transform.transpose() == cert.block_form)) return false;
  IntMatrix expect(a.rows(), a.cols());
  std::size_t s = 0;
  for (BlockKind k : cert.blocks) {
    if (k == BlockKind::Hyperbolic) {
      if (s + 1 >= a.rows()) return false;
      expect(s, s + 1) = expect(s + 1, s) = 1;
      s += 2;
    } else {
      if (s >= a.rows()) return false;
      expect(s, s) = k == BlockKind::PlusOne ? 1 : -1;
      s += 1;
    }
  }
  return s == a.rows() && expect == cert.block_form;
}

namespace {

// M with M A M^T = I over Q(i)
GaussMatrix to_identity(const IntMatrix& a) {
  auto cert = congruence_diagonalize(a);
  std::size_t n = a.rows();
  GaussMatrix t(n, n);
  GaussRational i = GaussRational::i();
  std::size_t s = 0;
  for (BlockKind k : cert.blocks) {
    if (k == BlockKind::PlusOne) {
      t(s, s) = 1;
      ++s;
    } else if (k == BlockKind::MinusOne) {
      t(s, s) = i;
      ++s;
    } else {
      Rational half(1, 2);
      t(s, s) = i * GaussRational(half);
      t(s, s + 1) = -i;
      t(s + 1, s) = GaussRational(half);
      t(s + 1, s + 1) = 1;
      s += 2;
    }
  }
  return t * cert.transform.cast<GaussRational>();
}

}  // namespace

GaussMatrix build_isometry(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("forms of different sizes");
  GaussMatrix ma = to_identity(a), mb = to_identity(b);
  GaussMatrix s = ma.transpose() * inverse(mb).transpose();
  GaussMatrix check = s.transpose() * a.cast<GaussRational>() * s;
  if (!(check == b.cast<GaussRational>())) throw std::logic_error("isometry failed verification");
  return s;
}

}  // namespace dposet
