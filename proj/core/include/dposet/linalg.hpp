#pragma once

#include "dposet/matrix.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dposet {

struct RankKernel {
  std::size_t rank = 0;
  // each vector scaled to a primitive integer vector whose first nonzero entry is positive
  std::vector<std::vector<Rational>> kernel;
};

RankKernel rank_kernel(const RatMatrix& m);
inline RankKernel rank_kernel(const IntMatrix& m) { return rank_kernel(m.cast<Rational>()); }

// Bareiss elimination, exact
Integer determinant(const IntMatrix& m);

// Gauss-Jordan over a field; throws std::domain_error "singular matrix"
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("matrix not square");
  std::size_t n = m.rows();
  Matrix<T> a = m, inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == T(0)) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    T piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) / piv;
      inv(c, j) = inv(c, j) / piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == T(0)) continue;
      T f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// solve m x = b over a field; m must be invertible
template <class T>
std::vector<T> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> inv = inverse(m);
  std::vector<T> x(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x[i] += inv(i, j) * b[j];
  return x;
}

// ---- unimodular congruence

enum class BlockKind { PlusOne, MinusOne, Hyperbolic };
std::string_view block_name(BlockKind b);

struct CongruenceCertificate {
  IntMatrix transform;  // P, det = +-1
  IntMatrix block_form;  // B = P A P^T
  std::vector<BlockKind> blocks;
};

// distinct failure for forms that have no such block decomposition (even definite, e.g. E8)
struct NotBlockDecomposable : std::domain_error {
  using std::domain_error::domain_error;
};

// P A P^T = B with B block diagonal in (1), (-1), [[0,1],[1,0]], using only
// transvections, sign changes and swaps of basis vectors. Verified before return.
// throws "matrix not symmetric", "matrix not unimodular", NotBlockDecomposable
CongruenceCertificate congruence_diagonalize(const IntMatrix& a);

// checks det(P) = +-1, P A P^T = B and the block shape
bool check_certificate(const IntMatrix& a, const CongruenceCertificate& cert);

// S with S^T A S = B over Q(i); verified before return
GaussMatrix build_isometry(const IntMatrix& a, const IntMatrix& b);

}  // namespace dposet
