#pragma once

#include "dposet/matrix.hpp"

#include <random>

namespace testing_support {

// random block form of size <= 8, then random elementary congruences
inline dposet::IntMatrix random_unimodular(std::mt19937& rng) {
  using dposet::IntMatrix;
  std::size_t n = 1 + rng() % 8;
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n;) {
    int kind = rng() % 3;
    if (kind == 2 && i + 1 < n) {
      a(i, i + 1) = a(i + 1, i) = 1;
      i += 2;
    } else {
      a(i, i) = kind == 0 ? 1 : -1;
      i += 1;
    }
  }
  for (int step = 0; step < 12; ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    IntMatrix e = IntMatrix::identity(n);
    if (i == j)
      e(i, i) = -1;
    else
      e(i, j) = static_cast<long>(rng() % 5) - 2;
    a = e * a * e.transpose();
  }
  return a;
}

}  // namespace testing_support
