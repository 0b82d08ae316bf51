#pragma once

#include "dposet/codec.hpp"
#include "dposet/fqsym.hpp"
#include "dposet/poset.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace testing_support {

inline oracle::Rel to_rel(const dposet::StrictOrder& o) {
  oracle::Rel r;
  r.n = o.size();
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) r.lt[i][j] = o.less(i, j);
  return r;
}

inline dposet::StrictOrder from_rel(const oracle::Rel& r) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j)
      if (r.lt[i][j]) pairs.emplace_back(i + 1, j + 1);
  return dposet::StrictOrder::from_pairs(r.n, pairs);
}

inline oracle::Word to_word(const dposet::Permutation& s) {
  return oracle::Word(s.word().begin(), s.word().end());
}

inline dposet::SpecialPoset sp(const char* text) { return dposet::parse_special(text); }
inline dposet::DoublePoset dp(const char* text) { return dposet::parse_poset(text); }
inline dposet::Permutation perm(const char* text) { return dposet::parse_permutation(text); }

}  // namespace testing_support

// statement throws an exception whose what() contains `text`
#define EXPECT_THROW_MSG(stmt, text)                                              \
  do {                                                                            \
    try {                                                                         \
      stmt;                                                                       \
      ADD_FAILURE() << "no exception from " #stmt;                                \
    } catch (const std::exception& e_) {                                          \
      EXPECT_NE(std::string(e_.what()).find(text), std::string::npos) << e_.what(); \
    }                                                                             \
  } while (0)
