#pragma once

#include "dposet/algebra.hpp"
#include "dposet/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dposet {

using HDPG = LinComb<DoublePoset, GaussRational>;

// enumerate(f, n) as double posets; plane families give plane posets
std::vector<DoublePoset> family_basis(Family f, int n);

// P = A.B with A the shortest nonempty left factor, when P is decomposable
std::optional<std::pair<DoublePoset, DoublePoset>> split_product(const DoublePoset& p);

// column j of blocks[n] is the image of family_basis(source, n)[j] in family_basis(target, n)
struct GradedMap {
  Family source = Family::PP;
  Family target = Family::SPP;
  std::map<int, GaussMatrix> blocks;
};

HDPG apply_graded(const GradedMap& phi, const HDPG& x);

// fills the columns of decomposable basis elements of degree n from lower blocks;
// `given` supplies images of the indecomposables. Throws "missing image" otherwise.
GaussMatrix multiplicative_block(const GradedMap& phi, int n, const std::map<DoublePoset, HDPG>& given);

struct IsometryReport {
  int max_degree = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// multiplicativity on pairs, coproduct intertwining and <phi x, phi y> = <x, y>; throws "missing degree block"
IsometryReport verify_graded_isometry(const GradedMap& phi, int max_degree);

// ---- the PP -> SPP maps of low degree

// degree 1 identity, degree 2: antichain -> antichain, chain -> beta SP(2;) + alpha SP(2;1<2)
GradedMap pp_to_spp_degree2(const GaussRational& alpha, const GaussRational& beta);
// adds the degree-3 block of family k in {1,2,3,4} with parameter x, extended multiplicatively
void add_pp_to_spp_degree3(GradedMap& phi, int family, const GaussRational& x);

}  // namespace dposet
