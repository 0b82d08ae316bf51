// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "oracle.hpp"
#include "random_forms.hpp"

#include "dposet/algebra.hpp"
#include "dposet/codec.hpp"
#include "dposet/dupdend.hpp"
#include "dposet/graded.hpp"
#include "dposet/linalg.hpp"
#include "dposet/morphisms.hpp"
#include "dposet/series.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace dposet;

namespace {

// first mismatch wins; later checks still run but keep the first message
struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

oracle::Word word(const Permutation& s) { return {s.word().begin(), s.word().end()}; }

FQ words_to_fq(const std::vector<std::string>& ws) {
  FQ out;
  for (const auto& w : ws) out.add(parse_permutation(w), 1);
  return out;
}

Check gram_table() {
  Check c;
  c.expect(gram_matrix(Family::SP, 2) == IntMatrix{{2, 1, 1}, {1, 1, 0}, {1, 0, 1}}, "gram(SP,2) differs");
  return c;
}

Check counting() {
  Check c;
  for (int n = 0; n <= 6; ++n) {
    c.expect(enumerate(Family::SPP, n).size() == static_cast<std::size_t>(factorial(n)), "|SPP(n)| != n!");
    c.expect(enumerate(Family::HOF, n).size() == static_cast<std::size_t>(factorial(n)), "|HOF(n)| != n!");
  }
  const std::size_t sp[] = {1, 3, 19, 219, 4231};
  for (int n = 1; n <= 5; ++n)
    c.expect(enumerate(Family::SP, n).size() == sp[n - 1], "|SP(" + std::to_string(n) + ")| wrong");
  c.expect(enumerate(Family::SWNP, 4).size() == 22, "|SWNP(4)| != 22");
  c.expect(enumerate(Family::OF, 3).size() == 16, "|OF(3)| != 16");
  return c;
}

Check theta_examples() {
  Check c;
  // the four templates with {i,j,k} = {1,2,3}
  for (const auto& w : all_permutations(3)) {
    int i = w(1), j = w(2), k = w(3);
    auto s = [](int a, int b, int d) { return std::to_string(a) + std::to_string(b) + std::to_string(d); };
    c.expect(theta(SpecialPoset::antichain(3)) ==
                 words_to_fq({s(i, j, k), s(i, k, j), s(j, i, k), s(j, k, i), s(k, i, j), s(k, j, i)}),
             "antichain template");
    c.expect(theta(SpecialPoset::from_pairs(3, {{j, k}})) == words_to_fq({s(i, j, k), s(j, i, k), s(j, k, i)}),
             "isolated point and chain template");
    c.expect(theta(SpecialPoset::from_pairs(3, {{i, j}, {i, k}})) == words_to_fq({s(i, j, k), s(i, k, j)}),
             "tree template");
    c.expect(theta(SpecialPoset::from_pairs(3, {{i, j}, {j, k}})) == words_to_fq({s(i, j, k)}), "chain template");
  }
  for (const auto& p : enumerate(Family::SPP, 4)) {
    std::set<oracle::Word> got;
    for (const auto& [s, coeff] : theta(p)) {
      c.expect(coeff == 1, "theta coefficient not 1");
      got.insert(word(s));
    }
    c.expect(got == oracle::weak_down(word(psi(p).inverse())), "weak interval differs for " + format(p));
  }
  return c;
}

Check theta_isometry() {
  Check c;
  const auto& b3 = enumerate(Family::SP, 3);
  for (const auto& p : b3)
    for (const auto& q : b3)
      c.expect(fq_pairing(theta(p), theta(q)) == Rational(pairing_basis(p, q)), "degree 3 pair");
  const auto& b4 = enumerate(Family::SP, 4);
  std::mt19937 rng(4);
  for (int t = 0; t < 500; ++t) {
    const auto& p = b4[rng() % b4.size()];
    const auto& q = b4[rng() % b4.size()];
    c.expect(fq_pairing(theta(p), theta(q)) == Rational(pairing_basis(p, q)), "degree 4 pair");
  }
  return c;
}

Check upsilon_checks() {
  Check c;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate(Family::HOF, n)) c.expect(upsilon(p) == HSP(p), "not identity on HOF");
    const auto& hof = enumerate(Family::HOF, n);
    const auto& spp = enumerate(Family::SPP, n);
    RatMatrix m(hof.size(), spp.size());
    for (std::size_t j = 0; j < spp.size(); ++j) {
      HSP img = upsilon(spp[j]);
      for (std::size_t i = 0; i < hof.size(); ++i) m(i, j) = img.coeff(hof[i]);
    }
    c.expect(rank_kernel(m).rank == hof.size(), "Upsilon(SPP) not a basis");
  }
  for (const auto& p : enumerate(Family::SP, 4)) c.expect(theta(upsilon(p)) == theta(p), "theta o upsilon != theta");
  return c;
}

Check kernel_checks() {
  Check c;
  for (int n = 1; n <= 4; ++n) {
    RankKernel rk = rank_kernel(gram_matrix(Family::SP, n));
    c.expect(rk.kernel.size() == enumerate(Family::SP, n).size() - factorial(n), "radical dimension");
  }
  HSP k2 = parse_lincomb<SpecialPoset>("SP(2;) - SP(2;1<2) - SP(2;2<1)");
  for (const auto& p : enumerate(Family::SP, 2)) c.expect(pairing(k2, HSP(p)) == 0, "degree-2 kernel element");
  const std::pair<const char*, int> terms[] = {
      {"1324", 1},  {"1342", -1}, {"1423", -1}, {"1432", 1},  {"2143", 1},  {"2314", -1},
      {"3124", -1}, {"2341", 1},  {"2431", -1}, {"3214", 1},  {"3241", -1}, {"3412", 1},
      {"4123", 1},  {"4132", -1}, {"4213", -1}, {"4231", 1}};
  HSP k4;
  for (auto [w, sign] : terms) k4.add(phi_special(parse_permutation(w)), sign);
  for (const auto& [q, coeff] : k4) c.expect(in_family(q, Family::SWNP), "degree-4 element leaves SWNP");
  for (const auto& p : enumerate(Family::SWNP, 4)) c.expect(pairing(k4, HSP(p)) == 0, "degree-4 kernel element");
  return c;
}

Check nondegeneracy() {
  Check c;
  for (Family f : {Family::SPP, Family::HOF, Family::SPF})
    for (int n = 1; n <= 5; ++n)
      c.expect(determinant(gram_matrix(f, n)) != 0,
               "singular gram for " + std::string(family_name(f)) + std::to_string(n));
  c.expect(determinant(gram_matrix(Family::SP, 2)) == 0, "SP(2) gram regular");
  c.expect(determinant(gram_matrix(Family::SP, 3)) == 0, "SP(3) gram regular");
  c.expect(determinant(gram_matrix(Family::SWNP, 4)) == 0, "SWNP(4) gram regular");
  return c;
}

Check axiom_suites_pass() {
  Check c;
  for (const char* s : {"duplicial", "dendriform-coalgebra", "dupdend-compat", "codendriform", "dendriform-hopf",
                        "bidendriform", "half-product-adjunction", "theta-dupdend"}) {
    AxiomReport r = check_axioms(s, 4);
    c.expect(r.tuples_checked > 0, std::string(s) + " checked nothing");
    c.expect(r.pass(), std::string(s) + ": " + (r.violations.empty() ? "" : r.violations[0].axiom));
  }
  return c;
}

Check primitive_intersection() {
  Check c;
  const std::size_t dims[] = {1, 0, 0, 0};
  for (int n = 1; n <= 4; ++n) c.expect(prim_tot_basis(n).size() == dims[n - 1], "dimension in degree " + std::to_string(n));
  return c;
}

Check decoration_table() {
  Check c;
  auto row = [&](Family f, std::vector<long> expected) {
    RatSeries d = decoration_counts(f, static_cast<int>(expected.size()));
    for (std::size_t n = 0; n < expected.size(); ++n)
      c.expect(d[static_cast<int>(n) + 1] == expected[n], "row " + std::string(family_name(f)));
  };
  row(Family::SP, {1, 1, 10, 148, 3336});
  row(Family::OF, {1, 1, 7, 66, 786});
  row(Family::HOF, {1, 0, 1, 6, 39});
  row(Family::SWNP, {1, 0, 1, 4, 17});
  row(Family::SPF, {1, 0, 0, 0});
  return c;
}

Check congruence() {
  Check c;
  for (int n = 1; n <= 4; ++n)
    for (Family f : {Family::PP, Family::SPF}) {
      IntMatrix a = gram_matrix(f, n);
      c.expect(check_certificate(a, congruence_diagonalize(a)), "certificate for " + std::string(family_name(f)));
    }
  std::mt19937 rng(42);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a = testing_support::random_unimodular(rng);
    c.expect(check_certificate(a, congruence_diagonalize(a)), "random certificate");
  }
  return c;
}

Check isometry() {
  Check c;
  for (int n = 1; n <= 4; ++n) {
    IntMatrix a = gram_matrix(Family::PP, n), b = gram_matrix(Family::SPP, n);
    GaussMatrix s = build_isometry(a, b);
    c.expect(s.transpose() * a.cast<GaussRational>() * s == b.cast<GaussRational>(), "S^T A S != B");
  }
  c.expect(verify_graded_isometry(pp_to_spp_degree2(parse_gauss("-I"), parse_gauss("1/2+1/2*I")), 2).pass(),
           "degree-2 isometry (-I, 1/2+1/2*I) fails");
  IsometryReport flipped = verify_graded_isometry(pp_to_spp_degree2(parse_gauss("I"), parse_gauss("1/2+1/2*I")), 2);
  c.expect(flipped.failures.size() == 3, "alpha = I, beta = 1/2+1/2*I: expected exactly 3 failures");
  return c;
}

Check bijections() {
  Check c;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& s : all_permutations(n)) c.expect(psi(phi(s)) == s, "psi o phi != id");
    for (const auto& p : enumerate(Family::SPP, n)) c.expect(phi_special(psi(p)) == p, "phi o psi != id");
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_plane(Family::PP, n)) {
      Permutation s = psi(p);
      std::vector<int> rev;
      for (int i = 1; i <= n; ++i) rev.push_back(n + 1 - s(i));
      c.expect(psi(iota(p)) == Permutation(rev), "reversal identity");
      c.expect(psi(DoublePoset(p.first(), p.second().inverse())) == s.inverse(), "inverse identity");
    }
  return c;
}

Check intersection() {
  Check c;
  for (int n = 0; n <= 5; ++n) {
    for (const auto& p : enumerate_plane(Family::PP, n))
      if (p.is_special()) c.expect(p.first().pairs().empty(), "plane poset with total <=_r is not an antichain");
    for (const auto& p : enumerate(Family::SP, n))
      c.expect(p.to_double().is_plane() == p.order().pairs().empty(), "special plane poset is not an antichain");
  }
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"gram table of SP(2)", gram_table},
      {"family counts", counting},
      {"theta templates and weak-order intervals", theta_examples},
      {"theta is an isometry", theta_isometry},
      {"upsilon", upsilon_checks},
      {"pairing kernels", kernel_checks},
      {"nondegeneracy", nondegeneracy},
      {"axiom suites through degree 4", axiom_suites_pass},
      {"primitive intersection dimensions", primitive_intersection},
      {"decoration table", decoration_table},
      {"unimodular congruence", congruence},
      {"isometries over Q(i)", isometry},
      {"plane bijections", bijections},
      {"plane and special intersection", intersection},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << index << " " << name;
    if (!c.ok) std::cout << " (" << c.why << ")";
    std::cout << std::endl;
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
