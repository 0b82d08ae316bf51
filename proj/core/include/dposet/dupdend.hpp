#pragma once

#include "dposet/algebra.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dposet {

// ---- basis level

// split of the reduced coproduct by g_P (label n) outside / inside the ideal
std::pair<HSP2, HSP2> dendriform_coproducts(const SpecialPoset& p);
// split by s_P (label 1) outside / inside the ideal
std::pair<HSP2, HSP2> dendriform_coproducts_prime(const SpecialPoset& p);

// half-products on plane forests:
//   B+(F') < G = B+(F'G);   t F2 < G = t < (F2 G) + t > (F2 < G);   x > y = xy - x < y
const HSP& spf_prec_basis(const SpecialPoset& f, const SpecialPoset& g);
HSP spf_succ_basis(const SpecialPoset& f, const SpecialPoset& g);

// ---- linear extensions; all reject degree-0 terms

HSP sp_nwarrow(const HSP& x, const HSP& y);
std::pair<HSP2, HSP2> sp_dendriform_coproducts(const HSP& x);
// throws "support outside SPP"
std::pair<HSP2, HSP2> spp_dendriform_coproducts(const HSP& x);
// throw "support outside SPF"
HSP spf_prec(const HSP& x, const HSP& y);
HSP spf_succ(const HSP& x, const HSP& y);

// basis of Ker D'_prec and Ker D'_succ inside span(SPF(n))
std::vector<HSP> prim_tot_basis(int n);

// ---- axiom suites

struct Violation {
  std::string axiom;
  std::vector<std::string> args;  // operands as literals
  std::string lhs, rhs;
};

struct AxiomReport {
  std::string suite;
  int degree = 0;
  long tuples_checked = 0;
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

const std::vector<std::string>& axiom_suites();
// exhaustive over basis tuples of total degree <= max_degree; throws "unknown suite".
// A nonempty `tuple` (operand literals) restricts the run to that single tuple.
AxiomReport check_axioms(std::string_view suite, int max_degree, const std::vector<std::string>& tuple = {});

}  // namespace dposet
