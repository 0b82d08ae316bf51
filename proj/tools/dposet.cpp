#include "dposet/algebra.hpp"
#include "dposet/codec.hpp"
#include "dposet/dupdend.hpp"
#include "dposet/fqsym.hpp"
#include "dposet/graded.hpp"
#include "dposet/linalg.hpp"
#include "dposet/morphisms.hpp"
#include "dposet/poset.hpp"
#include "dposet/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace dposet;
using nlohmann::ordered_json;

namespace {

constexpr int kVerificationFailed = 2;

// one result in three renderings
struct Output {
  ordered_json json = ordered_json::object();
  std::vector<std::string> text;
  std::vector<std::vector<std::string>> csv;
  int status = 0;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Output& out, const std::string& fmt) {
  if (fmt == "json") {
    std::cout << out.json.dump(2) << "\n";
  } else if (fmt == "csv") {
    for (const auto& row : out.csv) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_cell(row[i]);
      std::cout << "\n";
    }
  } else {
    for (const auto& line : out.text) std::cout << line << "\n";
  }
}

int max_degree_cap() {
  const char* env = std::getenv("DPOSET_MAX_DEGREE");
  if (!env || !*env) return 6;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw std::invalid_argument("DPOSET_MAX_DEGREE is not an integer");
  }
}

void check_degree(int n, const char* what = "degree") {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
  int cap = max_degree_cap();
  if (n > cap)
    throw std::invalid_argument(std::string(what) + " " + std::to_string(n) + " exceeds DPOSET_MAX_DEGREE=" +
                                std::to_string(cap));
}

Family family_arg(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family " + name);
  return *f;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

template <class M>
ordered_json matrix_json(const M& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
    rows.push_back(row);
  }
  return rows;
}

std::string cell(const Integer& z) { return z.get_str(); }
template <class T>
std::string cell(const T& x) {
  return to_string(x);
}

template <class M>
void matrix_rows(const M& m, Output& out) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    std::string line;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(cell(m(i, j)));
      line += (j ? " " : "") + row.back();
    }
    out.text.push_back(line);
    out.csv.push_back(row);
  }
}

IntMatrix parse_int_matrix(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix is not valid JSON");
  }
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  std::size_t n = j.size();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      if (!j[r][c].is_number_integer()) throw std::invalid_argument("matrix entries must be integers");
      m(r, c) = Integer(j[r][c].get<long>());
    }
  }
  return m;
}

// ---- linear combinations

template <class K, class C>
ordered_json terms_json(const LinComb<K, C>& x) {
  ordered_json a = ordered_json::array();
  for (const auto& [k, c] : x) a.push_back({{"coeff", to_string(c)}, {"basis", format(k)}});
  return a;
}

template <class K, class C>
ordered_json terms_json(const Tensor2<K, C>& x) {
  ordered_json a = ordered_json::array();
  for (const auto& [k, c] : x)
    a.push_back({{"coeff", to_string(c)}, {"basis", ordered_json::array({format(k.first), format(k.second)})}});
  return a;
}

template <class T>
void value_output(const T& x, Output& out) {
  out.json["result"] = format(x);
  out.json["terms"] = terms_json(x);
  out.text.push_back(format(x));
  out.csv.push_back({"coeff", "basis"});
  for (const auto& t : out.json["terms"]) {
    std::string basis = t["basis"].is_array() ? t["basis"][0].get<std::string>() + " (x) " +
                                                      t["basis"][1].get<std::string>()
                                                : t["basis"].get<std::string>();
    out.csv.push_back({t["coeff"].get<std::string>(), basis});
  }
}

template <class F>
FQ2 fq_linear2(const FQ& x, F&& f) {
  FQ2 out;
  for (const auto& [s, c] : x) {
    FQ2 part = f(s);
    part *= c;
    out += part;
  }
  return out;
}

Output run_op(const std::string& name, const std::vector<std::string>& args, bool primed, bool reduced) {
  bool binary = name == "product" || name == "nwarrow" || name == "prec" || name == "succ";
  if (args.size() != (binary ? 2u : 1u))
    throw std::invalid_argument("op " + name + " takes " + (binary ? "two operands" : "one operand"));
  BasisKind kind = lincomb_kind(args[0]);
  if (binary && lincomb_kind(args[1]) != kind) throw std::invalid_argument("mixed basis kinds");
  Output out;
  out.json["op"] = name;
  out.json["args"] = args;
  auto unsupported = [&]() { return std::invalid_argument("op " + name + " is not defined on this basis"); };

  if (kind == BasisKind::Special) {
    HSP x = parse_lincomb<SpecialPoset>(args[0]);
    if (name == "product") return value_output(lc_product(x, parse_lincomb<SpecialPoset>(args[1])), out), out;
    if (name == "coproduct")
      return value_output(reduced ? lc_reduced_coproduct(x) : lc_coproduct(x), out), out;
    if (name == "nwarrow") return value_output(sp_nwarrow(x, parse_lincomb<SpecialPoset>(args[1])), out), out;
    if (name == "prec") return value_output(spf_prec(x, parse_lincomb<SpecialPoset>(args[1])), out), out;
    if (name == "succ") return value_output(spf_succ(x, parse_lincomb<SpecialPoset>(args[1])), out), out;
    auto halves = primed ? spp_dendriform_coproducts(x) : sp_dendriform_coproducts(x);
    return value_output(name == "delta-prec" ? halves.first : halves.second, out), out;
  }
  if (kind == BasisKind::Double) {
    if (primed) throw unsupported();
    HDP x = parse_lincomb<DoublePoset>(args[0]);
    if (name == "product") return value_output(lc_product(x, parse_lincomb<DoublePoset>(args[1])), out), out;
    if (name == "coproduct")
      return value_output(reduced ? lc_reduced_coproduct(x) : lc_coproduct(x), out), out;
    throw unsupported();
  }
  if (primed) throw unsupported();
  FQ x = parse_lincomb<Permutation>(args[0]);
  if (name == "product") return value_output(fq_product(x, parse_lincomb<Permutation>(args[1])), out), out;
  if (name == "coproduct")
    return value_output(fq_linear2(x, reduced ? fq_reduced_coproduct : fq_coproduct), out), out;
  if (name == "nwarrow") {
    FQ y = parse_lincomb<Permutation>(args[1]), r;
    for (const auto& [s, cs] : x)
      for (const auto& [t, ct] : y) {
        FQ part = fq_nwarrow(s, t);
        part *= Rational(cs * ct);
        r += part;
      }
    return value_output(r, out), out;
  }
  if (name == "delta-prec" || name == "delta-succ") {
    bool first = name == "delta-prec";
    auto r = fq_linear2(x, [&](const Permutation& s) {
      auto halves = fq_dendriform_coproducts(s);
      return first ? halves.first : halves.second;
    });
    return value_output(r, out), out;
  }
  throw unsupported();
}

Output run_pair(const std::string& a, const std::string& b) {
  BasisKind kind = lincomb_kind(a);
  if (lincomb_kind(b) != kind) throw std::invalid_argument("mixed basis kinds");
  Rational v;
  if (kind == BasisKind::Special)
    v = pairing(parse_lincomb<SpecialPoset>(a), parse_lincomb<SpecialPoset>(b));
  else if (kind == BasisKind::Double)
    v = pairing(parse_lincomb<DoublePoset>(a), parse_lincomb<DoublePoset>(b));
  else
    v = fq_pairing(parse_lincomb<Permutation>(a), parse_lincomb<Permutation>(b));
  Output out;
  out.json["args"] = {a, b};
  out.json["value"] = to_string(v);
  out.text.push_back(to_string(v));
  out.csv.push_back({"value"});
  out.csv.push_back({to_string(v)});
  return out;
}

std::vector<std::string> basis_strings(Family f, int n) {
  std::vector<std::string> out;
  if (is_plane_family(f)) {
    for (const auto& p : enumerate_plane(f, n)) out.push_back(format(p));
  } else {
    for (const auto& p : enumerate(f, n)) out.push_back(format(p));
  }
  return out;
}

Output run_enumerate(const std::string& fam, int n) {
  check_degree(n);
  Family f = family_arg(fam);
  auto basis = basis_strings(f, n);
  Output out;
  out.json["family"] = std::string(family_name(f));
  out.json["degree"] = n;
  out.json["count"] = basis.size();
  out.json["posets"] = basis;
  out.text = basis;
  out.csv.push_back({"poset"});
  for (const auto& b : basis) out.csv.push_back({b});
  return out;
}

Output run_classify(const std::string& literal) {
  DoublePoset p = canonical_form(parse_poset(literal));
  Output out;
  std::vector<std::string> names;
  for (Family f : classify(p)) names.emplace_back(family_name(f));
  out.json["poset"] = format(p);
  out.json["families"] = names;
  out.text = names;
  out.csv.push_back({"family"});
  for (const auto& n : names) out.csv.push_back({n});
  return out;
}

Output run_gram(const std::string& fam, int n) {
  check_degree(n);
  Family f = family_arg(fam);
  IntMatrix g = gram_matrix(f, n);
  Output out;
  out.json["family"] = std::string(family_name(f));
  out.json["degree"] = n;
  out.json["basis"] = basis_strings(f, n);
  out.json["matrix"] = matrix_json(g);
  matrix_rows(g, out);
  return out;
}

Output run_kernel(const std::string& fam, int n) {
  check_degree(n);
  Family f = family_arg(fam);
  auto ker = pairing_kernel_basis(f, n);
  Output out;
  std::vector<std::string> vs;
  for (const auto& v : ker) vs.push_back(format(v));
  out.json["family"] = std::string(family_name(f));
  out.json["degree"] = n;
  out.json["dimension"] = ker.size();
  out.json["basis"] = vs;
  out.text = vs;
  out.csv.push_back({"vector"});
  for (const auto& v : vs) out.csv.push_back({v});
  return out;
}

Output run_theta(const std::string& x) {
  Output out;
  out.json["input"] = x;
  value_output(theta(parse_lincomb<SpecialPoset>(x)), out);
  return out;
}

Output run_upsilon(const std::string& x, const std::string& method) {
  HSP in = parse_lincomb<SpecialPoset>(x);
  Output out;
  out.json["input"] = x;
  out.json["method"] = method;
  if (method == "rewrite")
    value_output(rewrite_exhaustively(in, [](const std::vector<RewriteSite>&) { return std::size_t{0}; }), out);
  else
    value_output(upsilon(in), out);
  return out;
}

Output single_value(const std::string& input, const std::string& result) {
  Output out;
  out.json["input"] = input;
  out.json["result"] = result;
  out.text.push_back(result);
  out.csv.push_back({"input", "result"});
  out.csv.push_back({input, result});
  return out;
}

Output run_bruhat(const std::string& literal) {
  SpecialPoset p = parse_special(literal);
  bool holds = bruhat_interval_check(p);
  Permutation top = psi(p).inverse();
  Output out;
  out.json["poset"] = format(p);
  out.json["top"] = format(top);
  out.json["holds"] = holds;
  out.text.push_back(std::string(holds ? "holds" : "fails") + " " + format(top));
  out.csv.push_back({"poset", "top", "holds"});
  out.csv.push_back({format(p), format(top), holds ? "true" : "false"});
  if (!holds) {
    out.text.push_back("# counterexample: dposet theta " + shell_quote(format(p)));
    out.status = kVerificationFailed;
  }
  return out;
}

IntMatrix matrix_source(const std::string& matrix, const std::string& fam, int n) {
  if (!matrix.empty()) return parse_int_matrix(matrix);
  if (fam.empty()) throw std::invalid_argument("give --matrix or --family with --degree");
  check_degree(n);
  return gram_matrix(family_arg(fam), n);
}

Output run_diagonalize(const std::string& matrix, const std::string& fam, int n) {
  IntMatrix a = matrix_source(matrix, fam, n);
  CongruenceCertificate cert = congruence_diagonalize(a);
  Output out;
  std::vector<std::string> blocks;
  for (BlockKind b : cert.blocks) blocks.emplace_back(block_name(b));
  out.json["P"] = matrix_json(cert.transform);
  out.json["B"] = matrix_json(cert.block_form);
  out.json["blocks"] = blocks;
  std::string line = "blocks:";
  for (const auto& b : blocks) line += " " + b;
  out.text.push_back(line);
  out.text.push_back("P:");
  Output p, b;
  matrix_rows(cert.transform, p);
  matrix_rows(cert.block_form, b);
  out.text.insert(out.text.end(), p.text.begin(), p.text.end());
  out.text.push_back("B:");
  out.text.insert(out.text.end(), b.text.begin(), b.text.end());
  out.csv = p.csv;
  return out;
}

Output run_isometry_build(const std::string& a_text, const std::string& b_text, const std::string& src,
                          const std::string& dst, int n) {
  IntMatrix a = matrix_source(a_text, src, n), b = matrix_source(b_text, dst, n);
  GaussMatrix s = build_isometry(a, b);
  Output out;
  out.json["S"] = matrix_json(s);
  matrix_rows(s, out);
  return out;
}

Output run_isometry_verify(const std::string& alpha, const std::string& beta, int family3, const std::string& x,
                           int max_degree) {
  if (max_degree < 1 || max_degree > 3) throw std::invalid_argument("max degree must be 1, 2 or 3");
  if (max_degree == 3 && family3 == 0) throw std::invalid_argument("degree 3 needs --degree3-family");
  GradedMap phi = pp_to_spp_degree2(parse_gauss(alpha), parse_gauss(beta));
  if (family3) add_pp_to_spp_degree3(phi, family3, parse_gauss(x));
  IsometryReport r = verify_graded_isometry(phi, max_degree);
  Output out;
  out.json["alpha"] = alpha;
  out.json["beta"] = beta;
  out.json["max_degree"] = max_degree;
  out.json["pass"] = r.pass();
  out.json["failures"] = r.failures;
  out.text.push_back(r.pass() ? "pass" : "FAIL " + std::to_string(r.failures.size()) + " checks");
  out.csv.push_back({"failure"});
  for (const auto& f : r.failures) {
    out.text.push_back("# " + f);
    out.csv.push_back({f});
  }
  if (!r.pass()) {
    std::string cmd = "dposet isometry verify --alpha " + shell_quote(alpha) + " --beta " + shell_quote(beta) +
                      " --max-degree " + std::to_string(max_degree);
    if (family3) cmd += " --degree3-family " + std::to_string(family3) + " --x " + shell_quote(x);
    out.text.push_back(cmd);
    out.status = kVerificationFailed;
  }
  return out;
}

Output run_decorations(const std::string& fam, int order) {
  check_degree(order, "order");
  Family f = family_arg(fam);
  RatSeries p = poincare_series(f, order), d = decoration_series(p);
  Output out;
  std::vector<std::string> pc, dc;
  for (const auto& c : p.coeffs()) pc.push_back(to_string(c));
  for (const auto& c : d.coeffs()) dc.push_back(to_string(c));
  out.json["family"] = std::string(family_name(f));
  out.json["order"] = order;
  out.json["poincare"] = pc;
  out.json["decorations"] = dc;
  out.text.push_back("poincare: " + to_string(p));
  out.text.push_back("decorations: " + to_string(d));
  out.csv.push_back({"n", "poincare", "decorations"});
  for (int n = 0; n <= order; ++n) out.csv.push_back({std::to_string(n), pc[n], dc[n]});
  return out;
}

ordered_json report_json(const AxiomReport& r) {
  ordered_json v = ordered_json::array();
  for (const auto& x : r.violations)
    v.push_back({{"axiom", x.axiom}, {"args", x.args}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return {{"suite", r.suite}, {"degree", r.degree}, {"tuples_checked", r.tuples_checked},
          {"pass", r.pass()}, {"violations", v}};
}

Output run_verify(const std::string& suite, int max_degree, const std::vector<std::string>& tuple) {
  check_degree(max_degree, "max degree");
  std::vector<std::string> suites;
  if (suite == "all")
    suites = axiom_suites();
  else
    suites.push_back(suite);
  // suites run concurrently; reports are collected in suite order
  std::vector<std::future<AxiomReport>> jobs;
  for (const auto& s : suites)
    jobs.push_back(std::async(std::launch::async, [&, s] { return check_axioms(s, max_degree, tuple); }));
  Output out;
  out.json["reports"] = ordered_json::array();
  out.csv.push_back({"suite", "degree", "tuples_checked", "violations"});
  for (auto& job : jobs) {
    AxiomReport r = job.get();
    out.json["reports"].push_back(report_json(r));
    out.csv.push_back({r.suite, std::to_string(r.degree), std::to_string(r.tuples_checked),
                       std::to_string(r.violations.size())});
    out.text.push_back(r.suite + " degree " + std::to_string(r.degree) + " tuples " +
                       std::to_string(r.tuples_checked) + ": " + (r.pass() ? "pass" : "FAIL"));
    for (const auto& v : r.violations) {
      out.text.push_back("# " + v.axiom + ": " + v.lhs + " != " + v.rhs);
      std::string cmd = "dposet verify --suite " + r.suite + " --max-degree " + std::to_string(max_degree);
      for (const auto& a : v.args) cmd += " --tuple " + shell_quote(a);
      out.text.push_back(cmd);
    }
    if (!r.pass()) out.status = kVerificationFailed;
  }
  out.json["pass"] = out.status == 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with double posets, special posets and permutations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string fmt = "text";
  app.add_option("--format", fmt, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  std::optional<Output> result;
  auto bind = [&](CLI::App* sub, auto fn) { sub->callback([&, fn] { result = fn(); }); };

  std::string fam, literal, literal2, matrix, method = "theta";
  int degree = 0;

  auto* en = app.add_subcommand("enumerate", "list a family in canonical order");
  en->add_option("--family", fam)->required();
  en->add_option("--degree", degree)->required();
  bind(en, [&] { return run_enumerate(fam, degree); });

  auto* cl = app.add_subcommand("classify", "families containing a poset");
  cl->add_option("poset", literal)->required();
  bind(cl, [&] { return run_classify(literal); });

  auto* op = app.add_subcommand("op", "products and coproducts");
  op->require_subcommand(1);
  std::vector<std::string> operands;
  bool primed = false, reduced = false;
  for (const char* name : {"product", "coproduct", "nwarrow", "prec", "succ", "delta-prec", "delta-succ"}) {
    auto* s = op->add_subcommand(name);
    s->add_option("operands", operands)->required();
    s->add_flag("--reduced", reduced, "reduced coproduct");
    s->add_flag("--primed", primed, "split by the minimal label (plane posets only)");
    std::string n = name;
    bind(s, [&, n] { return run_op(n, operands, primed, reduced); });
  }

  auto* pr = app.add_subcommand("pair", "Hopf pairing of two combinations");
  pr->add_option("x", literal)->required();
  pr->add_option("y", literal2)->required();
  bind(pr, [&] { return run_pair(literal, literal2); });

  auto* gr = app.add_subcommand("gram", "Gram matrix of the pairing on a family");
  gr->add_option("--family", fam)->required();
  gr->add_option("--degree", degree)->required();
  bind(gr, [&] { return run_gram(fam, degree); });

  auto* ke = app.add_subcommand("kernel", "kernel of the pairing on a family");
  ke->add_option("--family", fam)->required();
  ke->add_option("--degree", degree)->required();
  bind(ke, [&] { return run_kernel(fam, degree); });

  auto* th = app.add_subcommand("theta", "sum of linear extensions");
  th->add_option("x", literal)->required();
  bind(th, [&] { return run_theta(literal); });

  auto* up = app.add_subcommand("upsilon", "projection onto heap-ordered forests");
  up->add_option("x", literal)->required();
  up->add_option("--method", method)->check(CLI::IsMember({"theta", "rewrite"}));
  bind(up, [&] { return run_upsilon(literal, method); });

  bool special = false;
  auto* ph = app.add_subcommand("phi", "plane poset of a permutation");
  ph->add_option("permutation", literal)->required();
  ph->add_flag("--special", special, "print the special plane poset instead");
  bind(ph, [&] {
    Permutation s = parse_permutation(literal);
    return single_value(format(s), special ? format(phi_special(s)) : format(canonical_form(phi(s))));
  });

  auto* ps = app.add_subcommand("psi", "permutation of a plane poset");
  ps->add_option("poset", literal)->required();
  bind(ps, [&] {
    Permutation s = basis_kind(literal) == BasisKind::Special ? psi(parse_special(literal)) : psi(parse_poset(literal));
    return single_value(literal, format(s));
  });

  auto* bi = app.add_subcommand("bruhat-interval", "linear extensions as a weak-order interval");
  bi->add_option("poset", literal)->required();
  bind(bi, [&] { return run_bruhat(literal); });

  auto* di = app.add_subcommand("diagonalize", "unimodular congruence to block form");
  di->add_option("--matrix", matrix, "JSON array of integer rows");
  di->add_option("--family", fam);
  di->add_option("--degree", degree);
  bind(di, [&] { return run_diagonalize(matrix, fam, degree); });

  auto* iso = app.add_subcommand("isometry", "isometries between pairings");
  iso->require_subcommand(1);
  std::string a_text, b_text, src, dst;
  auto* ib = iso->add_subcommand("build", "S over Q(i) with S^T A S = B");
  ib->add_option("--a", a_text, "JSON matrix");
  ib->add_option("--b", b_text, "JSON matrix");
  ib->add_option("--source", src);
  ib->add_option("--target", dst);
  ib->add_option("--degree", degree);
  bind(ib, [&] { return run_isometry_build(a_text, b_text, src, dst, degree); });

  std::string alpha = "-I", beta = "1/2+1/2*I", xparam = "0";
  int family3 = 0, iso_max = 2;
  auto* iv = iso->add_subcommand("verify", "check the low-degree map from plane to special plane posets");
  iv->add_option("--alpha", alpha);
  iv->add_option("--beta", beta);
  iv->add_option("--degree3-family", family3)->check(CLI::Range(1, 4));
  iv->add_option("--x", xparam);
  iv->add_option("--max-degree", iso_max);
  bind(iv, [&] { return run_isometry_verify(alpha, beta, family3, xparam, iso_max); });

  int order = 0;
  auto* de = app.add_subcommand("decorations", "generator counts (F-1)/F^2");
  de->add_option("--family", fam)->required();
  de->add_option("--order", order)->required();
  bind(de, [&] { return run_decorations(fam, order); });

  std::string suite;
  int vmax = 4;
  std::vector<std::string> tuple;
  auto* ve = app.add_subcommand("verify", "exhaustive axiom checks");
  std::vector<std::string> suite_names = axiom_suites();
  suite_names.push_back("all");
  ve->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names));
  ve->add_option("--max-degree", vmax);
  ve->add_option("--tuple", tuple, "restrict to one operand tuple");
  bind(ve, [&] { return run_verify(suite, vmax, tuple); });

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* inner : sub->get_subcommands({})) inner->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (!result) return 1;
  emit(*result, fmt);
  return result->status;
}
