#include "dposet/codec.hpp"

#include <cctype>

namespace dposet {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) continue;
    // the empty-set sign is accepted for an empty pair list
    if (s.substr(i, 3) == "\xE2\x88\x85") {
      i += 2;
      continue;
    }
    out += s[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  if (s.empty() || s.size() > 4) throw std::invalid_argument("bad label");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad label '" + s + "'");
  return std::stoi(s);
}

// "1<2,2<3" or "1<2<3"
std::vector<std::pair<int, int>> parse_pairs(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  if (s.empty()) return out;
  for (auto& item : split(s, ',')) {
    auto chain = split(item, '<');
    if (chain.size() < 2) throw std::invalid_argument("bad relation '" + item + "'");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      out.emplace_back(parse_int(chain[i]), parse_int(chain[i + 1]));
  }
  return out;
}

struct Literal {
  std::string tag;
  int n = 0;
  std::vector<std::string> sections;
};

Literal split_literal(std::string_view text) {
  std::string s = strip(text);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw std::invalid_argument("bad poset literal '" + std::string(text) + "'");
  Literal lit;
  lit.tag = s.substr(0, open);
  std::string body = s.substr(open + 1, s.size() - open - 2);
  auto parts = split(body, ';');
  lit.n = parse_int(parts[0]);
  if (lit.n > kMaxVertices) throw std::invalid_argument("poset too large");
  lit.sections.assign(parts.begin() + 1, parts.end());
  return lit;
}

// "h:1<2" -> pairs, checking the section name
std::vector<std::pair<int, int>> named_section(const std::string& section, std::string_view name) {
  auto colon = section.find(':');
  if (colon == std::string::npos || section.substr(0, colon) != name)
    throw std::invalid_argument("expected section '" + std::string(name) + ":'");
  return parse_pairs(section.substr(colon + 1));
}

std::string pairs_text(const std::vector<std::pair<int, int>>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pairs[i].first + 1) + "<" + std::to_string(pairs[i].second + 1);
  }
  return out;
}

}  // namespace

DoublePoset parse_poset(std::string_view text) {
  Literal lit = split_literal(text);
  if (lit.tag == "SP") {
    if (lit.sections.size() > 1) throw std::invalid_argument("SP literal takes one pair list");
    auto pairs = lit.sections.empty() ? std::vector<std::pair<int, int>>{} : parse_pairs(lit.sections[0]);
    return SpecialPoset::from_pairs(lit.n, pairs).to_double();
  }
  if (lit.tag == "PP" || lit.tag == "DP") {
    bool plane = lit.tag == "PP";
    if (lit.sections.size() != 2) throw std::invalid_argument(lit.tag + " literal takes two pair lists");
    auto p1 = named_section(lit.sections[0], plane ? "h" : "o1");
    auto p2 = named_section(lit.sections[1], plane ? "r" : "o2");
    DoublePoset p = DoublePoset::from_pairs(lit.n, p1, p2);
    if (plane && !p.is_plane()) throw std::invalid_argument("PP literal is not a plane poset");
    return p;
  }
  throw std::invalid_argument("unknown poset tag '" + lit.tag + "'");
}

SpecialPoset parse_special(std::string_view text) {
  std::string s = strip(text);
  if (s.rfind("SP(", 0) != 0) throw std::invalid_argument("expected an SP literal");
  return as_special(parse_poset(s));
}

Permutation parse_permutation(std::string_view text) {
  std::string s = strip(text);
  std::vector<int> w;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("bad permutation literal");
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty())
      for (auto& item : split(body, ',')) w.push_back(parse_int(item));
  } else {
    if (s.empty()) throw std::invalid_argument("empty permutation literal");
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') throw std::invalid_argument("bad permutation literal");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::string format(const SpecialPoset& p) {
  return "SP(" + std::to_string(p.size()) + ";" + pairs_text(p.order().covers()) + ")";
}

std::string format(const DoublePoset& p) {
  int n = p.size();
  if (p.second() == StrictOrder::total(n)) return format(as_special(p));
  if (p.is_plane())
    return "PP(" + std::to_string(n) + ";h:" + pairs_text(p.first().covers()) + ";r:" +
           pairs_text(p.second().covers()) + ")";
  return "DP(" + std::to_string(n) + ";o1:" + pairs_text(p.first().covers()) + ";o2:" +
         pairs_text(p.second().covers()) + ")";
}

std::string format(const Permutation& p) {
  if (p.size() == 0 || p.size() > 9) {
    std::string out = "[";
    for (int i = 1; i <= p.size(); ++i) {
      if (i > 1) out += ',';
      out += std::to_string(p(i));
    }
    return out + "]";
  }
  std::string out;
  for (int i = 1; i <= p.size(); ++i) out += char('0' + p(i));
  return out;
}

BasisKind basis_kind(std::string_view literal) {
  std::string s = strip(literal);
  if (s.rfind("SP(", 0) == 0) return BasisKind::Special;
  if (s.rfind("PP(", 0) == 0 || s.rfind("DP(", 0) == 0) return BasisKind::Double;
  if (!s.empty() && (s[0] == '[' || std::isdigit(static_cast<unsigned char>(s[0])))) return BasisKind::Permutation;
  throw std::invalid_argument("unrecognised basis literal '" + std::string(literal) + "'");
}

std::vector<RawTerm> split_lincomb(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty linear combination");
  std::vector<RawTerm> out;
  if (s == "0") return out;
  std::vector<std::string> pieces;
  std::vector<int> signs;
  int depth = 0;
  std::string cur;
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (!cur.empty()) {
        pieces.push_back(cur);
        signs.push_back(sign);
        cur.clear();
        sign = 1;
      }
      if (c == '-') sign = -sign;
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets");
  if (cur.empty()) throw std::invalid_argument("dangling sign");
  pieces.push_back(cur);
  signs.push_back(sign);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string& p = pieces[i];
    // the coefficient is everything before the first '*' at bracket depth 0
    std::size_t star = std::string::npos;
    int d = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] == '(' || p[j] == '[') ++d;
      if (p[j] == ')' || p[j] == ']') --d;
      if (d == 0 && p[j] == '*') {
        star = j;
        break;
      }
    }
    RawTerm t;
    if (star == std::string::npos) {
      t.coeff = GaussRational(signs[i]);
      t.basis = p;
    } else {
      t.coeff = GaussRational(signs[i]) * parse_gauss(p.substr(0, star));
      t.basis = p.substr(star + 1);
    }
    basis_kind(t.basis);
    out.push_back(std::move(t));
  }
  return out;
}

BasisKind lincomb_kind(std::string_view text) {
  auto terms = split_lincomb(text);
  if (terms.empty()) throw std::invalid_argument("cannot infer the basis of 0");
  BasisKind k = basis_kind(terms[0].basis);
  for (auto& t : terms)
    if (basis_kind(t.basis) != k) throw std::invalid_argument("mixed basis kinds");
  return k;
}

std::string format_coeff_prefix(const Rational& c, bool leading) {
  std::string out;
  Rational a = abs(c);
  if (sgn(c) < 0)
    out = leading ? "-" : " - ";
  else if (!leading)
    out = " + ";
  if (a != 1) out += a.get_str() + "*";
  return out;
}

std::string format_coeff_prefix(const GaussRational& c, bool leading) {
  if (c.is_real()) return format_coeff_prefix(c.re(), leading);
  return std::string(leading ? "" : " + ") + "(" + to_string(c) + ")*";
}

}  // namespace dposet
