#include "drinfeld/io.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace drinfeld {

namespace {

bool needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('*') != std::string::npos;
}

std::string wrap(const std::string& s) {
  return needs_parens(s) ? "(" + s + ")" : s;
}

std::string mono_str(const std::string& var, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// one term "coeff*var^e" with the usual elisions
std::string term_str(const std::string& coeff, bool coeff_is_one,
                     const std::string& var, unsigned e) {
  if (e == 0) return coeff;
  const std::string m = mono_str(var, e);
  if (coeff_is_one) return m;
  return wrap(coeff) + "*" + m;
}

// ---------- parsing ----------

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument(std::string("expected '") + c + "' in \"" +
                                  std::string(s) + "\"");
  }
  unsigned long long number() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("expected a number in \"" + std::string(s) + "\"");
    unsigned long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<unsigned long long>(s[pos] - '0');
      ++pos;
    }
    return v;
  }
};

// split at top-level occurrences of sep (depth counted on parentheses)
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  // peel parens that enclose the whole string
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool whole = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') {
        --depth;
        if (depth == 0 && i + 1 != s.size()) {
          whole = false;
          break;
        }
      }
    }
    if (!whole) break;
    s.remove_prefix(1);
    s.remove_suffix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  }
  return s;
}

// "2", "w", "w^2", "3*w^2" and "+"-combinations thereof
FqElem parse_fq_elem(const FqPtr& f, std::string_view text) {
  text = strip(text);
  if (text.empty()) throw std::invalid_argument("empty field element");
  FqElem acc = 0;
  for (std::string_view part : split_top(text, '+')) {
    Cursor c{strip(part)};
    unsigned long long coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = c.number();
      have_coef = true;
      if (!c.done()) c.expect('*');
    }
    unsigned wexp = 0;
    if (c.peek() == 'w') {
      c.expect('w');
      wexp = c.eat('^') ? static_cast<unsigned>(c.number()) : 1;
    } else if (!have_coef) {
      throw std::invalid_argument("bad field element \"" + std::string(part) + "\"");
    }
    if (!c.done())
      throw std::invalid_argument("trailing input in field element \"" +
                                  std::string(part) + "\"");
    if (wexp >= f->l())
      throw std::invalid_argument("generator exponent exceeds field degree");
    // coef * w^wexp as a code: digit at position wexp
    unsigned long long place = 1;
    for (unsigned i = 0; i < wexp; ++i) place *= f->p();
    acc = f->add(acc, static_cast<FqElem>(coef % f->p() * place));
  }
  return acc;
}

} // namespace

std::string to_string(const Poly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int e = a.deg(); e >= 0; --e) {
    const FqElem c = a.coeff(static_cast<unsigned>(e));
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += term_str(a.field()->to_string(c), c == 1, var, static_cast<unsigned>(e));
  }
  return out;
}

std::string to_string(const RatFunc& x, const std::string& var) {
  const std::string n = to_string(x.num(), var);
  if (x.is_polynomial()) return n;
  const std::string d = to_string(x.den(), var);
  return wrap(n) + "/" + (d.find('+') != std::string::npos ||
                                  d.find('*') != std::string::npos
                              ? "(" + d + ")"
                              : d);
}

std::string to_string(const USeries& s, const std::string& var) {
  std::string out;
  for (unsigned e = 0; e <= s.prec(); ++e) {
    if (s.coeff(e).is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = to_string(s.coeff(e));
    out += term_str(c, s.coeff(e).is_one(), var, e);
  }
  if (!out.empty()) out += " + ";
  out += "O(" + var + "^" + std::to_string(s.prec() + 1) + ")";
  return out;
}

std::string kpoly_to_string(const std::vector<RatFunc>& dense,
                            const std::string& var) {
  std::string out;
  for (std::size_t e = dense.size(); e-- > 0;) {
    if (dense[e].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += term_str(to_string(dense[e]), dense[e].is_one(), var,
                    static_cast<unsigned>(e));
  }
  return out.empty() ? "0" : out;
}

Poly parse_poly(const FqPtr& f, std::string_view text, const std::string& var) {
  text = strip(text);
  if (text == "0") return Poly::zero(f);
  if (var.size() != 1) throw std::invalid_argument("variable must be one letter");
  const char v = var[0];
  Poly acc = Poly::zero(f);
  for (std::string_view part : split_top(text, '+')) {
    part = strip(part);
    if (part.empty()) throw std::invalid_argument("empty term");
    // locate the monomial: a top-level 'v' outside parentheses
    int depth = 0;
    std::size_t vpos = std::string_view::npos;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i] == '(') ++depth;
      else if (part[i] == ')') --depth;
      else if (part[i] == v && depth == 0) {
        vpos = i;
        break;
      }
    }
    FqElem coeff = 1;
    unsigned e = 0;
    if (vpos == std::string_view::npos) {
      coeff = parse_fq_elem(f, part);
    } else {
      std::string_view before = part.substr(0, vpos);
      before = strip(before);
      if (!before.empty()) {
        if (before.back() != '*')
          throw std::invalid_argument("expected '*' before the variable in \"" +
                                      std::string(part) + "\"");
        before.remove_suffix(1);
        coeff = parse_fq_elem(f, before);
      }
      Cursor c{part.substr(vpos + 1)};
      e = 1;
      if (c.eat('^')) e = static_cast<unsigned>(c.number());
      if (!c.done())
        throw std::invalid_argument("trailing input in term \"" + std::string(part) + "\"");
    }
    acc = acc + Poly::monomial(f, e, 1).scaled(coeff);
  }
  return acc;
}

RatFunc parse_ratfunc(const FqPtr& f, std::string_view text, const std::string& var) {
  text = strip(text);
  const auto parts = split_top(text, '/');
  if (parts.size() == 1) return RatFunc(parse_poly(f, parts[0], var));
  if (parts.size() != 2)
    throw std::invalid_argument("more than one '/' in \"" + std::string(text) + "\"");
  return RatFunc(parse_poly(f, parts[0], var), parse_poly(f, parts[1], var));
}

std::string useries_to_json(const USeries& s, const std::string& var) {
  nlohmann::json j;
  j["var"] = var;
  j["prec"] = s.prec();
  j["coeffs"] = nlohmann::json::array();
  for (unsigned e = 0; e <= s.prec(); ++e)
    if (!s.coeff(e).is_zero())
      j["coeffs"].push_back({{"pow", e}, {"value", to_string(s.coeff(e))}});
  return j.dump();
}

USeries useries_from_json(const FqPtr& f, std::string_view json) {
  const auto j = nlohmann::json::parse(json);
  const unsigned prec = j.at("prec").get<unsigned>();
  USeries s(f, prec);
  for (const auto& entry : j.at("coeffs")) {
    const unsigned e = entry.at("pow").get<unsigned>();
    if (e > prec) throw std::invalid_argument("coefficient beyond precision");
    const RatFunc c = parse_ratfunc(f, entry.at("value").get<std::string>());
    s = s + USeries::monomial(f, e, c, prec);
  }
  return s;
}

std::string kpoly_to_json(const std::vector<RatFunc>& dense, const std::string& var) {
  nlohmann::json j;
  j["var"] = var;
  j["deg"] = dense.empty() ? 0 : dense.size() - 1;
  j["coeffs"] = nlohmann::json::array();
  for (std::size_t e = 0; e < dense.size(); ++e)
    if (!dense[e].is_zero())
      j["coeffs"].push_back({{"pow", e}, {"value", to_string(dense[e])}});
  return j.dump();
}

std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const USeries& s) { return os << to_string(s); }

} // namespace drinfeld
