#include "afnorm/laurent.hpp"

namespace afnorm {

std::vector<std::string> default_var_names(int rank) {
  if (rank == 1) return {"t"};
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] != 1) out += '^' + m[i].str();
  }
  return out;
}

namespace {

// Terms print lex-descending. Coefficients that are plain (rational)
// numbers carry their sign into the separator; genuinely cyclotomic
// coefficients are parenthesized and joined with '+'.
struct TermText {
  bool negative = false;
  std::string body;
};

TermText format_term(const Integer& c, const std::string& mono) {
  TermText t;
  t.negative = c < 0;
  Integer a = abs_int(c);
  if (mono.empty()) return {t.negative, a.str()};
  if (a == 1) return {t.negative, mono};
  return {t.negative, a.str() + "*" + mono};
}

TermText format_term(const Cyclotomic& c, const std::string& mono) {
  if (c.is_rational()) {
    Rational r = c.rational_part();
    bool neg = r < 0;
    Rational a = abs_rat(r);
    if (mono.empty()) return {neg, a.str()};
    if (a == 1) return {neg, mono};
    return {neg, a.str() + "*" + mono};
  }
  std::string body = "(" + c.to_string() + ")";
  if (!mono.empty()) body += "*" + mono;
  return {false, body};
}

template <class C>
std::string render(const LaurentPoly<C>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    TermText t = format_term(it->second, monomial_to_string(it->first, names));
    if (out.empty()) {
      if (t.negative) out += '-';
    } else {
      out += t.negative ? " - " : " + ";
    }
    out += t.body;
  }
  return out;
}

}  // namespace

std::string laurent_to_string(const IntLaurent& p, const std::vector<std::string>& names) {
  return render(p, names);
}

std::string laurent_to_string(const CycLaurent& p, const std::vector<std::string>& names) {
  return render(p, names);
}

}  // namespace afnorm
