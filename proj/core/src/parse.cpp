// Recursive-descent parser for the polynomial grammar:
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := coeff | coeff '*' monomial | monomial
//   coeff      := int ['/' uint] ['*' sqrt ['/' uint]] | sqrt ['/' uint]
//   sqrt       := 'sqrt(' ['-'] int ')'
//   monomial   := var ['^' uint] ('*' var ['^' uint])*
#include <algorithm>
#include <cctype>
#include <set>

#include "stubborn/errors.hpp"
#include "stubborn/polynomial.hpp"

namespace stubborn {
namespace {

struct RawTerm {
  Coefficient coeff = 1;
  std::map<std::string, unsigned> powers;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::vector<RawTerm> expression() {
    std::vector<RawTerm> out;
    skip();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++i_;
    }
    for (;;) {
      RawTerm t = term();
      if (neg) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip();
      if (eof()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      neg = c == '-';
      ++i_;
    }
    return out;
  }

 private:
  bool eof() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError("syntax error: " + msg, i_); }

  bool at_sqrt() {
    skip();
    return s_.compare(i_, 5, "sqrt(") == 0;
  }
  bool at_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) && !at_sqrt();
  }

  mpz_class uint_literal() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    return mpz_class(s_.substr(start, i_ - start));
  }

  Coefficient sqrt_literal() {
    i_ += 5;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    }
    mpz_class n = uint_literal();
    if (peek() != ')') fail("expected ')'");
    ++i_;
    if (!n.fits_slong_p()) fail("radicand too large");
    long v = n.get_si();
    return Coefficient::sqrt_of(neg ? -v : v);
  }

  mpz_class denominator() {
    ++i_;  // '/'
    mpz_class d = uint_literal();
    if (d == 0) fail("zero denominator");
    return d;
  }

  // Parses a coefficient, then optionally '*' monomial.
  RawTerm term() {
    RawTerm t;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpq_class q(uint_literal());
      if (peek() == '/') q /= mpq_class(denominator());
      t.coeff = Coefficient(q);
      if (peek() == '*') {
        std::size_t save = i_;
        ++i_;
        if (at_sqrt()) {
          t.coeff *= sqrt_literal();
          if (peek() == '/') t.coeff /= Coefficient(mpq_class(denominator()));
        } else {
          i_ = save;
        }
      }
    } else if (at_sqrt()) {
      t.coeff = sqrt_literal();
      if (peek() == '/') t.coeff /= Coefficient(mpq_class(denominator()));
    } else if (at_identifier()) {
      monomial(t);
      return t;
    } else {
      fail("expected coefficient or variable");
    }
    if (peek() == '*') {
      ++i_;
      if (!at_identifier()) fail("expected variable after '*'");
      monomial(t);
    }
    return t;
  }

  void monomial(RawTerm& t) {
    for (;;) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string name = s_.substr(start, i_ - start);
      unsigned e = 1;
      if (peek() == '^') {
        ++i_;
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
          throw ParseError("non-integer exponent", i_);
        mpz_class v = uint_literal();
        if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == '/'))
          throw ParseError("non-integer exponent", i_);
        if (!v.fits_uint_p()) throw ParseError("exponent too large", i_);
        e = static_cast<unsigned>(v.get_ui());
      }
      t.powers[name] += e;
      positions_.emplace(name, start);
      std::size_t save = i_;
      if (peek() == '*') {
        ++i_;
        if (at_identifier()) continue;
        i_ = save;
        fail("expected variable after '*'");
      }
      return;
    }
  }

 public:
  std::map<std::string, std::size_t> positions_;

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

Polynomial build(const std::vector<RawTerm>& raw, const std::vector<std::string>& vars) {
  Polynomial p(vars);
  for (const auto& t : raw) {
    Exponent e(vars.size(), 0);
    for (const auto& [name, pw] : t.powers) {
      auto it = std::find(vars.begin(), vars.end(), name);
      e[it - vars.begin()] += pw;
    }
    p.add_term(e, t.coeff);
  }
  return p;
}

}  // namespace

Polynomial parse(const std::string& text, const std::vector<std::string>& vars) {
  Parser parser(text);
  auto raw = parser.expression();
  for (const auto& [name, pos] : parser.positions_)
    if (std::find(vars.begin(), vars.end(), name) == vars.end())
      throw ParseError("unknown variable '" + name + "'", pos);
  return build(raw, vars);
}

Polynomial parse(const std::string& text) {
  Parser parser(text);
  auto raw = parser.expression();
  std::vector<std::string> vars;
  for (const auto& [name, pos] : parser.positions_) vars.push_back(name);
  std::sort(vars.begin(), vars.end(), natural_less);
  return build(raw, vars);
}

Coefficient parse_coefficient(const std::string& text) {
  Polynomial p = parse(text, {});
  if (p.is_zero()) return Coefficient();
  return p.terms().begin()->second;
}

}  // namespace stubborn
