// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graal/engine.hpp"
#include "graal/ratfunc.hpp"

namespace graal {

// Parsed problem file: a polynomial ring over QQ, two ideals H <= J, an
// optional ideal I (possibly given as an intersection of two ideals), and
// optional seed / max_length settings.  CLI flags override the settings.
struct ProblemFile {
  std::vector<std::string> variables;
  Ring<RationalField> Q;
  std::vector<QPoly> H, J;

  bool has_I = false;
  bool I_is_intersection = false;
  std::vector<QPoly> I;                  // direct generators
  std::vector<QPoly> I_first, I_second;  // intersect([...], [...]) operands

  bool has_seed = false;
  std::uint64_t seed = 0;
  bool has_max_length = false;
  int max_length = -1;
};

namespace detail {

enum class TokKind { Ident, Int, Punct, End };

struct Token {
  TokKind kind;
  std::string text;
  int line, col;
};

inline std::vector<Token> problem_tokens(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0, n = text.size();
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  const std::string punct = ";,=+-*/^()[]";
  while (i < n) {
    char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') advance(text[i++]);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(c);
      ++i;
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                       text[i] == '_')) {
        id += text[i];
        advance(text[i++]);
      }
      out.push_back({TokKind::Ident, std::move(id), tl, tc});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i];
        advance(text[i++]);
      }
      out.push_back({TokKind::Int, std::move(num), tl, tc});
      continue;
    }
    if (punct.find(c) != std::string::npos) {
      out.push_back({TokKind::Punct, std::string(1, c), tl, tc});
      advance(c);
      ++i;
      continue;
    }
    throw InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": unexpected character '" +
                     std::string(1, c) + "'");
  }
  out.push_back({TokKind::End, "", line, col});
  return out;
}

class ProblemParser {
 public:
  explicit ProblemParser(const std::string& text)
      : toks_(problem_tokens(text)) {}

  // a single polynomial over an existing ring (used by tests and tools)
  QPoly parse_single(const Ring<RationalField>& R) {
    ProblemFile pf;
    pf.Q = R;
    QPoly p = parse_expr(pf);
    if (!at_end()) fail(peek(), "trailing input after polynomial");
    return p;
  }

  ProblemFile parse() {
    ProblemFile pf;
    parse_ring(pf);
    bool seenH = false, seenJ = false;
    while (!at_end()) {
      const Token& t = peek();
      if (t.kind != TokKind::Ident)
        fail(t, "expected a section keyword (H, J, I, seed, max_length)");
      if (t.text == "H") {
        if (seenH) fail(t, "duplicate H section");
        seenH = true;
        next();
        expect_punct("=");
        pf.H = parse_ideal_rhs(pf);
      } else if (t.text == "J") {
        if (seenJ) fail(t, "duplicate J section");
        seenJ = true;
        next();
        expect_punct("=");
        pf.J = parse_ideal_rhs(pf);
      } else if (t.text == "I") {
        if (pf.has_I) fail(t, "duplicate I section");
        pf.has_I = true;
        next();
        expect_punct("=");
        parse_I_rhs(pf);
      } else if (t.text == "seed") {
        if (pf.has_seed) fail(t, "duplicate seed setting");
        pf.has_seed = true;
        next();
        expect_punct("=");
        const Token& v = peek();
        if (v.kind != TokKind::Int) fail(v, "expected a non-negative integer");
        try {
          pf.seed = std::stoull(v.text);
        } catch (const std::exception&) {
          fail(v, "seed out of range");
        }
        next();
        expect_punct(";");
      } else if (t.text == "max_length") {
        if (pf.has_max_length) fail(t, "duplicate max_length setting");
        pf.has_max_length = true;
        next();
        expect_punct("=");
        const Token& v = peek();
        if (v.kind != TokKind::Int) fail(v, "expected a non-negative integer");
        try {
          pf.max_length = std::stoi(v.text);
        } catch (const std::exception&) {
          fail(v, "max_length out of range");
        }
        next();
        expect_punct(";");
      } else {
        fail(t, "unknown section '" + t.text + "'");
      }
    }
    if (!seenH) fail(peek(), "missing H section");
    if (!seenJ) fail(peek(), "missing J section");
    return pf;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_end() const { return peek().kind == TokKind::End; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw InputError("line " + std::to_string(t.line) + ", column " +
                     std::to_string(t.col) + ": " + msg);
  }

  bool is_punct(const std::string& p) const {
    return peek().kind == TokKind::Punct && peek().text == p;
  }

  void expect_punct(const std::string& p) {
    if (!is_punct(p)) fail(peek(), "expected '" + p + "'");
    next();
  }

  void parse_ring(ProblemFile& pf) {
    const Token& t = peek();
    if (t.kind != TokKind::Ident || t.text != "ring")
      fail(t, "problem file must start with a ring declaration");
    next();
    while (true) {
      const Token& v = peek();
      if (v.kind != TokKind::Ident) fail(v, "expected a variable name");
      if (v.text == "over") fail(v, "expected a variable name before 'over'");
      pf.variables.push_back(v.text);
      next();
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    const Token& ov = peek();
    if (ov.kind != TokKind::Ident || ov.text != "over")
      fail(ov, "expected 'over'");
    next();
    const Token& fld = peek();
    if (fld.kind != TokKind::Ident || fld.text != "QQ")
      fail(fld, "only the coefficient field QQ is supported");
    next();
    expect_punct(";");
    pf.Q = make_ring(RationalField{}, make_vartable(pf.variables));
  }

  // polynomial list terminated by ';'; a lone 0 denotes the zero ideal
  std::vector<QPoly> parse_ideal_rhs(const ProblemFile& pf) {
    auto list = parse_poly_list(pf);
    expect_punct(";");
    if (list.size() == 1 && list[0].is_zero()) list.clear();
    return list;
  }

  void parse_I_rhs(ProblemFile& pf) {
    const Token& t = peek();
    if (t.kind == TokKind::Ident && t.text == "intersect" &&
        pf.Q.vars->index_of("intersect") < 0) {
      next();
      expect_punct("(");
      expect_punct("[");
      pf.I_first = parse_poly_list(pf);
      expect_punct("]");
      expect_punct(",");
      expect_punct("[");
      pf.I_second = parse_poly_list(pf);
      expect_punct("]");
      expect_punct(")");
      expect_punct(";");
      pf.I_is_intersection = true;
      return;
    }
    pf.I = parse_ideal_rhs(pf);
  }

  std::vector<QPoly> parse_poly_list(const ProblemFile& pf) {
    std::vector<QPoly> out;
    out.push_back(parse_expr(pf));
    while (is_punct(",")) {
      next();
      out.push_back(parse_expr(pf));
    }
    return out;
  }

  QPoly parse_expr(const ProblemFile& pf) {
    bool neg = false;
    while (is_punct("+") || is_punct("-")) {
      if (peek().text == "-") neg = !neg;
      next();
    }
    QPoly acc = parse_product(pf);
    if (neg) acc = -acc;
    while (is_punct("+") || is_punct("-")) {
      bool minus = peek().text == "-";
      next();
      QPoly rhs = parse_product(pf);
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  static bool starts_factor(const Token& t) {
    return t.kind == TokKind::Ident || t.kind == TokKind::Int ||
           (t.kind == TokKind::Punct && t.text == "(");
  }

  // '*' between factors is optional; '/' requires a constant divisor
  QPoly parse_product(const ProblemFile& pf) {
    QPoly acc = parse_power(pf);
    while (true) {
      if (is_punct("*")) {
        next();
        acc = acc * parse_power(pf);
      } else if (is_punct("/")) {
        const Token& slash = peek();
        next();
        QPoly d = parse_power(pf);
        if (d.is_zero()) fail(slash, "division by zero");
        if (!d.is_constant())
          fail(slash, "divisor must be a nonzero constant");
        acc = acc.scaled(Rational(1) / d.constant_coeff());
      } else if (starts_factor(peek())) {
        acc = acc * parse_power(pf);
      } else {
        break;
      }
    }
    return acc;
  }

  QPoly parse_power(const ProblemFile& pf) {
    QPoly base = parse_primary(pf);
    while (is_punct("^")) {
      next();
      const Token& e = peek();
      if (e.kind != TokKind::Int) fail(e, "expected an integer exponent");
      int exp = 0;
      try {
        exp = std::stoi(e.text);
      } catch (const std::exception&) {
        fail(e, "exponent out of range");
      }
      next();
      base = base.pow(exp);
    }
    return base;
  }

  QPoly parse_primary(const ProblemFile& pf) {
    const Token& t = peek();
    if (t.kind == TokKind::Int) {
      next();
      return QPoly::constant(pf.Q, Rational(Integer(t.text)));
    }
    if (t.kind == TokKind::Ident) {
      int idx = pf.Q.vars->index_of(t.text);
      if (idx < 0) fail(t, "unknown variable '" + t.text + "'");
      next();
      return QPoly::variable(pf.Q, idx);
    }
    if (is_punct("(")) {
      next();
      QPoly inner = parse_expr(pf);
      expect_punct(")");
      return inner;
    }
    fail(t, "expected a polynomial");
  }
};

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
  return detail::ProblemParser(text).parse();
}

inline QPoly parse_qpoly(const Ring<RationalField>& R,
                         const std::string& text) {
  return detail::ProblemParser(text).parse_single(R);
}

inline ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

namespace detail {

inline std::string poly_list_str(const std::vector<QPoly>& v) {
  if (v.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace detail

// Canonical text form; parsing it back gives a structurally equal file.
inline std::string print_problem(const ProblemFile& pf) {
  std::string out = "ring ";
  for (size_t i = 0; i < pf.variables.size(); ++i) {
    if (i) out += ", ";
    out += pf.variables[i];
  }
  out += " over QQ;\n";
  out += "H = " + detail::poly_list_str(pf.H) + ";\n";
  out += "J = " + detail::poly_list_str(pf.J) + ";\n";
  if (pf.has_I) {
    if (pf.I_is_intersection)
      out += "I = intersect([" + detail::poly_list_str(pf.I_first) + "], [" +
             detail::poly_list_str(pf.I_second) + "]);\n";
    else
      out += "I = " + detail::poly_list_str(pf.I) + ";\n";
  }
  if (pf.has_seed) out += "seed = " + std::to_string(pf.seed) + ";\n";
  if (pf.has_max_length)
    out += "max_length = " + std::to_string(pf.max_length) + ";\n";
  return out;
}

// generators of I, with an intersect(...) expression evaluated
inline std::vector<QPoly> resolve_I(const ProblemFile& pf) {
  if (!pf.has_I) return {};
  if (!pf.I_is_intersection) return pf.I;
  return ideal_intersection(pf.I_first, pf.I_second,
                            degrevlex_order(pf.Q.vars));
}

}  // namespace graal
