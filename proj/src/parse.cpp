#include "vhess/parse.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace vhess {

namespace {

enum class Tok { Nat, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, Header, End };

struct Token {
  Tok kind;
  std::string text;  // digits for Nat/Var
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Nat: return "number";
    case Tok::Var: return "variable";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Header: return "header";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (static_cast<unsigned char>(c) >= 0x80) throw ParseError("non-ASCII character", line, col);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l0 = line, c0 = col;
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      out.push_back({Tok::Nat, std::string(text.substr(i, j - i)), l0, c0});
      advance(j - i);
      continue;
    }
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j == i + 1) throw ParseError("expected a variable index after 'x'", l0, c0 + 1);
      out.push_back({Tok::Var, std::string(text.substr(i + 1, j - i - 1)), l0, c0});
      advance(j - i);
      continue;
    }
    if (text.substr(i, 6) == "nvars:") {
      out.push_back({Tok::Header, {}, l0, c0});
      advance(6);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
    }
    out.push_back({kind, {}, l0, c0});
    advance(1);
  }
  out.push_back({Tok::End, {}, line, col});
  return out;
}

std::size_t to_index(const Token& t, std::size_t limit) {
  if (t.text.size() > 9 || std::stoul(t.text) > limit) {
    throw ParseError("number " + t.text + " is too large", t.line, t.column);
  }
  return std::stoul(t.text);
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t nvars) : toks_(std::move(toks)), nvars_(nvars) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k) {
    if (peek().kind != k) fail(std::string("expected ") + describe(k));
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(msg + ", found " + describe(t.kind), t.line, t.column);
  }

  void skip_header() {
    if (accept(Tok::Header)) expect(Tok::Nat);
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept(Tok::Plus)) {
        acc += term();
      } else if (accept(Tok::Minus)) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    bool negate = false;
    if (peek().kind == Tok::Minus && peek(1).kind != Tok::Nat) {
      ++pos_;
      negate = true;
    }
    MultiPoly acc = factor();
    while (accept(Tok::Star)) acc *= factor();
    return negate ? -acc : acc;
  }

  MultiPoly factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Minus:
      case Tok::Nat: return MultiPoly::constant(nvars_, coeff());
      case Tok::Var: {
        ++pos_;
        auto idx = to_index(t, std::numeric_limits<std::uint16_t>::max());
        MultiPoly v = MultiPoly::variable(nvars_, idx);
        if (accept(Tok::Caret)) {
          if (peek().kind != Tok::Nat) fail("exponent must be a natural number");
          const Token& e = toks_[pos_++];
          v = v.pow(static_cast<unsigned>(to_index(e, 1000)));
        }
        return v;
      }
      case Tok::LParen: {
        ++pos_;
        MultiPoly inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      default: fail("expected a coefficient, variable or '('");
    }
  }

  Rational coeff() {
    bool negative = accept(Tok::Minus);
    const Token& num = expect(Tok::Nat);
    Integer n(num.text);
    Integer d(1);
    if (accept(Tok::Slash)) {
      const Token& den = expect(Tok::Nat);
      d = Integer(den.text);
      if (d == 0) throw ParseError("zero denominator", den.line, den.column);
    }
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  std::size_t pos_ = 0;
  std::vector<Token> toks_;
  std::size_t nvars_;
};

std::size_t infer_nvars(const std::vector<Token>& toks, std::optional<std::size_t> declared) {
  std::size_t needed = 0;
  std::optional<std::size_t> header;
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (toks[k].kind == Tok::Var) {
      needed = std::max(needed, to_index(toks[k], std::numeric_limits<std::uint16_t>::max()) + 1);
    }
    if (toks[k].kind == Tok::Header) {
      if (k != 0) throw ParseError("nvars header must come first", toks[k].line, toks[k].column);
      if (toks[k + 1].kind != Tok::Nat) throw ParseError("expected a number after 'nvars:'", toks[k + 1].line, toks[k + 1].column);
      header = to_index(toks[k + 1], 1 << 15);
    }
  }
  if (!declared) declared = header;
  if (declared) {
    if (*declared < needed) {
      throw ParseError("declared " + std::to_string(*declared) + " variables but x" + std::to_string(needed - 1) + " occurs", 1, 1);
    }
    return *declared;
  }
  return needed;
}

void append_coefficient_term(std::ostringstream& os, const Exponents& e, const Rational& c, bool first) {
  Rational a = abs(c);
  if (first) {
    if (sgn(c) < 0) os << '-';
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  bool constant = total_degree(e) == 0;
  bool wrote = false;
  if (a != 1 || constant) {
    os << a.get_str();
    wrote = true;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (wrote) os << '*';
    os << 'x' << i;
    if (e[i] > 1) os << '^' << e[i];
    wrote = true;
  }
}

}  // namespace

ParsedPoly parse_poly(const PolySource& src) {
  auto toks = tokenize(src.text);
  const std::size_t nvars = infer_nvars(toks, src.declared_nvars);
  Parser p(std::move(toks), nvars);
  p.skip_header();
  if (p.peek().kind == Tok::End) p.fail("empty polynomial");
  ParsedPoly out{p.expr(), true, -1};
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  out.homogeneous = out.poly.is_homogeneous();
  for (const auto& [e, c] : out.poly.terms()) out.degree = std::max(out.degree, static_cast<int>(total_degree(e)));
  return out;
}

ParsedPoly parse_poly(std::string_view text) { return parse_poly(PolySource{std::string(text), std::nullopt}); }

std::string print_poly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    append_coefficient_term(os, e, c, first);
    first = false;
  }
  return os.str();
}

std::string print_matrix(const PolyMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << print_poly(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

PolyMatrix parse_matrix(std::string_view text, std::optional<std::size_t> declared_nvars) {
  auto toks = tokenize(text);
  const std::size_t nvars = infer_nvars(toks, declared_nvars);
  Parser p(std::move(toks), nvars);
  p.skip_header();
  std::vector<std::vector<MultiPoly>> rows;
  p.expect(Tok::LBracket);
  do {
    p.expect(Tok::LBracket);
    std::vector<MultiPoly> row;
    do {
      row.push_back(p.expr());
    } while (p.accept(Tok::Comma));
    p.expect(Tok::RBracket);
    if (!rows.empty() && row.size() != rows.front().size()) p.fail("ragged matrix row");
    rows.push_back(std::move(row));
  } while (p.accept(Tok::Comma));
  p.expect(Tok::RBracket);
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  PolyMatrix m(rows.size(), rows.front().size(), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, std::move(rows[i][j]));
  return m;
}

ParsedPoly read_poly_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poly(buf.str());
}

}  // namespace vhess
