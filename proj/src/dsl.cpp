#include "hnf/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <optional>
#include <utility>
#include <vector>

namespace hnf {

namespace {

enum class Tok {
  number, ident, lparen, rparen, lbrack, rbrack, lbrace, rbrace,
  comma, semi, colon, plus, minus, star, slash, caret, dotdot, end,
};

struct Token {
  Tok kind;
  std::string text;
  Rat value;
  size_t line = 1, col = 1;
};

Int pow10(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  size_t pos = 0, line = 1, col = 1;
  auto step = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[pos] == '\n') { ++line; col = 1; } else ++col;
      ++pos;
    }
  };
  while (pos < src.size()) {
    char ch = src[pos];
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') { step(1); continue; }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits, frac;
      long expo = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        digits += src[pos];
        step(1);
      }
      if (pos + 1 < src.size() && src[pos] == '.' &&
          std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
        step(1);
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
          frac += src[pos];
          step(1);
        }
      }
      if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
        size_t look = pos + 1;
        bool neg = false;
        if (look < src.size() && (src[look] == '+' || src[look] == '-')) {
          neg = src[look] == '-';
          ++look;
        }
        if (look < src.size() && std::isdigit(static_cast<unsigned char>(src[look]))) {
          step(look - pos);
          std::string es;
          while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            es += src[pos];
            step(1);
          }
          if (es.size() > 4) throw ParseError("exponent out of range", t.line, t.col);
          expo = std::stol(es) * (neg ? -1 : 1);
        }
      }
      // Explicit base: gmp's default base 0 reads a leading zero as octal.
      Rat v(Int(digits + frac, 10), pow10(frac.size()));
      v.canonicalize();
      if (expo > 0) v *= pow10(expo);
      if (expo < 0) v /= pow10(-expo);
      t.kind = Tok::number;
      t.value = v;
      t.text = digits;
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                  src[pos] == '_')) {
        t.text += src[pos];
        step(1);
      }
      t.kind = Tok::ident;
      out.push_back(std::move(t));
      continue;
    }
    if (ch == '.' && pos + 1 < src.size() && src[pos + 1] == '.') {
      t.kind = Tok::dotdot;
      step(2);
      out.push_back(std::move(t));
      continue;
    }
    switch (ch) {
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      case '[': t.kind = Tok::lbrack; break;
      case ']': t.kind = Tok::rbrack; break;
      case '{': t.kind = Tok::lbrace; break;
      case '}': t.kind = Tok::rbrace; break;
      case ',': t.kind = Tok::comma; break;
      case ';': t.kind = Tok::semi; break;
      case ':': t.kind = Tok::colon; break;
      case '+': t.kind = Tok::plus; break;
      case '-': t.kind = Tok::minus; break;
      case '*': t.kind = Tok::star; break;
      case '/': t.kind = Tok::slash; break;
      case '^': t.kind = Tok::caret; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    step(1);
    out.push_back(std::move(t));
  }
  Token e;
  e.kind = Tok::end;
  e.line = line;
  e.col = col;
  out.push_back(std::move(e));
  return out;
}

struct Parser {
  std::vector<Token> ts;
  size_t i = 0;

  const Token& peek() const { return ts[i]; }
  bool at(Tok k) const { return ts[i].kind == k; }
  bool at_ident(const char* s) const { return at(Tok::ident) && ts[i].text == s; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++i;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (!at(k)) err(std::string("expected ") + what, peek());
    return ts[i++];
  }
  [[noreturn]] static void err(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }

  Rat signed_rat() {
    int sign = 1;
    if (accept(Tok::minus)) sign = -1;
    else accept(Tok::plus);
    const Token& n = expect(Tok::number, "a number");
    Rat v = n.value;
    if (accept(Tok::slash)) {
      const Token& d = expect(Tok::number, "a denominator");
      if (sgn(d.value) == 0) fail(errc::zero_denominator, "rational literal with denominator 0");
      v /= d.value;
    }
    return sign < 0 ? Rat(-v) : v;
  }

  ExtReal ext_scalar() {
    int sign = 1;
    if (accept(Tok::minus)) sign = -1;
    else accept(Tok::plus);
    if (at_ident("inf")) {
      ++i;
      return sign < 0 ? ExtReal::neg_inf() : ExtReal::pos_inf();
    }
    const Token& n = expect(Tok::number, "a number or inf");
    Rat v = n.value;
    if (accept(Tok::slash)) {
      const Token& d = expect(Tok::number, "a denominator");
      if (sgn(d.value) == 0) fail(errc::zero_denominator, "rational literal with denominator 0");
      v /= d.value;
    }
    return ExtReal(sign < 0 ? Rat(-v) : v);
  }

  XInterval value_interval() {
    if (at(Tok::lbrack)) {
      const Token& open = ts[i++];
      ExtReal lo = ext_scalar();
      expect(Tok::comma, "','");
      ExtReal hi = ext_scalar();
      expect(Tok::rbrack, "']'");
      try {
        return XInterval(lo, hi);
      } catch (const std::invalid_argument&) {
        err("interval endpoints out of order", open);
      }
    }
    return XInterval(ext_scalar());
  }

  // expr := term (('+'|'-') term)*
  RationalFunc expr() {
    RationalFunc a = term();
    while (true) {
      if (accept(Tok::plus)) a = a + term();
      else if (accept(Tok::minus)) a = a - term();
      else return a;
    }
  }

  bool at_atom_start() const {
    return at(Tok::number) || at(Tok::lparen) || at_ident("x");
  }

  // term := unary (('*'|'/') unary | juxtaposed unary)*
  RationalFunc term() {
    RationalFunc a = unary();
    while (true) {
      if (accept(Tok::star)) a = a * unary();
      else if (accept(Tok::slash)) a = a * reciprocal(unary());
      else if (at_atom_start()) a = a * unary();  // 2x, 2(x+1), x(x-1)
      else return a;
    }
  }

  RationalFunc unary() {
    if (accept(Tok::minus)) return Rat(-1) * unary();
    if (accept(Tok::plus)) return unary();
    return power();
  }

  RationalFunc power() {
    RationalFunc a = atom();
    if (!accept(Tok::caret)) return a;
    const Token& e = expect(Tok::number, "an integer exponent");
    if (e.value.get_den() != 1 || e.value > 1024)
      err("exponent must be an integer between 0 and 1024", e);
    unsigned long n = e.value.get_num().get_ui();
    RationalFunc r = RationalFunc::constant(Rat(1));
    for (unsigned long k = 0; k < n; ++k) r = r * a;
    return r;
  }

  RationalFunc atom() {
    if (at(Tok::number)) return RationalFunc::constant(ts[i++].value);
    if (at_ident("x")) {
      ++i;
      return RationalFunc::x();
    }
    if (accept(Tok::lparen)) {
      RationalFunc a = expr();
      expect(Tok::rparen, "')'");
      return a;
    }
    err("expected a number, 'x', or '('", peek());
  }
};

[[noreturn]] void rethrow_located(const error& e, size_t line, size_t col) {
  std::string w = e.what();
  std::string nm = std::string(errc_name(e.code())) + ": ";
  std::string detail = w.rfind(nm, 0) == 0 ? w.substr(nm.size()) : w;
  fail(e.code(), detail + " (in literal starting at " + std::to_string(line) + ":" +
                     std::to_string(col) + ")");
}

PiecewiseFn parse_full(Parser& p) {
  const Token& start = p.peek();
  ++p.i;  // "piecewise"
  if (!p.at_ident("on")) Parser::err("expected 'on'", p.peek());
  ++p.i;
  const Token& dom = p.expect(Tok::lbrack, "'['");
  Rat a = p.signed_rat();
  p.expect(Tok::comma, "','");
  Rat b = p.signed_rat();
  p.expect(Tok::rbrack, "']'");
  if (!(a < b)) Parser::err("domain endpoints out of order", dom);
  p.expect(Tok::lbrace, "'{'");

  struct SegEntry {
    Rat u, v;
    RationalFunc lo, hi;
    Token pos;
  };
  struct PtEntry {
    Rat x;
    XInterval val;
    Token pos;
  };
  std::vector<SegEntry> segs;
  std::vector<PtEntry> pts;

  while (!p.at(Tok::rbrace)) {
    if (p.at(Tok::lparen)) {
      SegEntry e{Rat(), Rat(), RationalFunc(), RationalFunc(), p.peek()};
      ++p.i;
      e.u = p.signed_rat();
      p.expect(Tok::comma, "','");
      e.v = p.signed_rat();
      p.expect(Tok::rparen, "')'");
      if (!(e.u < e.v)) Parser::err("segment bounds out of order", e.pos);
      p.expect(Tok::colon, "':'");
      e.lo = p.expr();
      e.hi = p.accept(Tok::dotdot) ? p.expr() : e.lo;
      segs.push_back(std::move(e));
    } else {
      PtEntry e{Rat(), XInterval(), p.peek()};
      e.x = p.signed_rat();
      p.expect(Tok::colon, "':'");
      e.val = p.value_interval();
      pts.push_back(std::move(e));
    }
    if (!p.accept(Tok::semi) && !p.at(Tok::rbrace))
      Parser::err("expected ';' or '}'", p.peek());
  }
  ++p.i;  // '}'
  p.expect(Tok::end, "end of input");

  std::vector<Rat> bps{a, b};
  for (const auto& e : pts) bps.push_back(e.x);
  for (const auto& e : segs) {
    bps.push_back(e.u);
    bps.push_back(e.v);
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  if (bps.front() < a || b < bps.back())
    Parser::err("entry outside the domain", pts.empty() ? segs.front().pos : pts.front().pos);
  auto idx_of = [&](const Rat& r) {
    return size_t(std::lower_bound(bps.begin(), bps.end(), r) - bps.begin());
  };

  std::vector<std::optional<XInterval>> values(bps.size());
  for (const auto& e : pts) {
    if (e.x < a || b < e.x) Parser::err("breakpoint outside the domain", e.pos);
    auto& slot = values[idx_of(e.x)];
    if (slot) Parser::err("duplicate breakpoint entry", e.pos);
    slot = e.val;
  }

  std::vector<std::optional<SegmentFuncs>> sf(bps.size() - 1);
  for (const auto& e : segs) {
    size_t k = idx_of(e.u);
    if (k + 1 >= bps.size() || bps[k + 1] != e.v)
      Parser::err("a breakpoint lies inside segment (" + to_string(e.u) + "," + to_string(e.v) +
                      ")",
                  e.pos);
    if (sf[k]) Parser::err("overlapping segment entries", e.pos);
    sf[k] = SegmentFuncs(e.lo, e.hi);
  }
  std::vector<SegmentFuncs> segv;
  for (size_t k = 0; k + 1 < bps.size(); ++k) {
    if (!sf[k])
      Parser::err(
          "no segment entry covers (" + to_string(bps[k]) + "," + to_string(bps[k + 1]) + ")",
          start);
    segv.push_back(std::move(*sf[k]));
  }

  try {
    return pw_extend_dense(a, b, bps, values, segv);
  } catch (const ParseError&) {
    throw;
  } catch (const error& e) {
    rethrow_located(e, start.line, start.col);
  }
}

PiecewiseFn parse_short(Parser& p) {
  const Token& start = p.peek();
  RationalFunc r = p.expr();
  if (!p.at_ident("on")) Parser::err("expected 'on'", p.peek());
  ++p.i;
  const Token& dom = p.expect(Tok::lbrack, "'['");
  Rat a = p.signed_rat();
  p.expect(Tok::comma, "','");
  Rat b = p.signed_rat();
  p.expect(Tok::rbrack, "']'");
  if (!(a < b)) Parser::err("domain endpoints out of order", dom);
  p.expect(Tok::end, "end of input");

  std::vector<Rat> bps{a};
  try {
    if (!r.is_polynomial()) {
      for (const auto& root : rf_roots(RationalFunc::from_poly(r.den()), a, b)) {
        if (!root.rational)
          fail(errc::non_representable_point, "pole at an irrational point isolated by (" +
                                                  to_string(root.lo) + ", " + to_string(root.hi) +
                                                  ")");
        bps.push_back(root.value);
      }
    }
    bps.push_back(b);
    std::vector<std::optional<XInterval>> values(bps.size());
    std::vector<SegmentFuncs> segv(bps.size() - 1, SegmentFuncs(r));
    return pw_extend_dense(a, b, bps, values, segv);
  } catch (const error& e) {
    rethrow_located(e, start.line, start.col);
  }
}

std::string value_text(const XInterval& v) {
  if (v.is_point()) return to_string(v.lo());
  return "[" + to_string(v.lo()) + "," + to_string(v.hi()) + "]";
}

}  // namespace

PiecewiseFn parse_fn(const std::string& text) {
  Parser p{lex(text), 0};
  if (p.at(Tok::end)) Parser::err("empty input", p.peek());
  if (p.at_ident("piecewise")) return parse_full(p);
  return parse_short(p);
}

std::string format_fn(const PiecewiseFn& f0) {
  PiecewiseFn f = pw_canon(f0);
  std::vector<std::string> entries;
  for (size_t i = 0; i < f.breakpoints().size(); ++i) {
    const XInterval& v = f.values()[i];
    if (v != f.limit_hull(i) || !v.is_point())
      entries.push_back(to_string(f.breakpoints()[i]) + ": " + value_text(v));
    if (i + 1 < f.breakpoints().size()) {
      const SegmentFuncs& s = f.segments()[i];
      std::string body =
          s.lo == s.hi ? to_string(s.lo) : to_string(s.lo) + " .. " + to_string(s.hi);
      entries.push_back("(" + to_string(f.breakpoints()[i]) + "," +
                        to_string(f.breakpoints()[i + 1]) + "): " + body);
    }
  }
  std::string out =
      "piecewise on [" + to_string(f.dom_lo()) + "," + to_string(f.dom_hi()) + "] { ";
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k) out += "; ";
    out += entries[k];
  }
  out += " }";
  return out;
}

Rat parse_rat(const std::string& text) {
  Parser p{lex(text), 0};
  Rat v = p.signed_rat();
  p.expect(Tok::end, "end of input");
  return v;
}

namespace {

// k fractional digits, rounding to nearest (ties away from zero).
std::string decimal_text(const Rat& v, unsigned k, bool& inexact) {
  Int p = v.get_num(), q = v.get_den();
  bool neg = sgn(p) < 0;
  if (neg) p = -p;
  Int scaled = p * pow10(k);
  Int whole = scaled / q, rem = scaled % q;
  inexact = sgn(rem) != 0;
  if (2 * rem >= q) whole += 1;
  Int ip = whole / pow10(k), fp = whole % pow10(k);
  std::string out = (neg && sgn(whole) != 0 ? "-" : "") + ip.get_str();
  if (k > 0) {
    std::string fs = fp.get_str();
    out += "." + std::string(k - fs.size(), '0') + fs;
  }
  return out;
}

}  // namespace

std::string fmt_rat(const Rat& v, const NumberStyle& style) {
  if (style.decimal_digits < 0) return to_string(v);
  bool inexact = false;
  std::string s = decimal_text(v, unsigned(style.decimal_digits), inexact);
  return inexact ? s + "~" : s;
}

std::string fmt_ext(const ExtReal& v, const NumberStyle& style) {
  if (!v.is_finite()) return to_string(v);
  return fmt_rat(v.rat(), style);
}

std::string fmt_bound(const ExtReal& v, const NumberStyle& style) {
  if (style.decimal_digits >= 0 || !v.is_finite()) return fmt_ext(v, style);
  Int den = v.rat().get_den();
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  unsigned k = std::max(twos, fives);
  if (den != 1 || k > 12) return to_string(v);
  if (k == 0) return to_string(v);
  bool inexact = false;
  std::string s = decimal_text(v.rat(), k, inexact);
  return s;
}

}  // namespace hnf
