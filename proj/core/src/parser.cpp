#include "gevrey/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace gevrey {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      std::string word(s.substr(i, j - i));
      if (word != "z" && word != "x" && word != "D" && word != "T" && word != "Delta" &&
          word != "n" && word != "a")
        throw ParseError("unknown symbol '" + word + "'", i);
      out.push_back({Tok::Ident, word, i});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '=': k = Tok::Equals; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Recursive descent over the shared grammar; Alg supplies the ring.
template <class Alg>
class Descent {
 public:
  using V = typename Alg::Value;
  Descent(const std::vector<Token>& toks, Alg& alg) : t_(toks), alg_(alg) {}

  V parse_all() {
    V v = expr();
    expect_end();
    return v;
  }
  V expr() {
    V acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = next().kind == Tok::Plus;
      V rhs = term();
      acc = plus ? alg_.add(acc, rhs) : alg_.sub(acc, rhs);
    }
    return acc;
  }
  const Token& peek() const { return t_[i_]; }
  const Token& next() { return t_[i_++]; }
  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
  }

 private:
  V term() {
    V acc = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      if (op.kind == Tok::Slash) {
        const Token& d = next();
        if (d.kind != Tok::Number) throw ParseError("only division by an integer is allowed", d.pos);
        Integer den(d.text);
        if (den == 0) throw ParseError("zero denominator", d.pos);
        acc = alg_.mul(acc, alg_.constant(Rat(Integer(1), den)), op.pos);
        continue;
      }
      V rhs = factor();
      acc = alg_.mul(acc, rhs, op.pos);
    }
    if (peek().kind == Tok::Ident || peek().kind == Tok::Number || peek().kind == Tok::LParen)
      throw ParseError("missing '*' (juxtaposition is not allowed)", peek().pos);
    return acc;
  }
  V factor() {
    V base = atom();
    if (peek().kind == Tok::Caret) {
      std::size_t pos = next().pos;
      const Token& e = next();
      if (e.kind != Tok::Number) throw ParseError("exponent must be a nonnegative integer", e.pos);
      unsigned long k = std::stoul(e.text);
      if (k > 10000) throw ParseError("exponent too large", e.pos);
      V acc = alg_.one();
      for (unsigned long i = 0; i < k; ++i) acc = alg_.mul(acc, base, pos);
      return acc;
    }
    return base;
  }
  V atom() {
    const Token& tk = next();
    switch (tk.kind) {
      case Tok::Number: {
        Integer num(tk.text);
        if (peek().kind == Tok::Slash) {
          next();
          const Token& d = next();
          if (d.kind != Tok::Number) throw ParseError("expected denominator", d.pos);
          Integer den(d.text);
          if (den == 0) throw ParseError("zero denominator", d.pos);
          Rat r(num, den);
          r.canonicalize();
          return alg_.constant(r);
        }
        return alg_.constant(Rat(num));
      }
      case Tok::Ident:
        if (tk.text == "a") return alg_.sequence_term(*this, tk.pos);
        return alg_.variable(tk.text, tk.pos);
      case Tok::LParen: {
        V v = expr();
        const Token& close = next();
        if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
        return v;
      }
      case Tok::Minus:
        return alg_.neg(factor());
      case Tok::End:
        throw ParseError("unexpected end of input", tk.pos);
      default:
        throw ParseError("unexpected '" + tk.text + "'", tk.pos);
    }
  }

  const std::vector<Token>& t_;
  std::size_t i_ = 0;
  Alg& alg_;
};

struct WeylAlg {
  using Value = DiffOp;
  Value one() { return DiffOp(Poly(1)); }
  Value constant(const Rat& r) { return DiffOp(Poly(r)); }
  Value variable(const std::string& v, std::size_t pos) {
    if (v == "z") return z_op();
    if (v == "D") return DiffOp::d();
    if (v == "T") return z_op() * DiffOp::d();
    throw ParseError("symbol '" + v + "' not allowed in a differential operator", pos);
  }
  template <class P>
  Value sequence_term(P&, std::size_t pos) {
    throw ParseError("sequence term a(...) not allowed in an operator", pos);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b, std::size_t) { return a * b; }
  Value neg(const Value& a) { return -a; }
};

struct DifferenceAlg {
  using Value = DifferenceOp;
  Value one() { return DifferenceOp(Poly(1)); }
  Value constant(const Rat& r) { return DifferenceOp(Poly(r)); }
  Value variable(const std::string& v, std::size_t pos) {
    if (v == "x") return DifferenceOp::x();
    if (v == "Delta") return DifferenceOp::delta();
    throw ParseError("symbol '" + v + "' not allowed in a difference operator", pos);
  }
  template <class P>
  Value sequence_term(P&, std::size_t pos) {
    throw ParseError("sequence term a(...) not allowed in an operator", pos);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b, std::size_t) { return a * b; }
  Value neg(const Value& a) { return -a; }
};

// Linear forms sum_k c_k(n) a(n+k) plus a free polynomial part in n.
struct RecValue {
  Poly scalar;
  std::map<int, Poly> terms;
  bool linear() const { return !terms.empty(); }
};

struct RecurrenceAlg {
  using Value = RecValue;
  Value one() { return {Poly(1), {}}; }
  Value constant(const Rat& r) { return {Poly(r), {}}; }
  Value variable(const std::string& v, std::size_t pos) {
    if (v == "n") return {Poly::variable(), {}};
    throw ParseError("symbol '" + v + "' not allowed in a recurrence", pos);
  }
  template <class P>
  Value sequence_term(P& p, std::size_t pos) {
    auto expect = [&](Tok k, const char* what) {
      const Token& t = p.next();
      if (t.kind != k) throw ParseError(std::string("expected ") + what, t.pos);
      return t;
    };
    expect(Tok::LParen, "'(' after a");
    Token nt = expect(Tok::Ident, "n inside a(...)");
    if (nt.text != "n") throw ParseError("expected n inside a(...)", nt.pos);
    int shift = 0;
    if (p.peek().kind == Tok::Plus || p.peek().kind == Tok::Minus) {
      bool plus = p.next().kind == Tok::Plus;
      Token k = expect(Tok::Number, "integer shift");
      shift = std::stoi(k.text) * (plus ? 1 : -1);
    }
    expect(Tok::RParen, "')'");
    (void)pos;
    Value v;
    v.terms[shift] = Poly(1);
    return v;
  }
  static void add_into(std::map<int, Poly>& m, int k, const Poly& p) {
    Poly& slot = m[k];
    slot += p;
    if (slot.is_zero()) m.erase(k);
  }
  Value add(const Value& a, const Value& b) {
    Value out = a;
    out.scalar += b.scalar;
    for (const auto& [k, p] : b.terms) add_into(out.terms, k, p);
    return out;
  }
  Value neg(const Value& a) {
    Value out{-a.scalar, {}};
    for (const auto& [k, p] : a.terms) out.terms[k] = -p;
    return out;
  }
  Value sub(const Value& a, const Value& b) { return add(a, neg(b)); }
  Value mul(const Value& a, const Value& b, std::size_t pos) {
    if (a.linear() && b.linear()) throw ParseError("product of two sequence terms", pos);
    if (!a.linear() && !b.linear()) return {a.scalar * b.scalar, {}};
    const Value& lin = a.linear() ? a : b;
    const Poly& s = a.linear() ? b.scalar : a.scalar;
    if (!lin.scalar.is_zero()) throw ParseError("inhomogeneous factor in a product", pos);
    Value out;
    for (const auto& [k, p] : lin.terms) add_into(out.terms, k, p * s);
    return out;
  }
};

struct Scan {
  bool d = false, t = false, z = false, x = false, delta = false;
  std::size_t delta_pos = 0, d_pos = 0;
};

Scan scan(const std::vector<Token>& toks) {
  Scan s;
  for (const auto& tk : toks) {
    if (tk.kind != Tok::Ident) continue;
    if (tk.text == "D") {
      s.d = true;
      s.d_pos = tk.pos;
    } else if (tk.text == "T") {
      s.t = true;
      s.d_pos = tk.pos;
    } else if (tk.text == "z") {
      s.z = true;
    } else if (tk.text == "x") {
      s.x = true;
    } else if (tk.text == "Delta") {
      s.delta = true;
      s.delta_pos = tk.pos;
    }
  }
  return s;
}

}  // namespace

ParsedOperator parse_operator(std::string_view text) {
  auto toks = lex(text);
  for (const auto& tk : toks)
    if (tk.kind == Tok::Equals) throw ParseError("'=' not allowed in an operator", tk.pos);
  Scan s = scan(toks);
  if ((s.d || s.t) && s.delta)
    throw ParseError("use of both D and Delta in one expression", std::max(s.d_pos, s.delta_pos));
  if ((s.d || s.t || s.z) && (s.delta || s.x))
    throw ParseError("mixing z/D/T with x/Delta in one expression", s.delta_pos);
  if (s.delta || s.x) {
    DifferenceAlg alg;
    Descent<DifferenceAlg> p(toks, alg);
    return normalized(p.parse_all());
  }
  WeylAlg alg;
  Descent<WeylAlg> p(toks, alg);
  DiffOp op = normalized(p.parse_all());
  if (s.t && !s.d) return normalized(theta_form(op).op);
  return op;
}

DiffOp parse_diffop_exact(std::string_view text) {
  auto toks = lex(text);
  Scan s = scan(toks);
  if (s.delta || s.x) throw Error("expected a differential operator, got a difference operator");
  WeylAlg alg;
  Descent<WeylAlg> p(toks, alg);
  return p.parse_all();
}

DiffOp parse_diffop(std::string_view text) {
  ParsedOperator p = parse_operator(text);
  if (auto* d = std::get_if<DiffOp>(&p)) return *d;
  if (auto* t = std::get_if<ThetaOp>(&p)) return normalized(to_diffop(*t));
  throw Error("expected a differential operator, got a difference operator");
}

DifferenceOp parse_difference_op(std::string_view text) {
  ParsedOperator p = parse_operator(text);
  if (auto* d = std::get_if<DifferenceOp>(&p)) return *d;
  // z/D-free constants parse in the Weyl ring; accept them here.
  if (auto* w = std::get_if<DiffOp>(&p); w && w->order() <= 0 && z_degree(*w) <= 0)
    return normalized(DifferenceOp(w->is_zero() ? Poly() : w->coeffs()[0]));
  throw Error("expected a difference operator in x and Delta");
}

Recurrence parse_recurrence(std::string_view text) {
  auto toks = lex(text);
  RecurrenceAlg alg;
  Descent<RecurrenceAlg> p(toks, alg);
  RecValue lhs = p.expr();
  RecValue rel = lhs;
  if (p.peek().kind == Tok::Equals) {
    p.next();
    RecValue rhs = p.expr();
    rel = alg.sub(lhs, rhs);
  }
  p.expect_end();
  if (!rel.scalar.is_zero()) throw ParseError("inhomogeneous recurrence", 0);
  if (rel.terms.empty()) throw ParseError("empty relation", 0);
  return Recurrence::from_shifts(rel.terms);
}

std::vector<Rat> parse_rational_sequence(std::string_view text) {
  std::vector<Rat> out;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) out.push_back(rat_from_string(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

SourceKind kind_of(const ParsedOperator& op) {
  if (std::holds_alternative<DiffOp>(op)) return SourceKind::DiffOp;
  if (std::holds_alternative<ThetaOp>(op)) return SourceKind::ThetaOp;
  return SourceKind::DifferenceOp;
}

std::string serialize(const ParsedOperator& op) {
  return std::visit([](const auto& v) { return to_string(v); }, op);
}

}  // namespace gevrey
