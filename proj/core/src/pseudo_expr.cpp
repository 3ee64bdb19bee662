#include "psop/pseudo_expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

namespace psop::expr {

namespace {

struct UnicodeOp {
  std::string_view bytes;
  char ascii;
};

constexpr std::array<UnicodeOp, 6> kUnicodeOps{{
    {"\xE2\x81\x84", '/'},   // U+2044 fraction slash
    {"\xE2\x88\x96", '\\'},  // U+2216 set minus
    {"\xE2\x8A\xA5", '_'},   // U+22A5 up tack
    {"\xE2\x8A\xA4", '~'},   // U+22A4 down tack
    {"\xE2\x8A\xA3", '='},   // U+22A3 left tack
    {"\xE2\x88\x92", '-'},   // U+2212 minus sign
}};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  return pos;
}

char opsym_char(const Token& t) {
  if (t.lexeme.size() == 1) return t.lexeme.front();
  for (const auto& u : kUnicodeOps)
    if (u.bytes == t.lexeme) return u.ascii;
  return '?';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    out.push_back({kind, std::string(text.substr(begin, end - begin)), {begin, end}});
    pos = end;
  };

  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    if (is_digit(c) || (c == '.' && pos + 1 < text.size() && is_digit(text[pos + 1]))) {
      std::size_t end = scan_digits(text, pos);
      if (end < text.size() && text[end] == '.') end = scan_digits(text, end + 1);
      if (end < text.size() && (text[end] == 'e' || text[end] == 'E')) {
        std::size_t exp = end + 1;
        if (exp < text.size() && (text[exp] == '+' || text[exp] == '-')) ++exp;
        if (exp < text.size() && is_digit(text[exp])) end = scan_digits(text, exp);
      }
      push(TokenKind::Number, pos, end);
      continue;
    }
    if (is_alpha(c)) {
      std::size_t end = pos;
      while (end < text.size() && is_alpha(text[end])) ++end;
      push(text.substr(pos, end - pos) == "rot" ? TokenKind::RotKw : TokenKind::Ident, pos, end);
      continue;
    }
    if (opsym_from_ascii(c)) {
      push(TokenKind::OpSym, pos, pos + 1);
      continue;
    }
    switch (c) {
      case '*': push(TokenKind::Star, pos, pos + 1); continue;
      case '^': push(TokenKind::Caret, pos, pos + 1); continue;
      case '(': push(TokenKind::LParen, pos, pos + 1); continue;
      case ')': push(TokenKind::RParen, pos, pos + 1); continue;
      case ',': push(TokenKind::Comma, pos, pos + 1); continue;
      default: break;
    }
    bool matched = false;
    for (const auto& u : kUnicodeOps) {
      if (text.substr(pos, u.bytes.size()) == u.bytes) {
        push(TokenKind::OpSym, pos, pos + u.bytes.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    throw Error(ErrorKind::LexError, "unrecognized character '" + std::string(1, c) + "'",
                Span{pos, pos + 1});
  }
  return out;
}

// --- AST -------------------------------------------------------------------

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

struct Equal {
  bool operator()(const Number& a, const Number& b) const { return a.value == b.value; }
  bool operator()(const Const& a, const Const& b) const { return a.which == b.which; }
  bool operator()(const Rot& a, const Rot& b) const { return a.num == b.num && a.den == b.den; }
  bool operator()(const Chain& a, const Chain& b) const {
    if (a.items.size() != b.items.size()) return false;
    for (std::size_t i = 0; i < a.items.size(); ++i) {
      if (a.items[i].op != b.items[i].op || !same(a.items[i].term, b.items[i].term)) return false;
    }
    return true;
  }
  bool operator()(const Mul& a, const Mul& b) const {
    return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
  }
  bool operator()(const Pow& a, const Pow& b) const {
    return a.exponent == b.exponent && same(a.base, b.base);
  }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

ExprPtr wrap(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) { return std::visit(Equal{}, a.node, b.node); }

ExprPtr make_number(double value) {
  require(std::isfinite(value) && value >= 0.0, "number literals are finite and non-negative");
  return wrap(Number{value + 0.0});
}

ExprPtr make_const(Constant which) { return wrap(Const{which}); }

ExprPtr make_rot(std::int64_t num, std::int64_t den) {
  require(den > 0, "rot denominator must be positive");
  return wrap(Rot{num, den});
}

ExprPtr make_chain(std::vector<ChainItem> items) {
  require(!items.empty(), "chain needs at least one term");
  require(items.size() > 1 || items.front().op.has_value(),
          "a single-term chain needs a leading operator");
  for (std::size_t i = 0; i < items.size(); ++i) {
    require(items[i].term != nullptr, "chain term is null");
    require(i == 0 || items[i].op.has_value(), "only the first chain term may omit its operator");
  }
  return wrap(Chain{std::move(items)});
}

ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs) {
  require(lhs && rhs, "product operand is null");
  return wrap(Mul{std::move(lhs), std::move(rhs)});
}

ExprPtr make_pow(ExprPtr base, std::int64_t exponent) {
  require(base != nullptr, "power base is null");
  require(exponent != std::numeric_limits<std::int64_t>::min(), "power exponent out of range");
  return wrap(Pow{std::move(base), exponent});
}

// --- parser ----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::vector<Token> tokens)
      : text_(text), tokens_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (!at_end()) fail("end of input");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token* peek() const { return at_end() ? nullptr : &tokens_[pos_]; }
  bool peek_is(TokenKind k) const { return !at_end() && tokens_[pos_].kind == k; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Span span = at_end() ? Span{text_.size(), text_.size()} : tokens_[pos_].span;
    const std::string found = at_end() ? "end of input" : "'" + tokens_[pos_].lexeme + "'";
    throw Error(ErrorKind::ParseError, "expected " + expected + ", found " + found, span);
  }

  const Token& expect(TokenKind k, const char* what) {
    if (!peek_is(k)) fail(what);
    return tokens_[pos_++];
  }

  ExprPtr parse_expr() {
    std::vector<ChainItem> items;
    std::optional<OpSym> lead;
    if (peek_is(TokenKind::OpSym)) lead = opsym_from_ascii(opsym_char(tokens_[pos_++]));
    items.push_back({lead, parse_term()});
    while (peek_is(TokenKind::OpSym)) {
      auto op = opsym_from_ascii(opsym_char(tokens_[pos_++]));
      items.push_back({op, parse_term()});
    }
    if (items.size() == 1 && !lead) return items.front().term;
    return make_chain(std::move(items));
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (peek_is(TokenKind::Star)) {
      ++pos_;
      lhs = make_mul(lhs, parse_factor());
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    if (peek_is(TokenKind::Caret)) {
      ++pos_;
      base = make_pow(base, parse_int());
    }
    return base;
  }

  // Optionally signed integer: the sign arrives as a '+' or '-' opsym token.
  std::int64_t parse_int() {
    bool negative = false;
    if (peek_is(TokenKind::OpSym)) {
      const char c = opsym_char(*peek());
      if (c != '+' && c != '-') fail("integer");
      negative = c == '-';
      ++pos_;
    }
    if (!peek_is(TokenKind::Number)) fail("integer");
    const Token& t = tokens_[pos_];
    std::int64_t value = 0;
    const char* first = t.lexeme.data();
    const char* last = first + t.lexeme.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorKind::ParseError, "integer out of range", t.span);
      }
      fail("integer");
    }
    ++pos_;
    return negative ? -value : value;
  }

  ExprPtr parse_atom() {
    const Token* t = peek();
    if (t == nullptr) fail("number, I, J, i, rot or '('");
    switch (t->kind) {
      case TokenKind::Number: {
        double value = 0.0;
        const char* first = t->lexeme.data();
        const char* last = first + t->lexeme.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
          throw Error(ErrorKind::ParseError, "number literal out of range", t->span);
        }
        ++pos_;
        return make_number(value);
      }
      case TokenKind::Ident: {
        ExprPtr out;
        if (t->lexeme == "I") out = make_const(Constant::I);
        else if (t->lexeme == "J") out = make_const(Constant::J);
        else if (t->lexeme == "i") out = make_const(Constant::i);
        else fail("number, I, J, i, rot or '('");
        ++pos_;
        return out;
      }
      case TokenKind::RotKw: {
        ++pos_;
        expect(TokenKind::LParen, "'('");
        const std::int64_t num = parse_int();
        expect(TokenKind::Comma, "','");
        const Span den_span = at_end() ? Span{text_.size(), text_.size()} : peek()->span;
        const std::int64_t den = parse_int();
        if (den <= 0) {
          throw Error(ErrorKind::ParseError, "rot denominator must be positive", den_span);
        }
        expect(TokenKind::RParen, "')'");
        return make_rot(num, den);
      }
      case TokenKind::LParen: {
        ++pos_;
        ExprPtr inner = parse_expr();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      default: fail("number, I, J, i, rot or '('");
    }
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text, tokenize(text)).parse_all(); }

// --- evaluation ------------------------------------------------------------

namespace {

Complex eval_node(const Expr& e);

struct Evaluator {
  Complex operator()(const Number& n) const { return {n.value, 0.0}; }
  Complex operator()(const Const& c) const {
    switch (c.which) {
      case Constant::I: return rotor_value(rotors::pseudo_i);
      case Constant::J: return rotor_value(rotors::pseudo_j);
      case Constant::i: return rotor_value(rotors::bot);
    }
    return {};
  }
  Complex operator()(const Rot& r) const { return rotor_value(Rotor(r.num, r.den)); }
  Complex operator()(const Chain& c) const {
    Complex sum{0.0, 0.0};
    for (const auto& item : c.items) {
      const Rotor dir = item.op ? rotor_of(*item.op) : rotors::one;
      sum += rotor_value(dir) * eval_node(*item.term);
    }
    return sum;
  }
  Complex operator()(const Mul& m) const { return eval_node(*m.lhs) * eval_node(*m.rhs); }
  Complex operator()(const Pow& p) const {
    const Complex base = eval_node(*p.base);
    if (p.exponent < 0 && base == Complex{0.0, 0.0}) {
      throw Error(ErrorKind::EvaluationError, "zero raised to a negative power");
    }
    return ipow(base, p.exponent);
  }
};

Complex eval_node(const Expr& e) { return std::visit(Evaluator{}, e.node); }

}  // namespace

Complex evaluate(const Expr& e) {
  const Complex v = eval_node(e);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::EvaluationError, "expression value is not finite");
  }
  return v;
}

// --- formatting ------------------------------------------------------------

namespace {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::string fmt(const Expr& e);

std::string paren(const Expr& e) { return "(" + fmt(e) + ")"; }

bool is_atom(const Expr& e) {
  return std::holds_alternative<Number>(e.node) || std::holds_alternative<Const>(e.node) ||
         std::holds_alternative<Rot>(e.node);
}

std::string fmt(const Expr& e) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          return format_number(n.value);
        } else if constexpr (std::is_same_v<T, Const>) {
          switch (n.which) {
            case Constant::I: return "I";
            case Constant::J: return "J";
            case Constant::i: return "i";
          }
          return "?";
        } else if constexpr (std::is_same_v<T, Rot>) {
          return "rot(" + std::to_string(n.num) + "," + std::to_string(n.den) + ")";
        } else if constexpr (std::is_same_v<T, Chain>) {
          std::string out;
          for (std::size_t i = 0; i < n.items.size(); ++i) {
            const auto& item = n.items[i];
            const auto& term = *item.term;
            std::string body =
                std::holds_alternative<Chain>(term.node) ? paren(term) : fmt(term);
            if (i == 0) {
              if (item.op) out += ascii_of(*item.op);
              out += body;
            } else {
              out += ' ';
              out += ascii_of(*item.op);
              out += ' ';
              out += body;
            }
          }
          return out;
        } else if constexpr (std::is_same_v<T, Mul>) {
          const bool lhs_paren = std::holds_alternative<Chain>(n.lhs->node);
          const bool rhs_paren = std::holds_alternative<Chain>(n.rhs->node) ||
                                 std::holds_alternative<Mul>(n.rhs->node);
          return (lhs_paren ? paren(*n.lhs) : fmt(*n.lhs)) + "*" +
                 (rhs_paren ? paren(*n.rhs) : fmt(*n.rhs));
        } else {
          return (is_atom(*n.base) ? fmt(*n.base) : paren(*n.base)) + "^" +
                 std::to_string(n.exponent);
        }
      },
      e.node);
}

}  // namespace

std::string format(const Expr& e) { return fmt(e); }

}  // namespace psop::expr
