#pragma once

// A small expression language for pseudo-operator arithmetic.
//
//   expr   := [opsym] term { opsym term }
//   term   := factor { "*" factor }
//   factor := atom [ "^" int ]
//   atom   := number | "I" | "J" | "i" | "rot" "(" int "," int ")" | "(" expr ")"
//   opsym  := "+" | "-" | "/" | "\" | "_" | "~" | "="
//
// A chain "a OP b" means a + rotor(OP) * b: '/' and '\' are the two
// non-trivial cube roots of unity, '_' and '~' are +i and -i, '-' and '='
// are both the half turn. There is no division or subtraction. The
// typographic forms U+2044, U+2216, U+22A5, U+22A4, U+22A3 and U+2212 are
// accepted as aliases of '/', '\', '_', '~', '=' and '-'.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "psop/error.hpp"
#include "psop/unity_algebra.hpp"

namespace psop::expr {

enum class TokenKind { Number, OpSym, Star, Caret, LParen, RParen, Ident, RotKw, Comma };

struct Token {
  TokenKind kind;
  std::string lexeme;
  Span span;
};

// Throws LexError (with span) on any byte that starts no token.
std::vector<Token> tokenize(std::string_view text);

enum class Constant { I, J, i };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
  double value;  // finite, >= 0
};
struct Const {
  Constant which;
};
// rot(num, den) as written; not reduced, so text round-trips.
struct Rot {
  std::int64_t num;
  std::int64_t den;
};
struct ChainItem {
  std::optional<OpSym> op;  // only the first item may omit it
  ExprPtr term;
};
struct Chain {
  std::vector<ChainItem> items;
};
struct Mul {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Pow {
  ExprPtr base;
  std::int64_t exponent;
};

struct Expr {
  std::variant<Number, Const, Rot, Chain, Mul, Pow> node;
};

// Structural equality (deep).
bool operator==(const Expr& a, const Expr& b);

// Node factories enforce the AST invariants and throw InvalidArgument.
ExprPtr make_number(double value);
ExprPtr make_const(Constant which);
ExprPtr make_rot(std::int64_t num, std::int64_t den);
ExprPtr make_chain(std::vector<ChainItem> items);
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_pow(ExprPtr base, std::int64_t exponent);

// Throws LexError or ParseError, both carrying a span within the input.
ExprPtr parse(std::string_view text);

// Throws EvaluationError for 0 raised to a negative power or any
// non-finite intermediate result.
Complex evaluate(const Expr& e);

// Canonical ASCII text; parse(format(e)) == e.
std::string format(const Expr& e);

}  // namespace psop::expr
