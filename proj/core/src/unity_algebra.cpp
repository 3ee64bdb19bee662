#include "psop/unity_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

#include "psop/error.hpp"

namespace psop {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t floor_mod(Wide value, std::int64_t modulus) {
  Wide r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::int64_t>(r);
}

}  // namespace

Rotor::Rotor(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw Error(ErrorKind::InvalidOrder,
                "rotor denominator must be positive, got " + std::to_string(den));
  }
  std::int64_t n = floor_mod(num, den);
  std::int64_t g = std::gcd(n, den);
  num_ = n / g;
  den_ = den / g;
}

Rotor rotor_of(OpSym op) {
  switch (op) {
    case OpSym::Plus: return rotors::one;
    case OpSym::Minus: return rotors::dashv;
    case OpSym::Slash: return rotors::slash;
    case OpSym::Aslash: return rotors::aslash;
    case OpSym::Bot: return rotors::bot;
    case OpSym::Top: return rotors::top;
    case OpSym::Dashv: return rotors::dashv;
  }
  return rotors::one;
}

char ascii_of(OpSym op) {
  switch (op) {
    case OpSym::Plus: return '+';
    case OpSym::Minus: return '-';
    case OpSym::Slash: return '/';
    case OpSym::Aslash: return '\\';
    case OpSym::Bot: return '_';
    case OpSym::Top: return '~';
    case OpSym::Dashv: return '=';
  }
  return '?';
}

std::optional<OpSym> opsym_from_ascii(char c) {
  switch (c) {
    case '+': return OpSym::Plus;
    case '-': return OpSym::Minus;
    case '/': return OpSym::Slash;
    case '\\': return OpSym::Aslash;
    case '_': return OpSym::Bot;
    case '~': return OpSym::Top;
    case '=': return OpSym::Dashv;
    default: return std::nullopt;
  }
}

Complex rotor_value(const Rotor& r) {
  // Reduce to the first octant: quarter turns come out exact and mirrored
  // rotations (k/n and (n-k)/n) are exact conjugates of each other.
  const Wide scaled = static_cast<Wide>(r.num()) * 4;
  const auto quadrant = static_cast<int>(scaled / r.den());
  const auto rest = static_cast<std::int64_t>(scaled % r.den());
  const Wide twice_rest = static_cast<Wide>(rest) * 2;
  double c = 1.0;
  double s = 0.0;
  if (rest == 0) {
    // exact axis
  } else if (twice_rest == r.den()) {
    c = s = std::sqrt(0.5);
  } else {
    const bool upper = twice_rest > r.den();
    const std::int64_t part = upper ? r.den() - rest : rest;
    const double theta =
        std::numbers::pi / 2 * (static_cast<double>(part) / static_cast<double>(r.den()));
    c = std::cos(theta);
    s = std::sin(theta);
    if (upper) std::swap(c, s);
  }
  switch (quadrant) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

std::vector<Rotor> nth_roots(std::int64_t n) {
  if (n <= 0) {
    throw Error(ErrorKind::InvalidOrder, "root order must be >= 1, got " + std::to_string(n));
  }
  std::vector<Rotor> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) out.emplace_back(k, n);
  return out;
}

std::vector<Rotor> negative_nth_roots(std::int64_t n) {
  if (n <= 0) {
    throw Error(ErrorKind::InvalidOrder, "root order must be >= 1, got " + std::to_string(n));
  }
  std::vector<Rotor> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) out.emplace_back(2 * k + 1, 2 * n);
  return out;
}

Complex roots_sum(std::int64_t n, bool negative) {
  const auto family = negative ? negative_nth_roots(n) : nth_roots(n);
  Complex sum{0.0, 0.0};
  for (const auto& r : family) sum += rotor_value(r);
  return sum;
}

Complex ipow(Complex base, std::int64_t k) {
  if (k < 0) return 1.0 / ipow(base, -k);
  Complex result{1.0, 0.0};
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Rotor rotor_mul(const Rotor& a, const Rotor& b) {
  const std::int64_t l = std::lcm(a.den(), b.den());
  const Wide num = static_cast<Wide>(a.num()) * (l / a.den()) +
                   static_cast<Wide>(b.num()) * (l / b.den());
  return Rotor(floor_mod(num, l), l);
}

Rotor rotor_pow(const Rotor& a, std::int64_t k) {
  return Rotor(floor_mod(static_cast<Wide>(a.num()) * k, a.den()), a.den());
}

RotatedTerm::RotatedTerm(Rotor rotor, double magnitude)
    : rotor_(magnitude < 0 ? rotor * rotors::dashv : rotor),
      magnitude_(std::abs(magnitude)) {}

Complex chain_resultant(std::span<const RotatedTerm> terms) {
  Complex sum{0.0, 0.0};
  for (const auto& t : terms) sum += t.magnitude() * rotor_value(t.rotor());
  return sum;
}

Polar pair_polar(double a, double eta1, double b, double eta2) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "pair_polar magnitudes must be non-negative");
  }
  const double squared = a * a + b * b + 2.0 * a * b * std::cos(eta1 - eta2);
  const double modulus = std::sqrt(std::max(squared, 0.0));
  if (modulus < 1e-14) {
    throw Error(ErrorKind::ZeroResultant, "resultant vanishes; angle undefined");
  }
  const double y = a * std::sin(eta1) + b * std::sin(eta2);
  const double x = a * std::cos(eta1) + b * std::cos(eta2);
  double angle = std::atan2(y, x);
  if (angle <= -std::numbers::pi) angle = std::numbers::pi;
  return {modulus, angle};
}

std::vector<Rotor> cyclic_closure(const Rotor& generator) {
  std::vector<Rotor> out{rotors::one};
  for (Rotor p = generator; p != rotors::one; p = p * generator) out.push_back(p);
  return out;
}

GroupTable multiplication_table(std::span<const Rotor> elements) {
  if (elements.empty()) {
    throw Error(ErrorKind::InvalidArgument, "multiplication table needs at least one element");
  }
  std::vector<Rotor> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DuplicateElements, "multiplication table elements must be distinct");
  }

  GroupTable table;
  table.elements.assign(elements.begin(), elements.end());
  const std::size_t n = table.elements.size();
  auto index_of = [&](const Rotor& r) -> std::optional<std::size_t> {
    auto it = std::find(table.elements.begin(), table.elements.end(), r);
    if (it == table.elements.end()) return std::nullopt;
    return static_cast<std::size_t>(it - table.elements.begin());
  };

  table.products.assign(n, std::vector<std::optional<std::size_t>>(n));
  bool closed = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table.products[i][j] = index_of(table.elements[i] * table.elements[j]);
      closed = closed && table.products[i][j].has_value();
    }
  }
  table.axioms.closure = closed;

  bool assoc = true;
  for (const auto& x : table.elements)
    for (const auto& y : table.elements)
      for (const auto& z : table.elements) assoc = assoc && ((x * y) * z == x * (y * z));
  table.axioms.associativity = assoc;

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      ok = table.products[e][j] == j && table.products[j][e] == j;
    }
    if (ok) identity = e;
  }
  table.axioms.identity = identity.has_value();

  bool inverses = identity.has_value();
  for (std::size_t i = 0; i < n && inverses; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      found = table.products[i][j] == identity && table.products[j][i] == identity;
    }
    inverses = found;
  }
  table.axioms.inverses = inverses;
  return table;
}

std::string notation(const Rotor& r, Notation family) {
  static constexpr char ternary_ops[] = {'+', '/', '\\'};
  static constexpr char quaternary_ops[] = {'+', '_', '=', '~'};
  const std::int64_t steps = family == Notation::Ternary ? 6 : 8;
  if (steps % r.den() == 0) {
    const std::int64_t k = r.num() * (steps / r.den());
    const char base = (k % 2 == 0) ? '1' : (family == Notation::Ternary ? 'I' : 'J');
    const auto op_index = static_cast<std::size_t>(k / 2);
    const char op = family == Notation::Ternary ? ternary_ops[op_index] : quaternary_ops[op_index];
    return std::string{op, base};
  }
  return "rot(" + std::to_string(r.num()) + "," + std::to_string(r.den()) + ")";
}

Rotor parse_label(const std::string& label) {
  std::string_view text = label;
  Rotor op = rotors::one;
  if (text.size() == 2) {
    auto sym = opsym_from_ascii(text.front());
    if (!sym) throw Error(ErrorKind::InvalidArgument, "unknown operator in label '" + label + "'");
    op = rotor_of(*sym);
    text.remove_prefix(1);
  }
  if (text.size() != 1) throw Error(ErrorKind::InvalidArgument, "malformed label '" + label + "'");
  switch (text.front()) {
    case '1': return op;
    case 'I': return op * rotors::pseudo_i;
    case 'J': return op * rotors::pseudo_j;
    default: throw Error(ErrorKind::InvalidArgument, "unknown base in label '" + label + "'");
  }
}

}  // namespace psop
