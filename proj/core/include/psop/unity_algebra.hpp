#pragma once

// Exact arithmetic on roots of unity ("pseudo-operators" and
// pseudo-complex numbers).
//
// A Rotor is exp(i*2*pi*num/den) stored as a reduced fraction of a full
// turn, so products, powers and group tables are exact. Floating point only
// enters through rotor_value() and the chain/polar helpers.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace psop {

using Complex = std::complex<double>;

class Rotor {
 public:
  // Identity rotation.
  constexpr Rotor() = default;

  // Any integer numerator, positive denominator; the result is reduced to
  // 0 <= num < den with gcd(num, den) = 1. Throws InvalidOrder if den <= 0.
  Rotor(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  // Multiplicative order of the rotation (equals den for a reduced rotor).
  std::int64_t order() const noexcept { return den_; }

  friend bool operator==(const Rotor&, const Rotor&) = default;
  friend auto operator<=>(const Rotor&, const Rotor&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Named rotations.
namespace rotors {
inline const Rotor one{0, 1};
inline const Rotor slash{1, 3};    // exp(i 2pi/3)
inline const Rotor aslash{2, 3};   // exp(i 4pi/3)
inline const Rotor bot{1, 4};      // i
inline const Rotor top{3, 4};      // -i
inline const Rotor dashv{1, 2};    // -1
inline const Rotor pseudo_i{1, 6}; // exp(i pi/3)
inline const Rotor pseudo_j{1, 8}; // exp(i pi/4)
}  // namespace rotors

// Chain operators of the textual notation. Minus and Dashv are the same
// rotation; they stay distinct so text round-trips.
enum class OpSym { Plus, Minus, Slash, Aslash, Bot, Top, Dashv };

Rotor rotor_of(OpSym op);
char ascii_of(OpSym op);
std::optional<OpSym> opsym_from_ascii(char c);

Complex rotor_value(const Rotor& r);

// R_n = {exp(i 2k pi/n)}, k = 0..n-1.
std::vector<Rotor> nth_roots(std::int64_t n);

// C_n = {exp(i (2k+1) pi/n)}, k = 0..n-1.
std::vector<Rotor> negative_nth_roots(std::int64_t n);

// Floating sum of R_n (negative = false) or C_n (negative = true).
Complex roots_sum(std::int64_t n, bool negative);

// base^k by repeated squaring; exact for small integer powers of real bases,
// unlike std::pow's polar route. 0^k for k < 0 is not handled here.
Complex ipow(Complex base, std::int64_t k);

Rotor rotor_mul(const Rotor& a, const Rotor& b);
Rotor rotor_pow(const Rotor& a, std::int64_t k);

inline Rotor operator*(const Rotor& a, const Rotor& b) { return rotor_mul(a, b); }

// A displacement of `magnitude` units along `rotor`.
class RotatedTerm {
 public:
  // A negative magnitude is folded into the rotor as a half turn.
  RotatedTerm(Rotor rotor, double magnitude);

  const Rotor& rotor() const noexcept { return rotor_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  Rotor rotor_;
  double magnitude_;
};

// Vector sum of the chain; an empty chain is 0.
Complex chain_resultant(std::span<const RotatedTerm> terms);

struct Polar {
  double modulus;
  double angle;  // in (-pi, pi]
};

// Modulus and argument of a*e^{i eta1} + b*e^{i eta2}, a, b >= 0.
// Throws ZeroResultant when the sum vanishes (argument undefined).
Polar pair_polar(double a, double eta1, double b, double eta2);

// <g> in power order g^0, g^1, ... up to the first repeat.
std::vector<Rotor> cyclic_closure(const Rotor& generator);

struct AxiomReport {
  bool closure = false;
  bool associativity = false;
  bool identity = false;
  bool inverses = false;

  bool is_group() const noexcept {
    return closure && associativity && identity && inverses;
  }
};

struct GroupTable {
  std::vector<Rotor> elements;
  // products[i][j] indexes elements[i] * elements[j], or is empty when that
  // product falls outside the set.
  std::vector<std::vector<std::optional<std::size_t>>> products;
  AxiomReport axioms;

  std::size_t order() const noexcept { return elements.size(); }
};

// Products come from rotor_mul; axioms are checked exhaustively. A set that
// is not closed is reported, not rejected. Throws DuplicateElements or
// InvalidArgument (empty input).
GroupTable multiplication_table(std::span<const Rotor> elements);

// Symbolic names in the textual notation: "+1", "/1", "\1", "+I", ...
// for the ternary family and "+1", "_1", "=1", "~1", "+J", ... for the
// quaternary one. Rotors outside the family render as "rot(k,n)".
enum class Notation { Ternary, Quaternary };

std::string notation(const Rotor& r, Notation family);

// Inverse of notation() for "<opsym><base>" labels with base 1, I or J
// (a bare "1" means "+1"). Mixed labels such as "_I" are accepted and
// evaluated as the rotor product. Throws InvalidArgument.
Rotor parse_label(const std::string& label);

}  // namespace psop
