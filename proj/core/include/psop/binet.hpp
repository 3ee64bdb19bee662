#pragma once

// Closed-form (Binet-style) evaluation of recurrence terms.
//
// Three independent routes are provided and cross-checked by verify():
//   * weights: x_k = sum_j w_j r_j^k + w_{n+1}, with the weights solved from
//     the (n+1) x (n+1) system over x_0..x_n;
//   * binet2 / binet3: the explicit order-2 and order-3 formulas written in
//     terms of the resolvents sigma1, sigma2;
//   * m_form: x_k as a combination of rotor-signed root-power chains
//     (orders 2, 3 and 4).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psop/recurrence.hpp"
#include "psop/root_solver.hpp"
#include "psop/unity_algebra.hpp"

namespace psop {

struct BinetForm {
  Recurrence source;
  RootSet roots;                 // weights[j] pairs with roots.roots[j]
  std::vector<Complex> weights;  // w_1..w_{n+1}; the last is the constant term

  const Complex& constant_term() const { return weights.back(); }
};

// Throws DegenerateRoots (separation <= 1e-7 * scale) or SingularSystem
// (a root within 1e-9 of 1, which duplicates the constant column).
BinetForm solve_weights(const Recurrence& rec, RootStrategy strategy = RootStrategy::Closed);

struct ClosedValue {
  Complex value;
  // Integral sources with |value| < 2^52 only.
  std::optional<std::int64_t> rounded;
  double distance_to_integer = 0.0;
};

ClosedValue closed_term(const BinetForm& form, std::int64_t k);

// ((2x1 - c1 x0)/2) (r1^k - r2^k)/sqrt(c1^2 + 4c0) + (x0/2)(r1^k + r2^k)
// with r1,2 = (c1 +- sqrt(c1^2 + 4c0))/2. Order 2 only.
double binet2(const Recurrence& rec, std::int64_t k);

// The order-3 resolvent formula. Order 3 only.
double binet3(const Recurrence& rec, std::int64_t k);

struct MTerm {
  Complex coefficient;
  std::vector<Rotor> signature;  // rotor applied to r_1^k, r_2^k, ...
};

struct MForm {
  int order = 0;
  std::vector<Complex> roots;  // r_1..r_n in the labelling the terms use
  std::vector<MTerm> terms;

  Complex evaluate(std::int64_t k) const;
};

// Order 2: M1 = x0/2, M2 = (2x1 - c1 x0)/(2 sigma1).
// Order 3: M1..M3 solved from the seeds over (+,+,+), (+,/,\), (+,\,/).
// Order 4: M5 = M6 = M7 = 0; M1..M4 solved from the four seeds.
// Throws ArityMismatch for other orders, DegenerateRoots.
MForm m_form(const Recurrence& rec);

enum class ComponentKind { F, L, A, B, C };

// F, L need order 2; A, B, C need order 3. Throws ArityMismatch.
Complex component(const Recurrence& rec, ComponentKind kind, std::int64_t k);

struct PathReport {
  std::string path;
  double max_rel_err = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::size_t kmax = 0;
  double tolerance = 0.0;
  std::vector<PathReport> paths;

  bool pass() const;
};

// max_k<=kmax |closed - iterate| / max(1, |iterate|) for every evaluation
// path available at the recurrence's order.
VerifyReport verify(const Recurrence& rec, std::size_t kmax, double rel_tol);

}  // namespace psop
