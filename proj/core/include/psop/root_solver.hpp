#pragma once

// Characteristic roots of x^n = c_{n-1} x^{n-1} + ... + c_0.
//
// Degrees 2 and 3 are solved in closed form through resolvents: signed
// rotor combinations of the roots ("sigmas") taken over permutation
// tables. Any degree can be solved numerically by Weierstrass
// (Durand-Kerner) simultaneous iteration.
//
// RootSet lists roots by descending modulus, then descending real part,
// then descending imaginary part. The closed-form solutions also expose the
// resolvent labelling (r, s, t) that the sigma formulas are written in.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "psop/recurrence.hpp"
#include "psop/unity_algebra.hpp"

namespace psop {

enum class RootMethod { Closed2, Closed3, Numeric };

std::string_view to_string(RootMethod m);

struct RootSet {
  std::vector<Complex> roots;
  RootMethod method = RootMethod::Numeric;
  std::vector<double> residuals;  // |p(root)| per root
  double min_separation = 0.0;    // +inf for a single root

  double max_residual() const;
};

// Sorts `roots` into the canonical order and fills residuals and
// separation against `p`.
RootSet make_root_set(std::vector<Complex> roots, RootMethod method, const CharPoly& p);

struct QuadraticSolution {
  RootSet roots;
  Complex sigma1;       // sqrt(c1^2 + 4 c0), principal branch
  Complex r_plus;       // (c1 + sigma1) / 2
  Complex r_minus;      // (c1 - sigma1) / 2
};

QuadraticSolution quadratic_roots(double c0, double c1);

struct ResolventSet {
  int degree = 0;
  std::vector<Complex> sigmas;  // degree 2: {sigma1}; degree 3: {sigma1, sigma2}
  std::optional<double> A;      // degree 3 only: 2c2^3 + 9c1c2 + 27c0
  std::optional<double> B;      // degree 3 only: c2^2 + 3c1
};

// sigma1^3 and sigma2^3 are (A +- sqrt(A^2 - 4B^3))/2; the cube-root
// branches are paired so that sigma1 * sigma2 = B.
// Throws BranchSelectionFailed if no pairing satisfies that within 1e-6.
ResolventSet cubic_resolvents(double c0, double c1, double c2);

struct CubicSolution {
  RootSet roots;
  ResolventSet resolvents;
  std::array<Complex, 3> labelled;  // (r, s, t) in resolvent order
};

// r = (c2 + s1 + s2)/3, s = (c2 \s1 /s2)/3, t = (c2 /s1 \s2)/3.
CubicSolution cubic_roots(double c0, double c1, double c2);

// Throws NoConvergence after 1000 sweeps.
RootSet numeric_roots(const CharPoly& p, double tol = 1e-14);

enum class RootStrategy { Closed, Numeric };

// Closed form for degrees 2 and 3 when asked, numeric otherwise.
RootSet solve_roots(const CharPoly& p, RootStrategy strategy = RootStrategy::Closed);

// |e_k(roots) - (-1)^{k+1} c_{n-k}| for k = 1..n. Throws ArityMismatch.
std::vector<double> vieta_residuals(std::span<const Complex> roots, const CharPoly& p);
std::vector<double> vieta_residuals(const RootSet& roots, const CharPoly& p);

struct PermutationTable {
  std::vector<Rotor> signature;
  std::vector<std::vector<std::size_t>> rows;  // root labels 0 = r, 1 = s, ...

  bool symmetric() const;
};

// n = 2: (+,+), (+,-). n = 3: (+,+,+), (+,/,\), (+,\,/). n = 4: (+,+,+,+)
// and six (+,_,~,=) tables over the distinct root arrangements.
// Throws UnsupportedDegree for other n.
std::vector<PermutationTable> permutation_tables(int n);

// One sigma per table row. Throws ArityMismatch.
std::vector<Complex> sigma_from_roots(std::span<const Complex> roots, const PermutationTable& table);

// The sigmas that roots_from_sigma consumes: n = 2 {r - s}; n = 3 the first
// rows of (+,/,\) and (+,\,/); n = 4 the first row of each signed table.
std::vector<Complex> independent_sigmas(std::span<const Complex> roots);

struct SigmaInversion {
  std::vector<Complex> roots;  // in label order r, s, t, u
  double residual = 0.0;       // least-squares residual (n = 4), else 0
};

// Inverse of independent_sigmas given c_{n-1}. For n = 4 the symmetric sum
// and the six signed combinations are solved in the least-squares sense.
// Throws UnsupportedDegree, ArityMismatch, InconsistentSigmas.
SigmaInversion roots_from_sigma(double c_top, std::span<const Complex> sigmas, int n);

// Smallest max |a_i - b_pi(i)| over all pairings (brute force, n <= 8).
double matched_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace psop
