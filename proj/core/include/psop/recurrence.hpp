#pragma once

// Homogeneous linear recurrences x_{k+n} = sum_j c_j x_{k+j}.
//
// Integral recurrences (integer coefficients and seeds) are iterated in
// exact arbitrary-precision arithmetic; that iteration is the ground truth
// every closed form in this library is checked against.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "psop/unity_algebra.hpp"

namespace psop {

using BigInt = boost::multiprecision::cpp_int;

class Recurrence {
 public:
  // coeffs = c_0..c_{n-1}, seeds = x_0..x_{n-1}. Throws InvalidOrder for
  // n = 0, ArityMismatch for unequal lengths, InvalidArgument for
  // non-finite values.
  Recurrence(std::vector<double> coeffs, std::vector<double> seeds);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  const std::vector<double>& seeds() const noexcept { return seeds_; }

  // True when every coefficient and seed is an integer of magnitude <= 2^53.
  bool integral() const noexcept { return integral_; }

 private:
  std::vector<double> coeffs_;
  std::vector<double> seeds_;
  bool integral_ = false;
};

// c_j = -a_j / a_n for a general recurrence sum_{j=0}^{n} a_j x_{k+j} = 0.
// Throws ZeroLeadingCoefficient, or InvalidOrder when fewer than two a's.
std::vector<double> from_general(std::span<const double> a);

// x_0..x_{count-1}; exact when the recurrence is integral.
class Sequence {
 public:
  explicit Sequence(std::vector<BigInt> exact);
  explicit Sequence(std::vector<double> approx);

  bool is_exact() const noexcept { return exact_; }
  std::size_t size() const noexcept { return exact_ ? integers_.size() : reals_.size(); }

  // Only valid when is_exact().
  const BigInt& exact(std::size_t k) const { return integers_.at(k); }
  const std::vector<BigInt>& integers() const noexcept { return integers_; }

  // Nearest double (exact sequences are converted on demand).
  double approx(std::size_t k) const;

 private:
  bool exact_;
  std::vector<BigInt> integers_;
  std::vector<double> reals_;
};

Sequence iterate(const Recurrence& rec, std::size_t count);

// Monic x^n - c_{n-1} x^{n-1} - ... - c_1 x - c_0, stored as the c-vector.
class CharPoly {
 public:
  explicit CharPoly(std::vector<double> c);

  std::size_t degree() const noexcept { return c_.size(); }
  const std::vector<double>& c() const noexcept { return c_; }

  Complex operator()(Complex x) const;

  // 1 + max |c_j|; the natural size of the roots.
  double scale() const noexcept;

 private:
  std::vector<double> c_;
};

CharPoly characteristic_polynomial(const Recurrence& rec);

// Estimate of lim x_{k+1}/x_k using x_{iters}/x_{iters-1}. The estimate is
// accepted only if the last five ratios agree within 1e-6.
// Throws InvalidArgument (iters < n + 2), ZeroDivisionInRatio, NonConvergent.
double characteristic_ratio(const Recurrence& rec, std::size_t iters);

}  // namespace psop
