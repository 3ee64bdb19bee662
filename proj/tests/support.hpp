#pragma once

// Independent oracles and random generators shared by the unit tests and
// the acceptance runner. Nothing here calls into the code under test for
// the quantity it is meant to check.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "psop/pseudo_expr.hpp"

namespace psop::test {

using cd = std::complex<double>;
using boost::multiprecision::cpp_int;

// Eigenvalues of the companion matrix of x^n = c_{n-1} x^{n-1} + ... + c_0.
inline std::vector<cd> companion_roots(const std::vector<double>& c) {
  const auto n = static_cast<Eigen::Index>(c.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (Eigen::Index j = 0; j < n; ++j) m(j, n - 1) = c[static_cast<std::size_t>(j)];
  const Eigen::VectorXcd ev = m.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Plain big-integer iteration, written out independently of the library.
inline std::vector<cpp_int> big_iterate(const std::vector<long long>& c,
                                        const std::vector<long long>& seeds, std::size_t count) {
  std::vector<cpp_int> x(seeds.begin(), seeds.end());
  while (x.size() < count) {
    cpp_int next = 0;
    const std::size_t base = x.size() - c.size();
    for (std::size_t j = 0; j < c.size(); ++j) next += cpp_int(c[j]) * x[base + j];
    x.push_back(next);
  }
  x.resize(count);
  return x;
}

// Coefficients c_0..c_{n-1} of x^n = sum c_j x^j with the given roots
// (expanded product, conjugate pairs give real coefficients).
inline std::vector<double> coeffs_from_roots(const std::vector<cd>& roots) {
  std::vector<cd> poly{1.0};  // ascending powers of prod (x - r)
  for (const auto& r : roots) {
    std::vector<cd> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= r * poly[i];
    }
    poly = next;
  }
  std::vector<double> c;
  for (std::size_t j = 0; j + 1 < poly.size(); ++j) c.push_back(-poly[j].real());
  return c;
}

inline double max_abs(const std::vector<cd>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Best max-error pairing by brute force, kept separate from the library's.
inline double pair_distance(std::vector<cd> a, const std::vector<cd>& b) {
  if (a.size() != b.size()) return 1e300;
  std::vector<std::size_t> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  double best = 1e300;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Random ASTs of bounded depth whose numbers print and re-read exactly.
class AstGen {
 public:
  explicit AstGen(std::uint64_t seed) : rng_(seed) {}

  expr::ExprPtr operator()(int depth) {
    const int pick = depth <= 0 ? uniform(0, 2) : uniform(0, 5);
    switch (pick) {
      case 0: return number();
      case 1: return expr::make_const(static_cast<expr::Constant>(uniform(0, 2)));
      case 2: return expr::make_rot(uniform(-12, 12), uniform(1, 12));
      case 3: {
        std::vector<expr::ChainItem> items;
        const int len = uniform(1, 4);
        for (int i = 0; i < len; ++i) {
          std::optional<OpSym> op;
          if (i > 0 || len == 1 || uniform(0, 1) == 1) op = static_cast<OpSym>(uniform(0, 6));
          items.push_back({op, (*this)(depth - 1)});
        }
        return expr::make_chain(std::move(items));
      }
      case 4: return expr::make_mul((*this)(depth - 1), (*this)(depth - 1));
      default: return expr::make_pow((*this)(depth - 1), uniform(-3, 3));
    }
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  expr::ExprPtr number() {
    switch (uniform(0, 3)) {
      case 0: return expr::make_number(uniform(0, 9));
      case 1: return expr::make_number(uniform(0, 999) / 8.0);
      case 2: return expr::make_number(std::uniform_real_distribution<double>(0.1, 3.0)(rng_));
      default: return expr::make_number(std::ldexp(uniform(1, 9), uniform(-30, 30)));
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace psop::test
