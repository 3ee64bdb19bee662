#include "psop/root_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

#include "psop/error.hpp"

namespace psop {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// True when a should precede b in the canonical root order.
bool precedes(const Complex& a, const Complex& b, double tie) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (std::abs(ma - mb) > tie) return ma > mb;
  if (std::abs(a.real() - b.real()) > tie) return a.real() > b.real();
  return a.imag() > b.imag();
}

// Real inputs keep real cube roots; otherwise the principal branch.
Complex cube_root(Complex z) {
  if (z.imag() == 0.0) return {std::cbrt(z.real()), 0.0};
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

}  // namespace

std::string_view to_string(RootMethod m) {
  switch (m) {
    case RootMethod::Closed2: return "closed2";
    case RootMethod::Closed3: return "closed3";
    case RootMethod::Numeric: return "numeric";
  }
  return "unknown";
}

double RootSet::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

RootSet make_root_set(std::vector<Complex> roots, RootMethod method, const CharPoly& p) {
  const double tie = 1e-10 * p.scale();
  // Insertion sort: the tolerant comparator is not a strict weak order.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    for (std::size_t j = i; j > 0 && precedes(roots[j], roots[j - 1], tie); --j) {
      std::swap(roots[j], roots[j - 1]);
    }
  }
  RootSet out;
  out.method = method;
  out.residuals.reserve(roots.size());
  for (const auto& r : roots) out.residuals.push_back(std::abs(p(r)));
  out.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      out.min_separation = std::min(out.min_separation, std::abs(roots[i] - roots[j]));
  out.roots = std::move(roots);
  return out;
}

QuadraticSolution quadratic_roots(double c0, double c1) {
  QuadraticSolution out;
  out.sigma1 = std::sqrt(Complex(c1 * c1 + 4.0 * c0, 0.0));
  out.r_plus = (c1 + out.sigma1) / 2.0;
  out.r_minus = (c1 - out.sigma1) / 2.0;
  out.roots = make_root_set({out.r_plus, out.r_minus}, RootMethod::Closed2, CharPoly({c0, c1}));
  return out;
}

ResolventSet cubic_resolvents(double c0, double c1, double c2) {
  ResolventSet out;
  out.degree = 3;
  const double A = 2.0 * c2 * c2 * c2 + 9.0 * c1 * c2 + 27.0 * c0;
  const double B = c2 * c2 + 3.0 * c1;
  out.A = A;
  out.B = B;

  const Complex root_disc = std::sqrt(Complex(A * A - 4.0 * B * B * B, 0.0));
  const Complex u = (A + root_disc) / 2.0;  // sigma1^3
  const Complex v = (A - root_disc) / 2.0;  // sigma2^3

  Complex sigma1{0.0, 0.0};
  Complex sigma2{0.0, 0.0};
  // Take the cube root of the larger of u, v and recover the other from
  // u v = B^3, which avoids cancellation in A -+ sqrt(disc).
  const bool u_big = std::abs(u) >= std::abs(v);
  const Complex big = u_big ? u : v;
  if (big != Complex{0.0, 0.0}) {
    const Complex big_root = cube_root(big);
    const Complex small_cube = (B * B * B) / big;
    const Complex small_principal = cube_root(small_cube);
    const Complex omega = rotor_value(rotors::slash);

    Complex best = small_principal;
    double best_err = std::numeric_limits<double>::infinity();
    Complex candidate = small_principal;
    for (int k = 0; k < 3; ++k, candidate *= omega) {
      const double err = std::abs(big_root * candidate - B);
      if (err < best_err) {
        best_err = err;
        best = candidate;
      }
    }
    if (best_err > 1e-6 * (1.0 + std::abs(B))) {
      throw Error(ErrorKind::BranchSelectionFailed,
                  "no cube-root pairing satisfies sigma1 * sigma2 = B");
    }
    // Conjugate cubes (three real roots): pin the partner to the exact
    // conjugate so the reconstructed roots stay real.
    if (u.imag() != 0.0 && std::abs(best - std::conj(big_root)) <= 1e-12 * std::abs(big_root)) {
      best = std::conj(big_root);
    }
    sigma1 = u_big ? big_root : best;
    sigma2 = u_big ? best : big_root;
  }
  out.sigmas = {sigma1, sigma2};
  return out;
}

CubicSolution cubic_roots(double c0, double c1, double c2) {
  CubicSolution out;
  out.resolvents = cubic_resolvents(c0, c1, c2);
  const Complex s1 = out.resolvents.sigmas[0];
  const Complex s2 = out.resolvents.sigmas[1];
  const Complex slash = rotor_value(rotors::slash);
  const Complex aslash = rotor_value(rotors::aslash);
  out.labelled = {
      (c2 + s1 + s2) / 3.0,
      (c2 + aslash * s1 + slash * s2) / 3.0,
      (c2 + slash * s1 + aslash * s2) / 3.0,
  };
  out.roots = make_root_set({out.labelled.begin(), out.labelled.end()}, RootMethod::Closed3,
                            CharPoly({c0, c1, c2}));
  return out;
}

RootSet numeric_roots(const CharPoly& p, double tol) {
  constexpr int kMaxSweeps = 1000;
  const std::size_t n = p.degree();
  const double radius = p.scale();
  const auto& c = p.c();

  // Bound on the rounding error of evaluating p at |z|.
  auto rounding_floor = [&](const Complex& z) {
    const double az = std::abs(z);
    double acc = 1.0;
    for (std::size_t j = n; j-- > 0;) acc = acc * az + std::abs(c[j]);
    return 16.0 * kEps * acc;
  };

  std::vector<Complex> z(n);
  const double offset = (std::sqrt(5.0) - 1.0) / 2.0;  // radians
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                      static_cast<double>(n) + offset);
  }

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double max_update = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom{1.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= (z[i] - z[j]);
      }
      if (denom == Complex{0.0, 0.0}) denom = Complex{kEps * radius, 0.0};
      const Complex delta = p(z[i]) / denom;
      z[i] -= delta;
      max_update = std::max(max_update, std::abs(delta));
    }
    bool at_floor = true;
    for (const auto& zi : z) at_floor = at_floor && std::abs(p(zi)) <= rounding_floor(zi);
    if (max_update <= tol * radius || at_floor) {
      return make_root_set(std::move(z), RootMethod::Numeric, p);
    }
  }
  throw Error(ErrorKind::NoConvergence, "Durand-Kerner iteration did not converge in 1000 sweeps");
}

RootSet solve_roots(const CharPoly& p, RootStrategy strategy) {
  if (strategy == RootStrategy::Closed) {
    if (p.degree() == 2) return quadratic_roots(p.c()[0], p.c()[1]).roots;
    if (p.degree() == 3) return cubic_roots(p.c()[0], p.c()[1], p.c()[2]).roots;
  }
  return numeric_roots(p);
}

std::vector<double> vieta_residuals(std::span<const Complex> roots, const CharPoly& p) {
  const std::size_t n = p.degree();
  if (roots.size() != n) {
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(n) + " roots, got " +
                                              std::to_string(roots.size()));
  }
  // e[k] = k-th elementary symmetric polynomial, built incrementally.
  std::vector<Complex> e(n + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * roots[i];
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k+1}
    out.push_back(std::abs(e[k] - sign * p.c()[n - k]));
  }
  return out;
}

std::vector<double> vieta_residuals(const RootSet& roots, const CharPoly& p) {
  return vieta_residuals(std::span<const Complex>(roots.roots), p);
}

bool PermutationTable::symmetric() const {
  return std::all_of(signature.begin(), signature.end(),
                     [](const Rotor& r) { return r == rotors::one; });
}

std::vector<PermutationTable> permutation_tables(int n) {
  using Rows = std::vector<std::vector<std::size_t>>;
  const auto& one = rotors::one;
  switch (n) {
    case 2: {
      const Rows rows{{0, 1}, {1, 0}};
      return {{{one, one}, rows}, {{one, rotors::dashv}, rows}};
    }
    case 3: {
      const Rows rows{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
      return {{{one, one, one}, rows},
              {{one, rotors::slash, rotors::aslash}, rows},
              {{one, rotors::aslash, rotors::slash}, rows}};
    }
    case 4: {
      const std::vector<Rotor> signed_sig{one, rotors::bot, rotors::top, rotors::dashv};
      // r = 0, s = 1, t = 2, u = 3
      return {
          {{one, one, one, one}, {{0, 1, 2, 3}, {3, 0, 1, 2}, {2, 3, 0, 1}, {1, 2, 3, 0}}},
          {signed_sig, {{0, 1, 2, 3}, {3, 0, 1, 2}, {2, 3, 0, 1}, {1, 2, 3, 0}}},
          {signed_sig, {{0, 1, 3, 2}, {2, 0, 1, 3}, {3, 2, 0, 1}, {1, 3, 2, 0}}},
          {signed_sig, {{0, 2, 1, 3}, {3, 0, 2, 1}, {1, 3, 0, 2}, {2, 1, 3, 0}}},
          {signed_sig, {{0, 2, 3, 1}, {1, 0, 2, 3}, {3, 1, 0, 2}, {2, 3, 1, 0}}},
          {signed_sig, {{0, 3, 1, 2}, {2, 0, 3, 1}, {1, 2, 0, 3}, {3, 1, 2, 0}}},
          {signed_sig, {{0, 3, 2, 1}, {1, 0, 3, 2}, {2, 1, 0, 3}, {3, 2, 1, 0}}},
      };
    }
    default:
      throw Error(ErrorKind::UnsupportedDegree,
                  "permutation tables exist for n = 2, 3, 4; got " + std::to_string(n));
  }
}

std::vector<Complex> sigma_from_roots(std::span<const Complex> roots, const PermutationTable& table) {
  if (roots.size() != table.signature.size()) {
    throw Error(ErrorKind::ArityMismatch, "table width " + std::to_string(table.signature.size()) +
                                              " does not match " + std::to_string(roots.size()) +
                                              " roots");
  }
  std::vector<Complex> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < row.size(); ++j) sum += rotor_value(table.signature[j]) * roots[row[j]];
    out.push_back(sum);
  }
  return out;
}

std::vector<Complex> independent_sigmas(std::span<const Complex> roots) {
  const int n = static_cast<int>(roots.size());
  const auto tables = permutation_tables(n);
  std::vector<Complex> out;
  for (const auto& t : tables) {
    if (!t.symmetric()) out.push_back(sigma_from_roots(roots, t).front());
  }
  return out;
}

SigmaInversion roots_from_sigma(double c_top, std::span<const Complex> sigmas, int n) {
  const std::size_t expected = n == 2 ? 1 : n == 3 ? 2 : n == 4 ? 6 : 0;
  if (expected == 0) {
    throw Error(ErrorKind::UnsupportedDegree,
                "roots_from_sigma supports n = 2, 3, 4; got " + std::to_string(n));
  }
  if (sigmas.size() != expected) {
    throw Error(ErrorKind::ArityMismatch, "n = " + std::to_string(n) + " needs " +
                                              std::to_string(expected) + " sigmas, got " +
                                              std::to_string(sigmas.size()));
  }
  SigmaInversion out;
  if (n == 2) {
    out.roots = {(c_top + sigmas[0]) / 2.0, (c_top - sigmas[0]) / 2.0};
    return out;
  }
  if (n == 3) {
    const Complex slash = rotor_value(rotors::slash);
    const Complex aslash = rotor_value(rotors::aslash);
    out.roots = {(c_top + sigmas[0] + sigmas[1]) / 3.0,
                 (c_top + aslash * sigmas[0] + slash * sigmas[1]) / 3.0,
                 (c_top + slash * sigmas[0] + aslash * sigmas[1]) / 3.0};
    return out;
  }

  const auto tables = permutation_tables(4);
  Eigen::Matrix<Complex, 7, 4> system;
  Eigen::Matrix<Complex, 7, 1> rhs;
  system.row(0).setConstant(Complex{1.0, 0.0});
  rhs(0) = c_top;
  double scale = 1.0 + std::abs(c_top);
  for (int k = 0; k < 6; ++k) {
    const auto& table = tables[static_cast<std::size_t>(k + 1)];
    const auto& row = table.rows.front();
    system.row(k + 1).setZero();
    for (std::size_t j = 0; j < 4; ++j) {
      system(k + 1, static_cast<Eigen::Index>(row[j])) = rotor_value(table.signature[j]);
    }
    rhs(k + 1) = sigmas[static_cast<std::size_t>(k)];
    scale = std::max(scale, 1.0 + std::abs(sigmas[static_cast<std::size_t>(k)]));
  }
  const Eigen::Matrix<Complex, 4, 1> x = system.colPivHouseholderQr().solve(rhs);
  out.residual = (system * x - rhs).norm();
  if (out.residual > 1e-8 * scale) {
    throw Error(ErrorKind::InconsistentSigmas,
                "quartic sigmas are inconsistent (least-squares residual " +
                    std::to_string(out.residual) + ")");
  }
  out.roots.assign(x.data(), x.data() + 4);
  return out;
}

double matched_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::ArityMismatch, "cannot match root lists of different sizes");
  }
  if (a.size() > 8) throw Error(ErrorKind::InvalidArgument, "matched_distance supports n <= 8");
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size() && worst < best; ++i) {
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.empty() ? 0.0 : best;
}

}  // namespace psop
