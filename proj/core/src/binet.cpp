#include "psop/binet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "psop/error.hpp"

namespace psop {

namespace {

constexpr double kSeparationTol = 1e-7;
constexpr double kUnitRootTol = 1e-9;
constexpr double kSnapLimit = 4503599627370496.0;  // 2^52

void require_order(const Recurrence& rec, std::size_t order, const char* what) {
  if (rec.order() != order) {
    throw Error(ErrorKind::ArityMismatch, std::string(what) + " needs order " +
                                              std::to_string(order) + ", got " +
                                              std::to_string(rec.order()));
  }
}

void require_nonnegative(std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "term index must be >= 0");
}

void require_distinct(std::span<const Complex> roots, double scale) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) <= kSeparationTol * scale) {
        throw Error(ErrorKind::DegenerateRoots,
                    "characteristic roots are repeated; no distinct-root closed form");
      }
    }
  }
}

// sum_j rotor_j * r_j^k
Complex signed_chain(std::span<const Complex> roots, std::span<const Rotor> signature,
                     std::int64_t k) {
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < roots.size(); ++j) sum += rotor_value(signature[j]) * ipow(roots[j], k);
  return sum;
}

struct Order2 {
  QuadraticSolution sol;
  std::array<Complex, 2> roots;
};

Order2 order2(const Recurrence& rec) {
  const auto& c = rec.coeffs();
  Order2 out{quadratic_roots(c[0], c[1]), {}};
  out.roots = {out.sol.r_plus, out.sol.r_minus};
  require_distinct(out.roots, CharPoly(c).scale());
  return out;
}

struct Order3 {
  CubicSolution sol;
  Complex sigma1;
  Complex sigma2;
  Complex delta;  // sigma1^3 - sigma2^3
};

Order3 order3(const Recurrence& rec) {
  const auto& c = rec.coeffs();
  Order3 out{cubic_roots(c[0], c[1], c[2]), {}, {}, {}};
  require_distinct(out.sol.labelled, CharPoly(c).scale());
  out.sigma1 = out.sol.resolvents.sigmas[0];
  out.sigma2 = out.sol.resolvents.sigmas[1];
  out.delta = ipow(out.sigma1, 3) - ipow(out.sigma2, 3);
  return out;
}

const std::vector<Rotor>& sig_sym3() {
  static const std::vector<Rotor> s{rotors::one, rotors::one, rotors::one};
  return s;
}
const std::vector<Rotor>& sig_slash3() {
  static const std::vector<Rotor> s{rotors::one, rotors::slash, rotors::aslash};
  return s;
}
const std::vector<Rotor>& sig_aslash3() {
  static const std::vector<Rotor> s{rotors::one, rotors::aslash, rotors::slash};
  return s;
}

std::vector<std::vector<Rotor>> order4_signatures() {
  const Rotor p = rotors::one, b = rotors::bot, t = rotors::top, d = rotors::dashv;
  return {
      {p, p, p, p},  // M1
      {p, b, t, d},  // M2
      {p, d, b, t},  // M3
      {p, t, d, b},  // M4
      {p, b, d, t},  // M5
      {p, t, b, d},  // M6
      {p, d, t, b},  // M7
  };
}

// Solves sum_m M_m * basis_m(k) = x_k for k = 0..m-1.
std::vector<Complex> solve_seed_system(const std::vector<Complex>& roots,
                                       const std::vector<std::vector<Rotor>>& basis,
                                       const std::vector<double>& seeds) {
  const auto m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd system(m, m);
  Eigen::VectorXcd rhs(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index col = 0; col < m; ++col) {
      system(k, col) = signed_chain(roots, basis[static_cast<std::size_t>(col)], k);
    }
    rhs(k) = seeds[static_cast<std::size_t>(k)];
  }
  const Eigen::VectorXcd sol = system.partialPivLu().solve(rhs);
  return {sol.data(), sol.data() + sol.size()};
}

}  // namespace

BinetForm solve_weights(const Recurrence& rec, RootStrategy strategy) {
  const CharPoly poly = characteristic_polynomial(rec);
  RootSet roots = solve_roots(poly, strategy);
  const std::size_t n = rec.order();
  require_distinct(roots.roots, poly.scale());
  for (const auto& r : roots.roots) {
    if (std::abs(r - 1.0) <= kUnitRootTol) {
      throw Error(ErrorKind::SingularSystem,
                  "a characteristic root equals 1; the constant column is duplicated");
    }
  }

  const Sequence head = iterate(rec, n + 1);
  const auto size = static_cast<Eigen::Index>(n + 1);
  Eigen::MatrixXcd system(size, size);
  Eigen::VectorXcd rhs(size);
  for (Eigen::Index k = 0; k < size; ++k) {
    for (std::size_t j = 0; j < n; ++j) system(k, static_cast<Eigen::Index>(j)) = ipow(roots.roots[j], k);
    system(k, size - 1) = 1.0;
    rhs(k) = head.approx(static_cast<std::size_t>(k));
  }
  const Eigen::VectorXcd w = system.partialPivLu().solve(rhs);
  return BinetForm{rec, std::move(roots), {w.data(), w.data() + w.size()}};
}

namespace {

using Wide = std::complex<long double>;

Wide wide_pow(Wide base, std::int64_t k) {
  Wide acc{1.0L, 0.0L};
  for (; k > 0; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  return acc;
}

// A double-precision weight carries ~k ulps of error into r^k, which is
// several units by 2^52. Newton-polish the roots and re-solve the weights in
// long double so the snap is exact across the whole window.
long double wide_value(const BinetForm& form, std::int64_t k) {
  const auto& c = form.source.coeffs();
  const std::size_t n = c.size();
  std::vector<Wide> roots;
  for (const auto& r0 : form.roots.roots) {
    Wide z(r0.real(), r0.imag());
    for (int step = 0; step < 3; ++step) {
      Wide p{1.0L, 0.0L}, dp{0.0L, 0.0L};
      for (std::size_t j = n; j-- > 0;) {
        dp = dp * z + p;
        p = p * z - static_cast<long double>(c[j]);
      }
      if (dp == Wide{}) break;
      z -= p / dp;
    }
    roots.push_back(z);
  }
  using Mat = Eigen::Matrix<Wide, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Wide, Eigen::Dynamic, 1>;
  const auto size = static_cast<Eigen::Index>(n + 1);
  const Sequence head = iterate(form.source, n + 1);
  Mat system(size, size);
  Vec rhs(size);
  for (Eigen::Index row = 0; row < size; ++row) {
    for (std::size_t j = 0; j < n; ++j) system(row, static_cast<Eigen::Index>(j)) = wide_pow(roots[j], row);
    system(row, size - 1) = 1.0L;
    rhs(row) = static_cast<long double>(head.approx(static_cast<std::size_t>(row)));
  }
  const Vec w = system.partialPivLu().solve(rhs);
  Wide sum = w(size - 1);
  for (std::size_t j = 0; j < n; ++j) sum += w(static_cast<Eigen::Index>(j)) * wide_pow(roots[j], k);
  return sum.real();
}

}  // namespace

ClosedValue closed_term(const BinetForm& form, std::int64_t k) {
  require_nonnegative(k);
  ClosedValue out;
  out.value = form.constant_term();
  for (std::size_t j = 0; j < form.roots.roots.size(); ++j) {
    out.value += form.weights[j] * ipow(form.roots.roots[j], k);
  }
  if (form.source.integral() && std::abs(out.value.real()) < kSnapLimit) {
    const long double wide = wide_value(form, k);
    const long double nearest = std::nearbyint(wide);
    out.value = Complex(static_cast<double>(wide), out.value.imag());
    out.rounded = static_cast<std::int64_t>(nearest);
    out.distance_to_integer = static_cast<double>(std::abs(wide - nearest));
  }
  return out;
}

double binet2(const Recurrence& rec, std::int64_t k) {
  require_order(rec, 2, "binet2");
  require_nonnegative(k);
  const Order2 o = order2(rec);
  const double c1 = rec.coeffs()[1];
  const double x0 = rec.seeds()[0];
  const double x1 = rec.seeds()[1];
  const Complex rk1 = ipow(o.roots[0], k);
  const Complex rk2 = ipow(o.roots[1], k);
  const Complex value =
      ((2.0 * x1 - c1 * x0) / 2.0) * ((rk1 - rk2) / o.sol.sigma1) + (x0 / 2.0) * (rk1 + rk2);
  return value.real();
}

double binet3(const Recurrence& rec, std::int64_t k) {
  require_order(rec, 3, "binet3");
  require_nonnegative(k);
  const Order3 o = order3(rec);
  const auto& c = rec.coeffs();
  const auto& x = rec.seeds();
  const double c1 = c[1], c2 = c[2];
  const Complex s1 = o.sigma1, s2 = o.sigma2;
  const Complex p1 = 9.0 * s1 * x[2] - 3.0 * (2.0 * c2 * s1 + s2 * s2) * x[1] -
                     ((c2 * c2 + 6.0 * c1) * s1 - c2 * s2 * s2) * x[0];
  const Complex p2 = 9.0 * s2 * x[2] - 3.0 * (2.0 * c2 * s2 + s1 * s1) * x[1] -
                     ((c2 * c2 + 6.0 * c1) * s2 - c2 * s1 * s1) * x[0];
  const auto& roots = o.sol.labelled;
  const Complex aslash_chain = signed_chain(roots, sig_aslash3(), k);  // r1 \ r2 / r3
  const Complex slash_chain = signed_chain(roots, sig_slash3(), k);    // r1 / r2 \ r3
  const Complex sum = signed_chain(roots, sig_sym3(), k);
  const Complex value = (p1 / 3.0) * (aslash_chain / o.delta) -
                        (p2 / 3.0) * (slash_chain / o.delta) + (x[0] / 3.0) * sum;
  return value.real();
}

Complex MForm::evaluate(std::int64_t k) const {
  require_nonnegative(k);
  Complex sum{0.0, 0.0};
  for (const auto& term : terms) {
    if (term.coefficient != Complex{0.0, 0.0}) sum += term.coefficient * signed_chain(roots, term.signature, k);
  }
  return sum;
}

MForm m_form(const Recurrence& rec) {
  MForm out;
  out.order = static_cast<int>(rec.order());
  const auto& x = rec.seeds();
  switch (rec.order()) {
    case 2: {
      const Order2 o = order2(rec);
      const double c1 = rec.coeffs()[1];
      out.roots = {o.roots.begin(), o.roots.end()};
      out.terms = {
          {Complex{x[0] / 2.0, 0.0}, {rotors::one, rotors::one}},
          {(2.0 * x[1] - c1 * x[0]) / (2.0 * o.sol.sigma1), {rotors::one, rotors::dashv}},
      };
      return out;
    }
    case 3: {
      const Order3 o = order3(rec);
      out.roots = {o.sol.labelled.begin(), o.sol.labelled.end()};
      const std::vector<std::vector<Rotor>> basis{sig_sym3(), sig_slash3(), sig_aslash3()};
      const auto m = solve_seed_system(out.roots, basis, x);
      for (std::size_t i = 0; i < basis.size(); ++i) out.terms.push_back({m[i], basis[i]});
      return out;
    }
    case 4: {
      const CharPoly poly = characteristic_polynomial(rec);
      const RootSet roots = solve_roots(poly, RootStrategy::Closed);
      require_distinct(roots.roots, poly.scale());
      out.roots = roots.roots;
      const auto all = order4_signatures();
      const std::vector<std::vector<Rotor>> reduced(all.begin(), all.begin() + 4);
      const auto m = solve_seed_system(out.roots, reduced, x);
      for (std::size_t i = 0; i < all.size(); ++i) {
        out.terms.push_back({i < m.size() ? m[i] : Complex{0.0, 0.0}, all[i]});
      }
      return out;
    }
    default:
      throw Error(ErrorKind::ArityMismatch,
                  "m_form supports orders 2, 3, 4; got " + std::to_string(rec.order()));
  }
}

Complex component(const Recurrence& rec, ComponentKind kind, std::int64_t k) {
  require_nonnegative(k);
  switch (kind) {
    case ComponentKind::F:
    case ComponentKind::L: {
      require_order(rec, 2, kind == ComponentKind::F ? "component F" : "component L");
      const Order2 o = order2(rec);
      const Complex rk1 = ipow(o.roots[0], k);
      const Complex rk2 = ipow(o.roots[1], k);
      return kind == ComponentKind::F ? (rk1 - rk2) / o.sol.sigma1 : rk1 + rk2;
    }
    case ComponentKind::A:
    case ComponentKind::B:
    case ComponentKind::C: {
      require_order(rec, 3, "components A, B, C");
      if (kind == ComponentKind::C) {
        // r1^k + r2^k + r3^k is defined even for repeated roots.
        const auto& c = rec.coeffs();
        return signed_chain(cubic_roots(c[0], c[1], c[2]).labelled, sig_sym3(), k);
      }
      const Order3 o = order3(rec);
      const auto& sig = kind == ComponentKind::A ? sig_aslash3() : sig_slash3();
      return signed_chain(o.sol.labelled, sig, k) / o.delta;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown component kind");
}

bool VerifyReport::pass() const {
  return !paths.empty() &&
         std::all_of(paths.begin(), paths.end(), [](const PathReport& p) { return p.pass; });
}

VerifyReport verify(const Recurrence& rec, std::size_t kmax, double rel_tol) {
  VerifyReport report;
  report.kmax = kmax;
  report.tolerance = rel_tol;
  const Sequence truth = iterate(rec, kmax + 1);

  auto run = [&](std::string name, auto&& eval) {
    double worst = 0.0;
    for (std::size_t k = 0; k <= kmax; ++k) {
      const double expected = truth.approx(k);
      const double got = eval(static_cast<std::int64_t>(k));
      worst = std::max(worst, std::abs(got - expected) / std::max(1.0, std::abs(expected)));
    }
    report.paths.push_back({std::move(name), worst, worst <= rel_tol});
  };

  const BinetForm form = solve_weights(rec);
  run("weights", [&](std::int64_t k) { return closed_term(form, k).value.real(); });
  if (rec.order() == 2) run("binet2", [&](std::int64_t k) { return binet2(rec, k); });
  if (rec.order() == 3) run("binet3", [&](std::int64_t k) { return binet3(rec, k); });
  if (rec.order() >= 2 && rec.order() <= 4) {
    const MForm mf = m_form(rec);
    run("m_form", [&](std::int64_t k) { return mf.evaluate(k).real(); });
  }
  return report;
}

}  // namespace psop
