#include <doctest.h>

#include <cmath>
#include <numbers>

#include "psop/error.hpp"
#include "psop/root_solver.hpp"
#include "support.hpp"

using namespace psop;

namespace {

constexpr double kPhi = 1.6180339887498949;
constexpr double kTribonacci = 1.8392867552141611;
constexpr double kTetranacci = 1.9275619754829253;
// cube roots of (38 +- sqrt(1188))/2, from a 40-digit evaluation
constexpr double kSigma1 = 3.3090564799660949;
constexpr double kSigma2 = 1.2088037856763885;

std::vector<Complex> random_roots(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Complex> roots;
  while (roots.size() < n) {
    if (n - roots.size() >= 2 && u(rng) > 0) {
      const Complex z(u(rng), u(rng));
      roots.push_back(z);
      roots.push_back(std::conj(z));
    } else {
      roots.emplace_back(u(rng), 0.0);
    }
  }
  return roots;
}

}  // namespace

TEST_CASE("quadratic_roots") {
  const auto q = quadratic_roots(1, 1);
  CHECK(q.sigma1.real() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(q.r_plus.real() == doctest::Approx(kPhi).epsilon(1e-15));
  CHECK(q.r_minus.real() == doctest::Approx(1 - kPhi).epsilon(1e-15));
  CHECK(q.roots.method == RootMethod::Closed2);
  CHECK(q.roots.roots[0].real() == doctest::Approx(kPhi));

  const auto d = quadratic_roots(-1, 2);
  CHECK(d.roots.min_separation == 0.0);
  CHECK(d.roots.roots[0] == Complex(1, 0));

  const auto pm = quadratic_roots(1, 0);
  CHECK(pm.roots.roots[0] == Complex(1, 0));
  CHECK(pm.roots.roots[1] == Complex(-1, 0));

  // complex pair: x^2 = -x - 1
  const auto c = quadratic_roots(-1, -1);
  CHECK(std::abs(c.roots.roots[0] - std::conj(c.roots.roots[1])) < 1e-15);
  CHECK(c.roots.roots[0].imag() > 0);
}

TEST_CASE("cubic_resolvents") {
  const auto r = cubic_resolvents(1, 1, 1);
  CHECK(*r.A == 38.0);
  CHECK(*r.B == 4.0);
  CHECK(r.sigmas[0].real() == doctest::Approx(kSigma1).epsilon(1e-14));
  CHECK(r.sigmas[1].real() == doctest::Approx(kSigma2).epsilon(1e-14));
  CHECK(std::abs(r.sigmas[0].imag()) < 1e-15);
  CHECK(std::abs(r.sigmas[0] * r.sigmas[1] - 4.0) < 1e-13);

  const auto z = cubic_resolvents(0, 0, 0);
  CHECK(*z.A == 0.0);
  CHECK(*z.B == 0.0);
  CHECK(std::abs(z.sigmas[0]) == 0.0);
  CHECK(std::abs(z.sigmas[1]) == 0.0);
}

TEST_CASE("cubic_roots") {
  const auto t = cubic_roots(1, 1, 1);
  CHECK(t.roots.method == RootMethod::Closed3);
  CHECK(t.roots.roots[0].real() == doctest::Approx(kTribonacci).epsilon(1e-15));
  CHECK(std::abs(t.roots.roots[1] - std::conj(t.roots.roots[2])) < 1e-15);
  // the labelled r is (c2 + s1 + s2)/3
  CHECK(std::abs(t.labelled[0] - (1.0 + kSigma1 + kSigma2) / 3.0) < 1e-14);

  const auto s = cubic_roots(6, -11, 6);
  for (double expected : {3.0, 2.0, 1.0}) {
    const auto i = static_cast<std::size_t>(3 - expected);
    CHECK(std::abs(s.roots.roots[i] - expected) < 1e-12);
  }

  const auto w = cubic_roots(0, 0, 3);
  CHECK(std::abs(w.roots.roots[0] - 3.0) < 1e-15);
  CHECK(std::abs(w.roots.roots[1]) < 1e-12);
  CHECK(std::abs(w.roots.roots[2]) < 1e-12);

  const auto triple = cubic_roots(1, -3, 3);  // (x - 1)^3
  for (const auto& r : triple.roots.roots) CHECK(std::abs(r - 1.0) < 1e-12);
}

TEST_CASE("closed forms agree with an eigenvalue oracle") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double c0 = u(rng), c1 = u(rng), c2 = u(rng);
    const auto q = quadratic_roots(c0, c1);
    CHECK(test::pair_distance(q.roots.roots, test::companion_roots({c0, c1})) <= 1e-8);
    const auto cub = cubic_roots(c0, c1, c2);
    CHECK(test::pair_distance(cub.roots.roots, test::companion_roots({c0, c1, c2})) <= 1e-8);
    const double b = *cub.resolvents.B;
    CHECK(std::abs(cub.resolvents.sigmas[0] * cub.resolvents.sigmas[1] - b) <= 1e-9 * (1 + std::abs(b)));
    const std::vector<double> c{c0, c1, c2};
    const CharPoly p(c);
    const double scale = p.scale();
    CHECK(cub.roots.max_residual() <= 1e-8 * scale);
    for (double v : vieta_residuals(cub.roots, p)) CHECK(v <= 1e-9 * std::pow(scale, 3));
  }
}

TEST_CASE("numeric_roots") {
  const auto f = numeric_roots(CharPoly({1, 1}));
  CHECK(std::abs(f.roots[0] - kPhi) < 1e-10);
  CHECK(std::abs(f.roots[1] - (1 - kPhi)) < 1e-10);
  CHECK(f.method == RootMethod::Numeric);

  const auto t = numeric_roots(CharPoly({1, 1, 1}));
  CHECK(std::abs(t.roots[0] - kTribonacci) < 1e-12);
  CHECK(std::abs(t.roots[1] - std::conj(t.roots[2])) < 1e-12);

  const auto q = numeric_roots(CharPoly({1, 1, 1, 1}));
  CHECK(q.roots.size() == 4);
  CHECK(std::abs(q.roots[0] - kTetranacci) < 1e-12);

  CHECK(std::abs(numeric_roots(CharPoly({5})).roots[0] - 5.0) < 1e-14);

  // random polynomials up to degree 8 against the eigenvalue oracle
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    std::vector<double> c(n);
    for (auto& v : c) v = u(rng);
    const CharPoly p(c);
    const auto set = numeric_roots(p);
    CHECK(set.max_residual() <= 1e-8 * p.scale());
    CHECK(test::pair_distance(set.roots, test::companion_roots(c)) <= 1e-6);
  }
}

TEST_CASE("solve_roots strategy") {
  const CharPoly p({1, 1, 1});
  CHECK(solve_roots(p).method == RootMethod::Closed3);
  CHECK(solve_roots(p, RootStrategy::Numeric).method == RootMethod::Numeric);
  CHECK(solve_roots(CharPoly({1, 1, 1, 1})).method == RootMethod::Numeric);
}

TEST_CASE("vieta_residuals") {
  const auto f = quadratic_roots(1, 1);
  for (double v : vieta_residuals(f.roots, CharPoly({1, 1}))) CHECK(v < 1e-15);
  // {1, 2, 3}: x^3 = 6x^2 - 11x + 6
  const std::vector<Complex> r{1.0, 2.0, 3.0};
  for (double v : vieta_residuals(r, CharPoly({6, -11, 6}))) CHECK(v <= 1e-12);
  const std::vector<Complex> two{1.0, 2.0};
  CHECK_THROWS_AS(vieta_residuals(two, CharPoly({6, -11, 6})), Error);
}

TEST_CASE("permutation tables") {
  CHECK(permutation_tables(2).size() == 2);
  const auto t3 = permutation_tables(3);
  REQUIRE(t3.size() == 3);
  CHECK(t3[0].symmetric());
  CHECK_FALSE(t3[1].symmetric());
  CHECK(t3[1].signature == std::vector<Rotor>{rotors::one, rotors::slash, rotors::aslash});
  CHECK(t3[2].signature == std::vector<Rotor>{rotors::one, rotors::aslash, rotors::slash});
  const auto t4 = permutation_tables(4);
  CHECK(t4.size() == 7);
  for (std::size_t i = 1; i < t4.size(); ++i) {
    CHECK(t4[i].signature ==
          std::vector<Rotor>{rotors::one, rotors::bot, rotors::top, rotors::dashv});
  }
  CHECK_THROWS_AS(permutation_tables(5), Error);
  CHECK_THROWS_AS(permutation_tables(1), Error);
}

TEST_CASE("sigma_from_roots") {
  const std::vector<Complex> roots{1.3, Complex(-0.2, 0.7), Complex(0.4, -1.1)};
  const auto t3 = permutation_tables(3);
  const auto s = sigma_from_roots(roots, t3[1]);
  REQUIRE(s.size() == 3);
  const Complex w = rotor_value(rotors::slash);
  // rotating the roots cyclically rotates the sigma
  CHECK(std::abs(s[1] - w * s[0]) < 1e-14);
  CHECK(std::abs(s[2] - w * w * s[0]) < 1e-14);
  const Complex c2 = roots[0] + roots[1] + roots[2];
  for (const auto& v : sigma_from_roots(roots, t3[0])) CHECK(std::abs(v - c2) < 1e-14);

  for (int n : {2, 3, 4}) {
    const std::vector<Complex> same(static_cast<std::size_t>(n), Complex(0.7, -0.3));
    const auto tables = permutation_tables(n);
    for (const auto& table : tables) {
      if (table.symmetric()) continue;
      for (const auto& v : sigma_from_roots(same, table)) CHECK(std::abs(v) < 1e-14);
    }
  }
  const std::vector<Complex> two{1.0, 2.0};
  CHECK_THROWS_AS(sigma_from_roots(two, t3[1]), Error);
}

TEST_CASE("roots_from_sigma") {
  const Complex s5(std::sqrt(5.0), 0.0);
  const auto inv = roots_from_sigma(1.0, std::vector<Complex>{s5}, 2);
  CHECK(std::abs(inv.roots[0] - kPhi) < 1e-15);
  CHECK(std::abs(inv.roots[1] - (1 - kPhi)) < 1e-15);
  CHECK_THROWS_AS(roots_from_sigma(1.0, std::vector<Complex>{s5}, 5), Error);
  CHECK_THROWS_AS(roots_from_sigma(1.0, std::vector<Complex>{s5}, 3), Error);

  std::mt19937_64 rng(41);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto roots = random_roots(rng, static_cast<std::size_t>(n));
      Complex sum = 0.0;
      for (const auto& r : roots) sum += r;
      const auto back = roots_from_sigma(sum.real(), independent_sigmas(roots), n);
      double err = 0.0;
      for (std::size_t i = 0; i < roots.size(); ++i) err = std::max(err, std::abs(back.roots[i] - roots[i]));
      CHECK(err <= (n == 4 ? 1e-8 : 1e-10));
    }
  }

  // equal sigmas are consistent (roots 3/4, -1/4, -1/4, -1/4); distinct ones are not
  const std::vector<Complex> equal(6, Complex(1.0, 0.0));
  CHECK(std::abs(roots_from_sigma(0.0, equal, 4).roots[0] - 0.75) < 1e-14);
  std::vector<Complex> junk;
  for (int k = 1; k <= 6; ++k) junk.emplace_back(k, k * k);
  CHECK_THROWS_AS(roots_from_sigma(0.0, junk, 4), Error);
}

TEST_CASE("matched_distance") {
  const std::vector<Complex> a{1.0, 2.0, 3.0}, b{3.0, 1.0, 2.0};
  CHECK(matched_distance(a, b) == 0.0);
  const std::vector<Complex> c{1.0, 2.0, 3.5};
  CHECK(matched_distance(a, c) == doctest::Approx(0.5));
}
