#include "psop/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psop/error.hpp"

namespace psop {

namespace {

constexpr double kMaxExactInput = 9007199254740992.0;  // 2^53

bool is_small_integer(double v) {
  return std::isfinite(v) && v == std::trunc(v) && std::abs(v) <= kMaxExactInput;
}

BigInt to_bigint(double v) { return BigInt(static_cast<long long>(v)); }

// a / b as a double, for large exact integers.
double ratio_of(const BigInt& a, const BigInt& b) {
  using boost::multiprecision::msb;
  if (a == 0) return 0.0;
  // Scale so the quotient carries ~64 significant bits before conversion.
  const BigInt abs_a = boost::multiprecision::abs(a);
  const BigInt abs_b = boost::multiprecision::abs(b);
  const long shift = 64 + static_cast<long>(msb(abs_b)) - static_cast<long>(msb(abs_a));
  const BigInt scaled = shift >= 0 ? BigInt(abs_a << shift) : BigInt(abs_a >> -shift);
  const BigInt q = scaled / abs_b;
  const double mag = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return ((a < 0) != (b < 0)) ? -mag : mag;
}

}  // namespace

Recurrence::Recurrence(std::vector<double> coeffs, std::vector<double> seeds)
    : coeffs_(std::move(coeffs)), seeds_(std::move(seeds)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidOrder, "recurrence order must be >= 1");
  if (coeffs_.size() != seeds_.size()) {
    throw Error(ErrorKind::ArityMismatch,
                "recurrence has " + std::to_string(coeffs_.size()) + " coefficients but " +
                    std::to_string(seeds_.size()) + " seeds");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), finite) ||
      !std::all_of(seeds_.begin(), seeds_.end(), finite)) {
    throw Error(ErrorKind::InvalidArgument, "recurrence values must be finite");
  }
  integral_ = std::all_of(coeffs_.begin(), coeffs_.end(), is_small_integer) &&
              std::all_of(seeds_.begin(), seeds_.end(), is_small_integer);
}

std::vector<double> from_general(std::span<const double> a) {
  if (a.size() < 2) throw Error(ErrorKind::InvalidOrder, "general form needs a_0..a_n with n >= 1");
  const double lead = a.back();
  if (lead == 0.0) throw Error(ErrorKind::ZeroLeadingCoefficient, "a_n must be non-zero");
  std::vector<double> c(a.size() - 1);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = -a[j] / lead + 0.0;
  return c;
}

Sequence::Sequence(std::vector<BigInt> exact) : exact_(true), integers_(std::move(exact)) {}
Sequence::Sequence(std::vector<double> approx) : exact_(false), reals_(std::move(approx)) {}

double Sequence::approx(std::size_t k) const {
  return exact_ ? integers_.at(k).convert_to<double>() : reals_.at(k);
}

Sequence iterate(const Recurrence& rec, std::size_t count) {
  const std::size_t n = rec.order();
  if (rec.integral()) {
    std::vector<BigInt> c;
    c.reserve(n);
    for (double v : rec.coeffs()) c.push_back(to_bigint(v));
    std::vector<BigInt> x;
    x.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      if (k < n) {
        x.push_back(to_bigint(rec.seeds()[k]));
        continue;
      }
      BigInt next = 0;
      for (std::size_t j = 0; j < n; ++j) next += c[j] * x[k - n + j];
      x.push_back(std::move(next));
    }
    return Sequence(std::move(x));
  }
  std::vector<double> x;
  x.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (k < n) {
      x.push_back(rec.seeds()[k]);
      continue;
    }
    double next = 0.0;
    for (std::size_t j = 0; j < n; ++j) next += rec.coeffs()[j] * x[k - n + j];
    x.push_back(next);
  }
  return Sequence(std::move(x));
}

CharPoly::CharPoly(std::vector<double> c) : c_(std::move(c)) {
  if (c_.empty()) throw Error(ErrorKind::InvalidOrder, "characteristic polynomial degree must be >= 1");
}

Complex CharPoly::operator()(Complex x) const {
  // Horner on x^n - c_{n-1} x^{n-1} - ... - c_0.
  Complex acc{1.0, 0.0};
  for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x - c_[j];
  return acc;
}

double CharPoly::scale() const noexcept {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return 1.0 + m;
}

CharPoly characteristic_polynomial(const Recurrence& rec) { return CharPoly(rec.coeffs()); }

double characteristic_ratio(const Recurrence& rec, std::size_t iters) {
  constexpr std::size_t kWindow = 5;
  constexpr double kStability = 1e-6;
  const std::size_t n = rec.order();
  if (iters < n + 2) {
    throw Error(ErrorKind::InvalidArgument,
                "characteristic_ratio needs iters >= order + 2 = " + std::to_string(n + 2));
  }
  const Sequence seq = iterate(rec, iters + 1);

  auto ratio_at = [&](std::size_t k) -> std::optional<double> {
    if (seq.is_exact()) {
      if (seq.exact(k) == 0) return std::nullopt;
      return ratio_of(seq.exact(k + 1), seq.exact(k));
    }
    const double den = seq.approx(k);
    if (den == 0.0) return std::nullopt;
    return seq.approx(k + 1) / den;
  };

  const std::size_t probe = iters - 1;
  const auto last = ratio_at(probe);
  if (!last) {
    throw Error(ErrorKind::ZeroDivisionInRatio,
                "x_" + std::to_string(probe) + " is zero; ratio undefined");
  }
  if (!std::isfinite(*last)) throw Error(ErrorKind::NonConvergent, "ratio overflowed");

  const std::size_t first = probe >= kWindow ? probe - kWindow + 1 : 0;
  for (std::size_t k = first; k < probe; ++k) {
    const auto r = ratio_at(k);
    if (!r || std::abs(*r - *last) > kStability) {
      throw Error(ErrorKind::NonConvergent,
                  "successive ratio estimates have not stabilized within 1e-6");
    }
  }
  return *last;
}

}  // namespace psop
