#include "flute/hyptrig.hpp"

#include <cmath>
#include <stdexcept>

namespace flute::hyptrig {

namespace {
constexpr double kLog2 = 0.6931471805599453;
// exp() saturates around 709; stay clear of it.
constexpr double kExpCap = 690.0;
} // namespace

double log_sinh(double x) {
  if (x <= 0.0) throw std::domain_error("log_sinh: argument must be positive");
  if (x < 1.0) return std::log(std::sinh(x));
  return x + std::log1p(-std::exp(-2.0 * x)) - kLog2;
}

double log_cosh(double x) {
  x = std::abs(x);
  if (x < 1.0) return std::log(std::cosh(x));
  return x + std::log1p(std::exp(-2.0 * x)) - kLog2;
}

Length collar_width(Length l) {
  if (!(l > 0.0)) throw std::domain_error("collar_width: cuff length must be positive");
  // arcsinh(1/sinh(l/2)) in log form so large cuffs do not overflow sinh.
  return std::asinh(std::exp(-log_sinh(l / 2.0)));
}

Length hexagon_opposite(Length a, Length b, Length c) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("hexagon_opposite: sides a, b must be positive");
  if (c < 0.0) throw std::domain_error("hexagon_opposite: side c must be nonnegative");
  // cosh w = coth a coth b + cosh c / (sinh a sinh b), split so each factor
  // stays finite; arccosh switches to its log form when the argument would
  // overflow.
  const double lead = (1.0 / std::tanh(a)) * (1.0 / std::tanh(b));
  const double expo = log_cosh(c) - log_sinh(a) - log_sinh(b);
  if (expo < kExpCap) {
    const double t = lead + std::exp(expo);
    return std::acosh(t);
  }
  return expo + kLog2 + std::log1p(lead * std::exp(-expo));
}

std::optional<Length> pentagon_opposite(Length b1, Length b2) {
  if (!(b1 > 0.0) || !(b2 > 0.0))
    throw std::domain_error("pentagon_opposite: sides must be positive");
  const double log_p = log_sinh(b1) + log_sinh(b2);
  if (log_p < kExpCap) {
    const double p = std::exp(log_p);
    if (std::abs(p - 1.0) <= 1e-12 * std::max(1.0, p)) return std::nullopt;
    if (p < 1.0)
      throw std::domain_error("pentagon_opposite: sinh(b1) sinh(b2) < 1, no such pentagon");
    return std::acosh(p);
  }
  return log_p + kLog2;
}

Length square_side_for_cuff(Length target_cuff) {
  if (!(target_cuff > 0.0))
    throw std::domain_error("square_side_for_cuff: cuff length must be positive");
  const double half_log = log_cosh(target_cuff / 4.0) / 2.0;
  if (half_log < 300.0) return std::asinh(std::exp(half_log));
  return half_log + kLog2;
}

} // namespace flute::hyptrig
