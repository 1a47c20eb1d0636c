#include "qsl/quantum_probability.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qsl/error.hpp"

namespace qsl {

QuantumProbability QuantumProbability::from_cartesian(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw Error(ErrorCode::NonFinite,
                fmt::format("non-finite component ({}, {})", re, im));
  }
  const double a = std::hypot(re, im);
  if (a > 1.0 + kModulusTolerance) {
    throw Error(ErrorCode::ModulusExceedsOne,
                fmt::format("modulus {} of {}{:+}i exceeds 1", a, re, im));
  }
  return {re, im};
}

QuantumProbability QuantumProbability::from_polar(double amplitude, double theta) {
  if (!std::isfinite(amplitude) || !std::isfinite(theta)) {
    throw Error(ErrorCode::NonFinite,
                fmt::format("non-finite polar form ({}, {})", amplitude, theta));
  }
  if (amplitude < 0.0) {
    throw Error(ErrorCode::NegativeAmplitude,
                fmt::format("amplitude {} is negative", amplitude));
  }
  if (amplitude > 1.0 + kModulusTolerance) {
    throw Error(ErrorCode::ModulusExceedsOne,
                fmt::format("amplitude {} exceeds 1", amplitude));
  }
  return {amplitude * std::cos(theta), amplitude * std::sin(theta)};
}

double QuantumProbability::modulus() const noexcept { return std::hypot(re_, im_); }

double QuantumProbability::angle() const noexcept {
  // atan2 gives [-pi, pi]; fold -pi (negative zero imaginary part) onto pi.
  const double t = std::atan2(im_, re_);
  return t == -std::numbers::pi ? std::numbers::pi : t;
}

QuantumProbability multiply(QuantumProbability p, QuantumProbability q) noexcept {
  return {p.re_ * q.re_ - p.im_ * q.im_, p.re_ * q.im_ + p.im_ * q.re_};
}

QuantumProbability convex_combination(std::span<const double> weights,
                                      std::span<const QuantumProbability> values) {
  if (weights.size() != values.size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("{} weights for {} values", weights.size(), values.size()));
  }
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    re += weights[i] * values[i].re_;
    im += weights[i] * values[i].im_;
  }
  return {re, im};
}

}  // namespace qsl
