#include "qsl/owa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "qsl/error.hpp"

namespace qsl {

AttitudeParameter AttitudeParameter::of(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidAlpha,
                fmt::format("alpha {} is outside the open interval (0, 1)", alpha));
  }
  return {Kind::Continuous, alpha};
}

WeightVector WeightVector::from_weights(std::vector<double> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::InvalidLength, "weight vector is empty");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::ValueOutOfRange, fmt::format("weight {} is negative", w));
    }
  }
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::ValueOutOfRange, fmt::format("weights sum to {}", sum));
  }
  return {std::move(weights), std::nullopt};
}

WeightVector attitudinal_weights(std::size_t n, AttitudeParameter alpha) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidLength, "weight vector length must be at least 1");
  }
  std::vector<double> w(n, 0.0);
  switch (alpha.kind()) {
    case AttitudeParameter::Kind::MinLimit:
      w.back() = 1.0;
      return {std::move(w), alpha};
    case AttitudeParameter::Kind::MaxLimit:
      w.front() = 1.0;
      return {std::move(w), alpha};
    case AttitudeParameter::Kind::Continuous:
      break;
  }

  const double a = alpha.value();
  const double r = (1.0 - a) / a;
  const auto nd = static_cast<double>(n);
  if (r == 1.0) {
    std::fill(w.begin(), w.end(), 1.0 / nd);
    return {std::move(w), alpha};
  }
  double prev = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double cur = i == n ? 1.0 : std::pow(static_cast<double>(i) / nd, r);
    w[i - 1] = cur - prev;
    prev = cur;
  }
  return {std::move(w), alpha};
}

double classical_owa(std::span<const double> values, const WeightVector& weights) {
  if (values.size() != weights.size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("{} values for {} weights", values.size(), weights.size()));
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>{});
  double acc = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) acc += weights[i] * sorted[i];
  return acc;
}

double orness(const WeightVector& w) {
  const std::size_t n = w.size();
  if (n < 2) {
    throw Error(ErrorCode::DegenerateLength, "orness needs at least two weights");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<double>(n - 1 - i) / static_cast<double>(n - 1) * w[i];
  }
  return acc;
}

double dispersion(const WeightVector& w) {
  double acc = 0.0;
  for (double x : w.weights()) {
    if (x > 0.0) acc -= x * std::log(x);
  }
  return acc;
}

}  // namespace qsl
