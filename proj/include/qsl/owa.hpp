#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qsl {

/// Degree of optimism α. Continuous values live in the open interval (0, 1);
/// the endpoints are reachable only through the limit markers, where the
/// exponent (1−α)/α is undefined.
class AttitudeParameter {
 public:
  enum class Kind { Continuous, MinLimit, MaxLimit };

  /// Throws Error(InvalidAlpha) unless 0 < alpha < 1.
  static AttitudeParameter of(double alpha);
  static AttitudeParameter min_limit() noexcept { return {Kind::MinLimit, 0.0}; }
  static AttitudeParameter max_limit() noexcept { return {Kind::MaxLimit, 1.0}; }

  Kind kind() const noexcept { return kind_; }
  /// 0 for MinLimit, 1 for MaxLimit.
  double value() const noexcept { return value_; }

  friend bool operator==(const AttitudeParameter&,
                         const AttitudeParameter&) = default;

 private:
  AttitudeParameter(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

class WeightVector {
 public:
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::span<const double> span() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  /// Empty for hand-built vectors.
  std::optional<AttitudeParameter> attitude() const noexcept { return attitude_; }

  /// Arbitrary weights, checked for non-negativity and unit sum
  /// (Error(InvalidLength) when empty, Error(ValueOutOfRange) otherwise).
  static WeightVector from_weights(std::vector<double> weights);

 private:
  friend WeightVector attitudinal_weights(std::size_t n, AttitudeParameter alpha);

  WeightVector(std::vector<double> weights,
               std::optional<AttitudeParameter> attitude)
      : weights_(std::move(weights)), attitude_(attitude) {}

  std::vector<double> weights_;
  std::optional<AttitudeParameter> attitude_;
};

inline constexpr double kWeightSumTolerance = 1e-12;

/// ω_i = (i/n)^r − ((i−1)/n)^r with r = (1−α)/α. MinLimit gives (0,…,0,1),
/// MaxLimit gives (1,0,…,0). Throws Error(InvalidLength) for n = 0.
WeightVector attitudinal_weights(std::size_t n, AttitudeParameter alpha);

/// Classical OWA: values sorted descending (ties by original index), dotted
/// with the weights. Throws Error(LengthMismatch).
double classical_owa(std::span<const double> values, const WeightVector& weights);

/// Σ ((n−i)/(n−1)) ω_i. Throws Error(DegenerateLength) for n < 2.
double orness(const WeightVector& w);

/// Entropy −Σ ω ln ω with 0·ln 0 = 0.
double dispersion(const WeightVector& w);

}  // namespace qsl
