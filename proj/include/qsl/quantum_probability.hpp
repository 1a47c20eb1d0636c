#pragma once

#include <complex>
#include <span>

namespace qsl {

// Absolute slack on the |p| <= 1 bound, absorbs round-off from polar
// construction (a cos t, a sin t).
inline constexpr double kModulusTolerance = 1e-12;

/// A complex-valued probability a·e^{iθ} with |p| <= 1.
///
/// modulus() is the ordinary complex modulus a. Mass-function
/// normalization works on the squared modulus a², see QuantumMassFunction.
class QuantumProbability {
 public:
  /// The zero probability 0 + 0i.
  constexpr QuantumProbability() = default;

  /// Throws Error(NonFinite) or Error(ModulusExceedsOne).
  static QuantumProbability from_cartesian(double re, double im);

  /// Throws Error(NegativeAmplitude), Error(ModulusExceedsOne) or
  /// Error(NonFinite).
  static QuantumProbability from_polar(double amplitude, double theta);

  constexpr double re() const noexcept { return re_; }
  constexpr double im() const noexcept { return im_; }

  double modulus() const noexcept;
  double squared_modulus() const noexcept { return re_ * re_ + im_ * im_; }

  /// Phase in (-pi, pi].
  double angle() const noexcept;

  std::complex<double> to_complex() const noexcept { return {re_, im_}; }

  friend constexpr bool operator==(const QuantumProbability&,
                                   const QuantumProbability&) = default;

  friend QuantumProbability multiply(QuantumProbability p,
                                     QuantumProbability q) noexcept;
  friend QuantumProbability convex_combination(
      std::span<const double> weights,
      std::span<const QuantumProbability> values);

 private:
  constexpr QuantumProbability(double re, double im) : re_(re), im_(im) {}

  double re_ = 0.0;
  double im_ = 0.0;
};

inline double modulus(QuantumProbability p) noexcept { return p.modulus(); }
inline double angle(QuantumProbability p) noexcept { return p.angle(); }

/// Complex product. |pq| = |p||q|, so the result stays unit-bounded.
QuantumProbability multiply(QuantumProbability p, QuantumProbability q) noexcept;

inline QuantumProbability operator*(QuantumProbability p,
                                    QuantumProbability q) noexcept {
  return multiply(p, q);
}

/// Σ weights[i]·values[i]. Weights must be non-negative and sum to one, which
/// keeps the result inside the unit disc; lengths must match
/// (Error(LengthMismatch) otherwise).
QuantumProbability convex_combination(std::span<const double> weights,
                                      std::span<const QuantumProbability> values);

}  // namespace qsl
