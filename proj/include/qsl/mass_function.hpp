#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsl/quantum_probability.hpp"

namespace qsl {

/// Finite set of mutually exclusive, collectively exhaustive event labels.
/// Subsets are bitmasks over event positions, so a frame holds at most 64
/// events. The power set is never built.
class FrameOfDiscernment {
 public:
  static constexpr std::size_t kMaxEvents = 64;

  /// Throws Error(InvalidFrame) on an empty frame, duplicate labels or more
  /// than kMaxEvents events.
  explicit FrameOfDiscernment(std::vector<std::string> events);

  std::size_t size() const noexcept { return events_.size(); }
  const std::vector<std::string>& events() const noexcept { return events_; }

  std::optional<std::size_t> index_of(std::string_view label) const;

  /// 2^n as a double (exact for every admissible n).
  double power_set_size() const noexcept;

 private:
  std::vector<std::string> events_;
};

/// Subset of a frame as a bitmask over event positions; bit i set means
/// event i is a member.
struct Subset {
  std::uint64_t mask = 0;

  bool empty() const noexcept { return mask == 0; }
  friend constexpr auto operator<=>(const Subset&, const Subset&) = default;
};

/// Sparse assignment of quantum probabilities to subsets of a frame. Only
/// assigned subsets are stored.
///
/// Normalization is on squared moduli: Σ |m(A)|² = 1, with |m(A)| the
/// ordinary complex modulus.
class QuantumMassFunction {
 public:
  explicit QuantumMassFunction(FrameOfDiscernment frame);

  const FrameOfDiscernment& frame() const noexcept { return frame_; }

  /// Replaces any previous mass on the same subset. Throws
  /// Error(InvalidFrame) if the mask names events outside the frame.
  void assign(Subset subset, QuantumProbability mass);

  /// Builds the subset from labels; throws Error(InvalidFrame) on an unknown
  /// label.
  Subset subset_of(const std::vector<std::string>& labels) const;

  const std::map<Subset, QuantumProbability>& assignments() const noexcept {
    return assignments_;
  }

  QuantumProbability mass(Subset subset) const;

 private:
  FrameOfDiscernment frame_;
  std::map<Subset, QuantumProbability> assignments_;
};

enum class MassViolationKind {
  NoAssignments,
  EmptySetMass,
  NormalizationDeficit,
  NormalizationExcess,
};

struct MassViolation {
  MassViolationKind kind;
  /// |Σ|m|² − 1| for normalization violations, |m(∅)| for EmptySetMass.
  double residual = 0.0;
  std::string message;
};

struct MassValidationReport {
  double squared_modulus_sum = 0.0;
  std::vector<MassViolation> violations;

  bool valid() const noexcept { return violations.empty(); }
};

inline constexpr double kMassNormalizationTolerance = 1e-9;

/// Never throws; every broken constraint becomes one entry in the report.
MassValidationReport validate_mass_function(const QuantumMassFunction& m);

}  // namespace qsl
