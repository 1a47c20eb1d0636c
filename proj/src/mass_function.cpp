#include "qsl/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "qsl/error.hpp"

namespace qsl {

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> events)
    : events_(std::move(events)) {
  if (events_.empty()) {
    throw Error(ErrorCode::InvalidFrame, "frame of discernment has no events");
  }
  if (events_.size() > kMaxEvents) {
    throw Error(ErrorCode::InvalidFrame,
                fmt::format("frame has {} events, at most {} supported",
                            events_.size(), kMaxEvents));
  }
  std::set<std::string_view> seen;
  for (const auto& e : events_) {
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::InvalidFrame, fmt::format("duplicate event '{}'", e));
    }
  }
}

std::optional<std::size_t> FrameOfDiscernment::index_of(std::string_view label) const {
  auto it = std::find(events_.begin(), events_.end(), label);
  if (it == events_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - events_.begin());
}

double FrameOfDiscernment::power_set_size() const noexcept {
  return std::ldexp(1.0, static_cast<int>(events_.size()));
}

QuantumMassFunction::QuantumMassFunction(FrameOfDiscernment frame)
    : frame_(std::move(frame)) {}

void QuantumMassFunction::assign(Subset subset, QuantumProbability mass) {
  const std::size_t n = frame_.size();
  if (n < 64 && (subset.mask >> n) != 0) {
    throw Error(ErrorCode::InvalidFrame,
                fmt::format("subset mask {:#x} lies outside a frame of {} events",
                            subset.mask, n));
  }
  assignments_[subset] = mass;
}

Subset QuantumMassFunction::subset_of(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& label : labels) {
    auto idx = frame_.index_of(label);
    if (!idx) {
      throw Error(ErrorCode::InvalidFrame,
                  fmt::format("event '{}' is not in the frame", label));
    }
    s.mask |= std::uint64_t{1} << *idx;
  }
  return s;
}

QuantumProbability QuantumMassFunction::mass(Subset subset) const {
  auto it = assignments_.find(subset);
  return it == assignments_.end() ? QuantumProbability{} : it->second;
}

MassValidationReport validate_mass_function(const QuantumMassFunction& m) {
  MassValidationReport report;
  if (m.assignments().empty()) {
    report.violations.push_back(
        {MassViolationKind::NoAssignments, 1.0, "no subset carries any mass"});
    return report;
  }

  for (const auto& [subset, mass] : m.assignments()) {
    report.squared_modulus_sum += mass.squared_modulus();
    if (subset.empty() && mass.squared_modulus() > 0.0) {
      report.violations.push_back(
          {MassViolationKind::EmptySetMass, mass.modulus(),
           fmt::format("empty set carries mass of modulus {}", mass.modulus())});
    }
  }

  const double residual = report.squared_modulus_sum - 1.0;
  if (std::abs(residual) > kMassNormalizationTolerance) {
    const bool deficit = residual < 0.0;
    report.violations.push_back(
        {deficit ? MassViolationKind::NormalizationDeficit
                 : MassViolationKind::NormalizationExcess,
         std::abs(residual),
         fmt::format("squared moduli sum to {:.6g}, {} against 1",
                     report.squared_modulus_sum, deficit ? "short" : "over")});
  }
  return report;
}

}  // namespace qsl
