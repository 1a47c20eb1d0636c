#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsl/quantum_probability.hpp"

namespace qsl {

struct EvidenceEntry {
  std::string label;
  QuantumProbability probability;

  friend bool operator==(const EvidenceEntry&, const EvidenceEntry&) = default;
};

/// Ordered, non-empty collection of per-source probabilities with distinct
/// source labels.
class EvidenceSet {
 public:
  /// Throws Error(EmptyEvidence) or Error(DuplicateLabel).
  explicit EvidenceSet(std::vector<EvidenceEntry> entries);

  /// Labels p1…pn in order.
  static EvidenceSet from_values(const std::vector<QuantumProbability>& values);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<EvidenceEntry>& entries() const noexcept { return entries_; }
  const EvidenceEntry& operator[](std::size_t i) const { return entries_[i]; }

  std::vector<QuantumProbability> probabilities() const;

  friend bool operator==(const EvidenceSet&, const EvidenceSet&) = default;

 private:
  std::vector<EvidenceEntry> entries_;
};

}  // namespace qsl
