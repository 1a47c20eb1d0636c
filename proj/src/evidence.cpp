#include "qsl/evidence.hpp"

#include <set>
#include <string_view>

#include <fmt/format.h>

#include "qsl/error.hpp"

namespace qsl {

EvidenceSet::EvidenceSet(std::vector<EvidenceEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::EmptyEvidence, "evidence set has no sources");
  }
  std::set<std::string_view> seen;
  for (const auto& e : entries_) {
    if (!seen.insert(e.label).second) {
      throw Error(ErrorCode::DuplicateLabel,
                  fmt::format("source label '{}' appears more than once", e.label));
    }
  }
}

EvidenceSet EvidenceSet::from_values(const std::vector<QuantumProbability>& values) {
  std::vector<EvidenceEntry> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    entries.push_back({fmt::format("p{}", i + 1), values[i]});
  }
  return EvidenceSet(std::move(entries));
}

std::vector<QuantumProbability> EvidenceSet::probabilities() const {
  std::vector<QuantumProbability> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.probability);
  return out;
}

}  // namespace qsl
