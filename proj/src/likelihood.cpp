#include "qsl/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "qsl/error.hpp"

namespace qsl {

SortedEvidence sort_by_modulus(const EvidenceSet& evidence) {
  const auto& entries = evidence.entries();
  std::vector<double> moduli(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    moduli[i] = entries[i].probability.modulus();
  }

  SortedEvidence sorted;
  sorted.permutation.resize(entries.size());
  std::iota(sorted.permutation.begin(), sorted.permutation.end(), std::size_t{0});
  std::stable_sort(sorted.permutation.begin(), sorted.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return moduli[a] > moduli[b]; });

  sorted.ordered.reserve(entries.size());
  for (std::size_t idx : sorted.permutation) {
    sorted.ordered.push_back(entries[idx].probability);
  }
  return sorted;
}

std::vector<QuantumProbability> cumulative_products(const SortedEvidence& sorted) {
  std::vector<QuantumProbability> products;
  products.reserve(sorted.ordered.size());
  for (const auto& p : sorted.ordered) {
    products.push_back(products.empty() ? p : products.back() * p);
  }
  return products;
}

QuantumProbability product_likelihood(const EvidenceSet& evidence) {
  return cumulative_products(sort_by_modulus(evidence)).back();
}

LikelihoodTrace quantum_soft_likelihood(const EvidenceSet& evidence,
                                        AttitudeParameter alpha) {
  SortedEvidence sorted = sort_by_modulus(evidence);
  std::vector<QuantumProbability> products = cumulative_products(sorted);
  WeightVector weights = attitudinal_weights(products.size(), alpha);
  const QuantumProbability result = convex_combination(weights.span(), products);
  return LikelihoodTrace{std::move(sorted), std::move(products), std::move(weights),
                         result, result.modulus()};
}

QuantumProbability quantum_owa_direct(const EvidenceSet& evidence,
                                      AttitudeParameter alpha) {
  const SortedEvidence sorted = sort_by_modulus(evidence);
  const WeightVector weights = attitudinal_weights(sorted.ordered.size(), alpha);
  return convex_combination(weights.span(), sorted.ordered);
}

double classical_soft_likelihood(std::span<const double> values,
                                 AttitudeParameter alpha) {
  if (values.empty()) {
    throw Error(ErrorCode::EmptyEvidence, "no probabilities to combine");
  }
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::ValueOutOfRange,
                  fmt::format("probability {} is outside [0, 1]", v));
    }
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>{});

  const WeightVector weights = attitudinal_weights(sorted.size(), alpha);
  double product = 1.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    product *= sorted[i];
    acc += weights[i] * product;
  }
  return acc;
}

SweepResult alpha_sweep(const EvidenceSet& evidence, double start, double end,
                        double step) {
  if (!std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step) ||
      !(start > 0.0) || !(end < 1.0) || start > end || !(step > 0.0)) {
    throw Error(ErrorCode::InvalidRange,
                fmt::format("sweep range start={} end={} step={} is invalid; need "
                            "0 < start <= end < 1 and step > 0",
                            start, end, step));
  }
  // Grid points are start + k*step rather than a running sum, so error does
  // not accumulate. The small slack keeps end itself when (end-start)/step
  // lands a hair under an integer.
  const auto count =
      static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;

  // Products and order do not depend on alpha; only the weights change.
  const SortedEvidence sorted = sort_by_modulus(evidence);
  const std::vector<QuantumProbability> products = cumulative_products(sorted);

  SweepResult sweep;
  sweep.rows.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double alpha = start + static_cast<double>(k) * step;
    if (alpha >= 1.0) break;
    const WeightVector w =
        attitudinal_weights(products.size(), AttitudeParameter::of(alpha));
    const QuantumProbability value = convex_combination(w.span(), products);
    sweep.rows.push_back({alpha, value, value.modulus()});
  }
  return sweep;
}

}  // namespace qsl
