#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsl/evidence.hpp"
#include "qsl/owa.hpp"
#include "qsl/quantum_probability.hpp"

namespace qsl {

/// Evidence reordered by non-increasing modulus.
struct SortedEvidence {
  std::vector<QuantumProbability> ordered;
  /// permutation[k] is the original index of ordered[k].
  std::vector<std::size_t> permutation;
};

/// Every intermediate of one soft-likelihood evaluation.
struct LikelihoodTrace {
  SortedEvidence sorted;
  /// cumulative_products[k] is the product of ordered[0..k].
  std::vector<QuantumProbability> cumulative_products;
  WeightVector weights;
  QuantumProbability result;
  double result_modulus = 0.0;
};

struct SweepRow {
  double alpha = 0.0;
  QuantumProbability likelihood;
  double modulus = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Stable: equal moduli keep their original relative order.
SortedEvidence sort_by_modulus(const EvidenceSet& evidence);

std::vector<QuantumProbability> cumulative_products(const SortedEvidence& sorted);

/// Product of all probabilities (the strict likelihood).
QuantumProbability product_likelihood(const EvidenceSet& evidence);

/// Σ ω_i · Prod(i), Prod(i) being the product of the i largest-modulus
/// probabilities and ω the attitudinal weights for n = |evidence|.
LikelihoodTrace quantum_soft_likelihood(const EvidenceSet& evidence,
                                        AttitudeParameter alpha);

/// Σ ω_i · p'_i over the sorted probabilities themselves, no products.
QuantumProbability quantum_owa_direct(const EvidenceSet& evidence,
                                      AttitudeParameter alpha);

/// Real-valued soft likelihood over classical probabilities in [0, 1].
/// Throws Error(EmptyEvidence) or Error(ValueOutOfRange).
double classical_soft_likelihood(std::span<const double> values,
                                 AttitudeParameter alpha);

/// One row per α = start + k·step, k = 0, 1, … while α <= end. Requires
/// 0 < start <= end < 1 and step > 0 (Error(InvalidRange) otherwise).
SweepResult alpha_sweep(const EvidenceSet& evidence, double start, double end,
                        double step);

}  // namespace qsl
