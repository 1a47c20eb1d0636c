#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qsl/error.hpp"
#include "qsl/owa.hpp"

using namespace qsl;

namespace {

void expect_weights(const WeightVector& w, const std::vector<double>& expected, double tol) {
  ASSERT_EQ(w.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(w[i], expected[i], tol) << "weight " << i + 1;
  }
}

}  // namespace

TEST(AttitudeParameter, OpenInterval) {
  EXPECT_EQ(AttitudeParameter::of(0.3).value(), 0.3);
  EXPECT_THROW(AttitudeParameter::of(0.0), Error);
  EXPECT_THROW(AttitudeParameter::of(1.0), Error);
  EXPECT_THROW(AttitudeParameter::of(-0.2), Error);
  EXPECT_THROW(AttitudeParameter::of(NAN), Error);
  EXPECT_EQ(AttitudeParameter::min_limit().kind(), AttitudeParameter::Kind::MinLimit);
}

TEST(AttitudinalWeights, WorkedExampleColumns) {
  expect_weights(attitudinal_weights(5, AttitudeParameter::of(0.2)),
                 {0.0016, 0.024, 0.104, 0.28, 0.5904}, 1e-12);
  expect_weights(attitudinal_weights(5, AttitudeParameter::of(0.5)),
                 {0.2, 0.2, 0.2, 0.2, 0.2}, 0.0);
  expect_weights(attitudinal_weights(5, AttitudeParameter::of(0.8)),
                 {0.6687, 0.1265, 0.0848, 0.0656, 0.0543}, 1e-4);
}

TEST(AttitudinalWeights, SingleWeightIsOne) {
  for (double a : {0.01, 0.3, 0.5, 0.99}) {
    expect_weights(attitudinal_weights(1, AttitudeParameter::of(a)), {1.0}, 0.0);
  }
}

TEST(AttitudinalWeights, LimitMarkers) {
  expect_weights(attitudinal_weights(4, AttitudeParameter::min_limit()), {0, 0, 0, 1}, 0.0);
  expect_weights(attitudinal_weights(4, AttitudeParameter::max_limit()), {1, 0, 0, 0}, 0.0);

  const auto near_min = attitudinal_weights(4, AttitudeParameter::of(1e-3));
  const auto near_max = attitudinal_weights(4, AttitudeParameter::of(1 - 1e-3));
  expect_weights(near_min, {0, 0, 0, 1}, 1e-2);
  expect_weights(near_max, {1, 0, 0, 0}, 1e-2);
}

TEST(AttitudinalWeights, ZeroLength) {
  EXPECT_THROW(attitudinal_weights(0, AttitudeParameter::of(0.5)), Error);
}

TEST(WeightVector, FromWeightsChecksInvariants) {
  EXPECT_NO_THROW(WeightVector::from_weights({0.25, 0.75}));
  EXPECT_FALSE(WeightVector::from_weights({1.0}).attitude().has_value());
  EXPECT_THROW(WeightVector::from_weights({}), Error);
  EXPECT_THROW(WeightVector::from_weights({-0.5, 1.5}), Error);
  EXPECT_THROW(WeightVector::from_weights({0.5, 0.4}), Error);
}

TEST(ClassicalOwa, MaxAndMean) {
  const std::vector<double> v{0.3, 0.9, 0.6};
  EXPECT_DOUBLE_EQ(classical_owa(v, WeightVector::from_weights({1, 0, 0})), 0.9);
  EXPECT_DOUBLE_EQ(classical_owa(v, attitudinal_weights(3, AttitudeParameter::of(0.5))), 0.6);
  EXPECT_DOUBLE_EQ(classical_owa(v, WeightVector::from_weights({0, 0, 1})), 0.3);
}

TEST(ClassicalOwa, PessimisticWeightsOnFiveValues) {
  const std::vector<double> v{0.6, 0.4, 0.3, 0.5, 0.2};
  // Exact rational oracle: (0.0016, 0.024, 0.104, 0.28, 0.5904) . (0.6, 0.5, 0.4, 0.3, 0.2)
  // = 802/3125.
  EXPECT_NEAR(classical_owa(v, attitudinal_weights(5, AttitudeParameter::of(0.2))),
              802.0 / 3125.0, 1e-12);
}

TEST(ClassicalOwa, LengthMismatch) {
  const std::vector<double> v{0.1, 0.2};
  EXPECT_THROW(classical_owa(v, WeightVector::from_weights({1.0})), Error);
}

TEST(Orness, ReferenceValues) {
  EXPECT_DOUBLE_EQ(orness(attitudinal_weights(7, AttitudeParameter::of(0.5))), 0.5);
  EXPECT_DOUBLE_EQ(orness(WeightVector::from_weights({1, 0, 0})), 1.0);
  EXPECT_DOUBLE_EQ(orness(WeightVector::from_weights({0, 0, 1})), 0.0);
  // Σ ((5-i)/4) ω_i over the α = 0.2 weights = 177/1250.
  EXPECT_NEAR(orness(attitudinal_weights(5, AttitudeParameter::of(0.2))), 0.1416, 1e-12);
  EXPECT_THROW(orness(WeightVector::from_weights({1.0})), Error);
}

TEST(Dispersion, ReferenceValues) {
  EXPECT_EQ(dispersion(WeightVector::from_weights({1, 0, 0, 0, 0})), 0.0);
  EXPECT_NEAR(dispersion(attitudinal_weights(5, AttitudeParameter::of(0.5))), std::log(5.0),
              1e-12);
  // 40-digit hand sum of -ω ln ω over the α = 0.8 weights.
  EXPECT_NEAR(dispersion(attitudinal_weights(5, AttitudeParameter::of(0.8))),
              1.076814119827013, 1e-12);
}

TEST(AttitudinalWeightsProperty, WeightLaw) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(1, 50);
  std::uniform_real_distribution<double> alpha(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = len(rng);
    double a = alpha(rng);
    if (a == 0.0) continue;
    const auto w = attitudinal_weights(n, AttitudeParameter::of(a));
    const double sum = std::accumulate(w.weights().begin(), w.weights().end(), 0.0);
    EXPECT_NEAR(sum, 1.0, kWeightSumTolerance);
    EXPECT_TRUE(std::all_of(w.weights().begin(), w.weights().end(),
                            [](double x) { return x >= 0.0; }));
    const double o = n >= 2 ? orness(w) : 0.5;
    EXPECT_GE(o, 0.0);
    EXPECT_LE(o, 1.0);
    EXPECT_LE(dispersion(w), std::log(double(n)) + 1e-12);
    if (n < 2) continue;
    if (a < 0.5) {
      EXPECT_TRUE(std::is_sorted(w.weights().begin(), w.weights().end()));
      EXPECT_LT(w[0], w[n - 1]);
    } else if (a > 0.5) {
      EXPECT_TRUE(std::is_sorted(w.weights().rbegin(), w.weights().rend()));
      EXPECT_GT(w[0], w[n - 1]);
    }
  }
}

TEST(ClassicalOwaProperty, OneHotPicksExtremes) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    EXPECT_EQ(classical_owa(v, attitudinal_weights(n, AttitudeParameter::max_limit())),
              *std::max_element(v.begin(), v.end()));
    EXPECT_EQ(classical_owa(v, attitudinal_weights(n, AttitudeParameter::min_limit())),
              *std::min_element(v.begin(), v.end()));
  }
}
