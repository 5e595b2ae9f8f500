#include <gtest/gtest.h>

#include <random>

#include "contact1d/connections.hpp"
#include "contact1d/scattering.hpp"
#include "contact1d/sweep.hpp"
#include "support.hpp"

namespace contact1d {
namespace {

using namespace std::complex_literals;

TEST(Scatter, FreePropagation) {
  for (double k : {0.1, 1.0, 9.0}) {
    const ScatteringResult r = scatter(Mat2R::identity(), k);
    EXPECT_NEAR(std::abs(r.A - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.B), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(r.T, 1.0);
    EXPECT_EQ(r.R, 0.0);
  }
}

TEST(Scatter, DeltaHalfTransmission) {
  const ScatteringResult r = scatter(v_delta(2.0), 1.0);
  EXPECT_NEAR(r.T, 0.5, 1e-15);
  EXPECT_NEAR(r.R, 0.5, 1e-15);
  const auto o = testing::matching_oracle(v_delta(2.0), 1.0);
  EXPECT_NEAR(std::abs(r.A - o.A), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.B - o.B), 0.0, 1e-15);
}

TEST(Scatter, EpsilonHalfTransmission) {
  const ScatteringResult r = scatter(v_epsilon(2.0), 1.0);
  EXPECT_NEAR(r.T, 0.5, 1e-15);
  EXPECT_NEAR(r.R, 0.5, 1e-15);
}

TEST(Scatter, GeneralMatrixExactAmplitudes) {
  // Exact rational solution of the matching conditions for [[2,3],[1,2]].
  const ScatteringResult r = scatter({2, 3, 1, 2}, 1.0);
  EXPECT_NEAR(std::abs(r.A - (2.0 + 1.0i)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.B - (-2.0i)), 0.0, 1e-15);
  EXPECT_NEAR(r.T, 0.2, 1e-15);
}

TEST(Scatter, Rejections) {
  EXPECT_THROW(scatter(Mat2R::identity(), 0.0), Error);
  EXPECT_THROW(scatter(Mat2R::identity(), -1.0), Error);
  try {
    scatter({1, 1, 1, 1}, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_unimodular);
  }
}

TEST(Scatter, UnitarityAndOracleOnRandomMatrices) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> kd(0.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const Mat2R v = testing::random_unimodular(rng);
    double k = kd(rng);
    if (k == 0.0) k = 1e-3;
    const ScatteringResult r = scatter(v, k);
    ASSERT_NEAR(r.T + r.R, 1.0, 1e-12);
    EXPECT_GE(r.T, 0.0);
    EXPECT_LE(r.T, 1.0 + 1e-12);
    const auto o = testing::matching_oracle(v, k);
    EXPECT_LE(std::abs(r.A - o.A), 1e-11 * std::abs(o.A));
  }
}

TEST(ClosedForms, Values) {
  EXPECT_EQ(t_delta_closed(0.0, 1.0).T, 1.0);
  EXPECT_DOUBLE_EQ(t_delta_closed(2.0, 1.0).T, 0.5);
  EXPECT_DOUBLE_EQ(t_epsilon_closed(2.0, 1.0).T, 0.5);
  EXPECT_EQ(t_epsilon_closed(0.0, 3.0).T, 1.0);
  EXPECT_THROW(t_delta_closed(1.0, 0.0), Error);
  EXPECT_THROW(t_epsilon_closed(1.0, -2.0), Error);
  for (double k : {0.3, 1.0, 7.0}) {
    EXPECT_NEAR(t_epsilon_closed(2.0, k).T, t_delta_closed(2.0, 1.0 / k).T, 1e-15);
  }
}

TEST(ClosedForms, AgreeWithMatrixSolve) {
  const auto strengths = make_grid(-10.0, 10.0, 41, false);
  const auto ks = make_grid(0.05, 10.0, 41, true);
  for (double s : strengths) {
    for (double k : ks) {
      const auto rd = scatter(v_delta(s), k);
      const auto cd = t_delta_closed(s, k);
      EXPECT_NEAR(rd.T, cd.T, 1e-12);
      EXPECT_NEAR(rd.R, cd.R, 1e-12);
      const auto re = scatter(v_epsilon(s), k);
      const auto ce = t_epsilon_closed(s, k);
      EXPECT_NEAR(re.T, ce.T, 1e-12);
      EXPECT_NEAR(re.R, ce.R, 1e-12);
    }
  }
}

TEST(Duality, TransmissionExchangesEnergyScales) {
  const DualityReport r = duality_check(1.0, 2.0);
  EXPECT_TRUE(r.holds);
  EXPECT_LE(r.max_deviation, 1e-12);

  const DualityReport self_dual = duality_check(4.0, 1.0);
  EXPECT_NEAR(self_dual.delta.T, 0.2, 1e-15);
  EXPECT_NEAR(self_dual.epsilon.T, 0.2, 1e-15);

  const DualityReport weak = duality_check(1e-9, 1.0);
  EXPECT_NEAR(weak.delta.T, 1.0, 1e-15);
  EXPECT_NEAR(weak.epsilon.T, 1.0, 1e-15);

  EXPECT_THROW(duality_check(0.0, 1.0), Error);
  EXPECT_THROW(duality_check(1.0, 0.0), Error);
}

TEST(Identical, EpsilonInvisibleToBosons) {
  for (double u : {-3.0, 0.5, 2.0}) {
    for (double k : {0.2, 1.0, 5.0}) {
      EXPECT_EQ(scatter_identical(v_epsilon(u), k, Statistics::boson).C, complex(1.0));
    }
  }
}

TEST(Identical, DeltaInvisibleToFermions) {
  // phi_in = e^{ikx} + C e^{-ikx} forces the odd free wave, C = -1; the
  // delta cannot act on a wave that vanishes at the origin.
  const complex free_fermion = scatter_identical(Mat2R::identity(), 1.0, Statistics::fermion).C;
  EXPECT_EQ(free_fermion, complex(-1.0));
  for (double v : {-3.0, 0.5, 2.0}) {
    for (double k : {0.2, 1.0, 5.0}) {
      EXPECT_EQ(scatter_identical(v_delta(v), k, Statistics::fermion).C, free_fermion);
    }
  }
}

TEST(Identical, DeltaBosonsAndEpsilonFermions) {
  const ExchangeResult b = scatter_identical(v_delta(2.0), 1.0, Statistics::boson);
  EXPECT_NEAR(std::abs(b.C - (-1.0i)), 0.0, 1e-15);
  const ExchangeResult f = scatter_identical(v_epsilon(2.0), 1.0, Statistics::fermion);
  EXPECT_NEAR(std::abs(f.C - (-1.0i)), 0.0, 1e-15);
  EXPECT_EQ(f.statistics, Statistics::fermion);
}

TEST(Identical, GeneralMatrixExactValues) {
  // Exact solutions for [[2,3],[1,2]] at k = 1.
  const Mat2R v{2, 3, 1, 2};
  EXPECT_NEAR(std::abs(scatter_identical(v, 1.0, Statistics::boson).C - (-1.0i)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(scatter_identical(v, 1.0, Statistics::fermion).C - (-0.8 - 0.6i)), 0.0,
              1e-15);
}

TEST(Identical, MatchesClosedForms) {
  for (double s : make_grid(-8.0, 8.0, 33, false)) {
    if (s == 0.0) continue;
    for (double k : make_grid(0.05, 10.0, 33, true)) {
      EXPECT_LE(std::abs(scatter_identical(v_delta(s), k, Statistics::boson).C -
                         c_delta_boson_closed(s, k)),
                1e-12);
      EXPECT_LE(std::abs(scatter_identical(v_epsilon(s), k, Statistics::fermion).C -
                         c_epsilon_fermion_closed(s, k)),
                1e-12);
    }
  }
}

TEST(Identical, ElasticOnRandomMatrices) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> kd(0.01, 10.0);
  for (int i = 0; i < 5000; ++i) {
    const Mat2R v = testing::random_parity_symmetric(rng);
    const double k = kd(rng);
    for (Statistics st : {Statistics::boson, Statistics::fermion}) {
      ASSERT_NEAR(std::abs(scatter_identical(v, k, st).C), 1.0, 1e-12);
    }
  }
}

TEST(Identical, Rejections) {
  EXPECT_THROW(scatter_identical(Mat2R::identity(), 0.0, Statistics::boson), Error);
  EXPECT_THROW(scatter_identical({1, 1, 1, 1}, 1.0, Statistics::boson), Error);
  // Unimodular but t != s: no exchange-symmetric solution exists.
  try {
    scatter_identical({2.0, 1.0, 1.0, 1.0}, 1.0, Statistics::fermion);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
  }
}

TEST(ExchangeDuality, ReciprocalCouplings) {
  const ExchangeDualityReport r = fermion_boson_duality_check(2.0, 2.0, 1.0);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(std::abs(r.c_delta_boson - (-1.0i)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.c_epsilon_fermion - (-1.0i)), 0.0, 1e-15);

  EXPECT_LE(fermion_boson_duality_check(4.0, 1.0, 0.5).deviation, 1e-12);

  try {
    fermion_boson_duality_check(1.0, 1.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::duality_precondition);
  }
}

TEST(ScatterChain, Basics) {
  EXPECT_EQ(scatter_chain(InteractionChain{}, 1.0).T, 1.0);
  for (double x : {-5.0, 0.0, 3.25}) {
    const InteractionChain one({PointInteraction::delta(2.0, x)});
    EXPECT_NEAR(scatter_chain(one, 1.0).T, t_delta_closed(2.0, 1.0).T, 1e-15);
  }
}

TEST(ScatterChain, UnitarityForRandomChains) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> s(-3.0, 3.0), gap(0.05, 1.0), kd(0.1, 5.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<PointInteraction> sites;
    double x = 0.0;
    for (int i = 0; i < 5; ++i) {
      sites.push_back(i % 2 == 0 ? PointInteraction::delta(s(rng), x)
                                 : PointInteraction::epsilon(s(rng), x));
      x += gap(rng);
    }
    const ScatteringResult r = scatter_chain(InteractionChain(std::move(sites)), kd(rng));
    EXPECT_NEAR(r.T + r.R, 1.0, 1e-10);
  }
}

}  // namespace
}  // namespace contact1d
