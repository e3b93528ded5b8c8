#include "vndn/stats/shapiro.hpp"
#include "vndn/stats/stats.hpp"

#include <gtest/gtest.h>

#include <random>

namespace vndn::stats {
namespace {

TEST(MannWhitney, ExactTwoByTwo)
{
  MannWhitneyResult r = mannWhitney({1, 2}, {3, 4});
  EXPECT_TRUE(r.exact);
  EXPECT_DOUBLE_EQ(r.u1, 0.0);
  EXPECT_NEAR(r.pValue, 1.0 / 3.0, 1e-12);
}

TEST(MannWhitney, ExactEightVersusEight)
{
  std::vector<double> a = {12, 7, 22, 18, 9, 14, 25, 3};
  std::vector<double> b = {16, 31, 28, 24, 19, 33, 27, 29};
  MannWhitneyResult r = mannWhitney(a, b);
  EXPECT_TRUE(r.exact);
  EXPECT_DOUBLE_EQ(r.u1, 6.0);
  EXPECT_NEAR(r.pValue, 0.0046620047, 1e-9);
}

TEST(MannWhitney, ApproximationCrossChecksExact)
{
  std::vector<double> a = {12, 7, 22, 18, 9, 14, 25, 3};
  std::vector<double> b = {16, 31, 28, 24, 19, 33, 27, 29};
  MannWhitneyResult approx = mannWhitney(a, b, 0);
  EXPECT_FALSE(approx.exact);
  EXPECT_NEAR(approx.pValue, 0.0074055333, 1e-9);
  MannWhitneyResult exact = mannWhitney(a, b);
  EXPECT_LT(std::fabs(approx.pValue - exact.pValue), 0.05);
}

TEST(MannWhitney, TiedSamplesUseMidranksAndTieCorrection)
{
  std::vector<double> a = {5, 5, 6, 7, 8, 8, 9, 10, 11, 12, 13, 5, 6, 7, 9};
  std::vector<double> b = {8, 9, 9, 10, 11, 12, 13, 14, 15, 15, 16, 17, 11, 12, 13};
  MannWhitneyResult r = mannWhitney(a, b);
  EXPECT_FALSE(r.exact);
  EXPECT_DOUBLE_EQ(r.u1, 29.5);
  EXPECT_NEAR(r.pValue, 0.0005926496, 1e-9);
}

TEST(MannWhitney, ReplicationSizedSamples)
{
  std::vector<double> a, b;
  for (int i = 1; i <= 31; ++i) {
    a.push_back(i);
    b.push_back(i + 5);
  }
  MannWhitneyResult r = mannWhitney(a, b);
  EXPECT_FALSE(r.exact);
  EXPECT_DOUBLE_EQ(r.u1, 338.0);
  EXPECT_NEAR(r.pValue, 0.0455205443, 1e-9);
}

TEST(MannWhitney, IdenticalSamplesGiveNoEvidence)
{
  std::vector<double> a = {0.97, 0.98, 0.99, 1.0, 1.0, 0.97};
  MannWhitneyResult r = mannWhitney(a, a);
  EXPECT_DOUBLE_EQ(r.pValue, 1.0);
  EXPECT_DOUBLE_EQ(varghaDelaneyA12(a, a), 0.5);
}

TEST(MannWhitney, ConstantSamplesGiveNoEvidence)
{
  std::vector<double> a(20, 1.0);
  std::vector<double> b(20, 1.0);
  MannWhitneyResult r = mannWhitney(a, b);
  EXPECT_DOUBLE_EQ(r.pValue, 1.0);
}

TEST(MannWhitney, StatisticsAreAntisymmetric)
{
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n1 = 2 + gen() % 12, n2 = 2 + gen() % 12;
    std::vector<double> a(n1), b(n2);
    for (double& v : a)
      v = dist(gen);
    for (double& v : b)
      v = dist(gen);
    MannWhitneyResult fwd = mannWhitney(a, b);
    MannWhitneyResult rev = mannWhitney(b, a);
    EXPECT_DOUBLE_EQ(fwd.u1 + rev.u1, static_cast<double>(n1 * n2));
    EXPECT_NEAR(fwd.pValue, rev.pValue, 1e-12);
    double a12 = varghaDelaneyA12(a, b);
    EXPECT_NEAR(a12 + varghaDelaneyA12(b, a), 1.0, 1e-12);
    EXPECT_NEAR(a12, fwd.u1 / static_cast<double>(n1 * n2), 1e-12);
  }
}

TEST(MannWhitney, NullCalibration)
{
  std::mt19937 gen(2024);
  std::normal_distribution<double> dist(0.0, 1.0);
  int rejections = 0;
  const int trials = 400;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> a(31), b(31);
    for (double& v : a)
      v = dist(gen);
    for (double& v : b)
      v = dist(gen);
    if (mannWhitney(a, b).pValue < 0.05)
      ++rejections;
  }
  EXPECT_LE(rejections, trials / 10); // near the nominal 5% level
}

TEST(MannWhitney, RejectsEmptySamples)
{
  EXPECT_THROW(mannWhitney({}, {1.0}), ValidationError);
  EXPECT_THROW(mannWhitney({1.0}, {}), ValidationError);
}

TEST(EffectSize, TieHeavyWorkedExample)
{
  // #{x>y} = 3, #{x=y} = 3 over 9 pairs -> (3 + 1.5) / 9
  EXPECT_DOUBLE_EQ(varghaDelaneyA12({1, 2, 3}, {2, 2, 2}), 0.5);
}

TEST(EffectSize, SeparatedSamplesAndMonotoneInvariance)
{
  std::vector<double> lo = {0.1, 0.2, 0.3}, hi = {0.8, 0.9, 1.0};
  EXPECT_DOUBLE_EQ(varghaDelaneyA12(hi, lo), 1.0);
  EXPECT_DOUBLE_EQ(varghaDelaneyA12(lo, hi), 0.0);

  // Effect size depends only on order, so any strictly increasing transform
  // leaves it unchanged.
  std::vector<double> a = {3, 1, 4, 1.5, 9}, b = {2, 6, 5, 3.5};
  auto transformed = [](std::vector<double> v) {
    for (double& x : v)
      x = std::exp(x);
    return v;
  };
  EXPECT_DOUBLE_EQ(varghaDelaneyA12(a, b), varghaDelaneyA12(transformed(a), transformed(b)));
}

TEST(Satisfaction, RatioAndGuard)
{
  EXPECT_DOUBLE_EQ(satisfaction(4, 3), 0.75);
  EXPECT_DOUBLE_EQ(satisfaction(1000, 1000), 1.0);
  EXPECT_THROW(satisfaction(0, 0), ValidationError);
}

TEST(ShapiroWilk, FrozenGoldens)
{
  std::vector<double> s1 = {2.1, 3.4, 1.9,  2.8,  3.1,  2.5,  2.2, 3.0, 2.7, 2.4,
                            2.9, 3.3, 1.8,  2.6,  3.2,  2.0,  2.35, 2.85, 3.05, 2.55};
  ShapiroWilkResult r1 = shapiroWilk(s1);
  EXPECT_NEAR(r1.w, 0.9695589432, 1e-8);
  EXPECT_NEAR(r1.pValue, 0.7455320175, 1e-7);

  std::vector<double> s2;
  for (int v = 1; v <= 12; ++v)
    s2.push_back(static_cast<double>(v) * v);
  ShapiroWilkResult r2 = shapiroWilk(s2);
  EXPECT_NEAR(r2.w, 0.9162924415, 1e-8);
  EXPECT_NEAR(r2.pValue, 0.2566734680, 1e-7);

  std::vector<double> s3 = {148, 154, 158, 160, 161, 162, 166, 170, 182, 195, 236};
  ShapiroWilkResult r3 = shapiroWilk(s3);
  EXPECT_NEAR(r3.w, 0.7888146949, 1e-8);
  EXPECT_NEAR(r3.pValue, 0.0067038141, 1e-7);

  std::vector<double> s4 = {6, 1, -4, 8, -2, 5, 0};
  ShapiroWilkResult r4 = shapiroWilk(s4);
  EXPECT_NEAR(r4.w, 0.9534758585, 1e-8);
  EXPECT_NEAR(r4.pValue, 0.7611937807, 1e-7);
}

TEST(ShapiroWilk, ThreePointLinearSampleIsPerfectlyNormal)
{
  ShapiroWilkResult r = shapiroWilk({1.0, 2.0, 3.0});
  EXPECT_NEAR(r.w, 1.0, 1e-12);
  EXPECT_NEAR(r.pValue, 1.0, 1e-10);
}

TEST(ShapiroWilk, NullCalibration)
{
  std::mt19937 gen(7);
  std::normal_distribution<double> dist(5.0, 2.0);
  int rejections = 0;
  const int trials = 400;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> x(20);
    for (double& v : x)
      v = dist(gen);
    if (shapiroWilk(x).pValue < 0.05)
      ++rejections;
  }
  EXPECT_LE(rejections, trials / 10);
}

TEST(ShapiroWilk, DetectsStronglySkewedData)
{
  std::mt19937 gen(11);
  std::exponential_distribution<double> dist(1.0);
  std::vector<double> x(100);
  for (double& v : x)
    v = dist(gen);
  EXPECT_LT(shapiroWilk(x).pValue, 0.001);
}

TEST(ShapiroWilk, RejectsDegenerateInputs)
{
  EXPECT_THROW(shapiroWilk({1.0, 2.0}), ValidationError);
  EXPECT_THROW(shapiroWilk({3.0, 3.0, 3.0, 3.0}), ValidationError);
  std::vector<double> tooBig(5001, 0.0);
  EXPECT_THROW(shapiroWilk(tooBig), ValidationError);
}

} // namespace
} // namespace vndn::stats
