#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/heat.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {
namespace {

using testing::kPi;

// On the unit square the heat content factors into the interval content
// q(t) = sum_{j odd} 8 / (pi^2 j^2) exp(-j^2 pi^2 t), squared.
double square_product(double t) {
  double q = 0.0;
  for (int j = 20001; j >= 1; j -= 2) {
    const double jd = j;
    q += 8.0 / (kPi * kPi * jd * jd) * std::exp(-jd * jd * kPi * kPi * t);
  }
  return q * q;
}

std::vector<double> log_times(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

const Region kSquare{{Shape::square(1.0)}};
const Region kTriangle{{Shape::triangle(1.0)}};

TEST(Heat, SquareMatchesTheProductOfIntervalContents) {
  const HeatSpectrum heat(kSquare, Rational(2000), CoefficientSource::Exact);
  for (double t : {0.001, 0.01, 0.1, 0.5, 2.0}) {
    const double ref = square_product(t);
    EXPECT_NEAR(heat.content(t), ref, heat.truncation_bound(t) + 1e-14) << "t = " << t;
  }
}

TEST(Heat, FreeFunctionAgreesWithTheSpectrumObject) {
  const HeatSpectrum heat(chapman_pair().first, Rational(300), CoefficientSource::Exact);
  EXPECT_EQ(heat_content(chapman_pair().first, 0.05, Rational(300), CoefficientSource::Exact), heat.content(0.05));
}

TEST(Heat, ContentIsStrictlyDecreasing) {
  for (const Region& r : {kSquare, kTriangle, chapman_pair().first, chapman_pair().second}) {
    const HeatCurve curve = heat_curve(r, log_times(1e-3, 3.0, 60), Rational(1000), CoefficientSource::Exact);
    for (std::size_t i = 1; i < curve.values.size(); ++i) {
      EXPECT_LT(curve.values[i], curve.values[i - 1]) << r.literal() << " at t = " << curve.times[i];
    }
  }
}

TEST(Heat, ContentIsBoundedByThePrincipalDecay) {
  for (const Region& r : {kSquare, kTriangle, chapman_pair().first, chapman_pair().second}) {
    const HeatSpectrum heat(r, Rational(1000), CoefficientSource::Exact);
    for (double t : log_times(1e-3, 3.0, 40)) {
      EXPECT_LE(heat.content(t), area(r) * std::exp(-heat.principal_lambda() * t)) << r.literal();
      EXPECT_GT(heat.content(t), 0.0);
    }
  }
}

TEST(Heat, PrincipalEigenvalueOfTheChapmanPair) {
  // Both regions start at 5 pi^2 / 4: mode (1,2) of tri(2) and mode (1,1) of rect(2,1).
  const auto [c1, c2] = chapman_pair();
  EXPECT_NEAR(HeatSpectrum(c1, Rational(100), CoefficientSource::Exact).principal_lambda(), 1.25 * kPi * kPi, 1e-12);
  EXPECT_NEAR(HeatSpectrum(c2, Rational(100), CoefficientSource::Exact).principal_lambda(), 1.25 * kPi * kPi, 1e-12);
}

TEST(Heat, TotalWeightApproachesTheArea) {
  const HeatSpectrum heat(chapman_pair().first, Rational(2000), CoefficientSource::Exact);
  EXPECT_LE(heat.total_weight(), heat.area());
  const HeatSpectrum coarse(chapman_pair().first, Rational(500), CoefficientSource::Exact);
  EXPECT_LT(coarse.total_weight(), heat.total_weight());
  // The Parseval deficit decays like cutoff^(-1/2): four times the cutoff
  // roughly halves it.
  const double ratio = (heat.area() - heat.total_weight()) / (coarse.area() - coarse.total_weight());
  EXPECT_GT(ratio, 0.45);
  EXPECT_LT(ratio, 0.55);
  EXPECT_NEAR(heat.cutoff_lambda(), 2000.0 * kPi * kPi, 1e-9);
  for (std::size_t i = 1; i < heat.modes().size(); ++i) {
    EXPECT_LE(heat.modes()[i - 1].lambda, heat.modes()[i].lambda);
    EXPECT_GT(heat.modes()[i].weight, 0.0);
  }
}

TEST(Heat, TimeIntegralReproducesTheSpectralTorsion) {
  for (const Region& r : {kSquare, kTriangle, chapman_pair().first}) {
    const HeatMoment m = heat_moment_identity(r, Rational(500), CoefficientSource::Exact);
    EXPECT_LT(m.gap, 1e-8) << r.literal();
    EXPECT_NEAR(m.torsion, torsion_spectral(r, Rational(500), CoefficientSource::Exact).value, 0.0);
    EXPECT_GT(m.t_max, 0.0);
  }
}

TEST(Heat, RegionAgainstItselfHasZeroDifference) {
  const Region c1 = chapman_pair().first;
  const HeatComparison cmp = heat_difference_curve(c1, c1, {0.01, 0.1, 1.0}, Rational(500), CoefficientSource::Exact);
  for (double d : cmp.difference) EXPECT_EQ(d, 0.0);
}

TEST(Heat, SmallerDomainLosesHeatFaster) {
  const HeatComparison cmp = heat_difference_curve(kSquare, Region{{Shape::rectangle(2.0, 1.0)}}, {0.5},
                                                   Rational(1000), CoefficientSource::Exact);
  EXPECT_LT(cmp.difference[0], 0.0);
}

TEST(Heat, ChapmanPairDiffersBeyondTruncation) {
  const auto [c1, c2] = chapman_pair();
  const HeatComparison cmp = heat_difference_curve(c1, c2, {0.01, 0.1, 1.0}, Rational(2000), CoefficientSource::Exact);
  ASSERT_EQ(cmp.truncation.size(), 3U);
  for (std::size_t i = 0; i < cmp.difference.size(); ++i) {
    EXPECT_GT(std::abs(cmp.difference[i]), cmp.truncation[i]) << "t = " << cmp.a.times[i];
    EXPECT_NEAR(cmp.difference[i], cmp.a.values[i] - cmp.b.values[i], 0.0);
  }
}

TEST(Heat, TruncationBoundShrinksWithTheCutoff) {
  const HeatSpectrum coarse(kTriangle, Rational(100), CoefficientSource::Exact);
  const HeatSpectrum fine(kTriangle, Rational(1000), CoefficientSource::Exact);
  EXPECT_LT(fine.truncation_bound(1e-3), coarse.truncation_bound(1e-3));
  const HeatSpectrum full(kTriangle, Rational(3000), CoefficientSource::Exact);
  EXPECT_NEAR(fine.content(1e-3), full.content(1e-3), fine.truncation_bound(1e-3) + 1e-15);
}

TEST(Heat, RejectsBadTimes) {
  EXPECT_THROW(heat_curve(kSquare, {0.1, 0.0}, Rational(100), CoefficientSource::Exact), InvalidArgument);
  EXPECT_THROW(heat_curve(kSquare, {0.2, 0.1}, Rational(100), CoefficientSource::Exact), InvalidArgument);
  EXPECT_THROW(heat_curve(kSquare, {0.1, 0.1}, Rational(100), CoefficientSource::Exact), InvalidArgument);
  EXPECT_THROW(heat_content(kSquare, -1.0, Rational(100), CoefficientSource::Exact), InvalidArgument);
}

}  // namespace
}  // namespace torsionlab
