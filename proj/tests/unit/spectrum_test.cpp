#include <cmath>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/spectrum.hpp"

namespace torsionlab {
namespace {

using testing::kPi;

std::multiset<Rational> as_multiset(const SpectrumSlice& s) {
  std::multiset<Rational> out;
  for (const auto& line : s.lines) {
    for (int i = 0; i < line.multiplicity; ++i) out.insert(line.lambda.units_of_pi2());
  }
  return out;
}

// Brute force over a generous index box with exact rationals.
std::multiset<Rational> brute_spectrum(const Region& r, const Rational& bound, int box) {
  std::multiset<Rational> out;
  for (const auto& s : r.components()) {
    for (int j = 1; j <= box; ++j) {
      for (int k = 1; k <= box; ++k) {
        if (s.is_triangle() && j >= k) continue;
        const Rational q = Rational(j * j) / s.length().square() + Rational(k * k) / s.height().square();
        if (q <= bound) out.insert(q);
      }
    }
  }
  return out;
}

TEST(Spectrum, RectangleEigenvalues) {
  EXPECT_EQ(rect_eigenvalue(1.0, 1.0, {1, 1}).units_of_pi2(), Rational(2));
  EXPECT_EQ(rect_eigenvalue(2.0, 1.0, {1, 1}).units_of_pi2(), Rational(5, 4));
  const RationalEigenvalue e = rect_eigenvalue(2.0, 1.0, {2, 1});
  EXPECT_EQ(e.units_of_pi2(), Rational(2));
  EXPECT_NEAR(e.value(), kPi * kPi * (1.0 + 1.0), 1e-12);
  EXPECT_EQ(e.num(), 2);
  EXPECT_EQ(e.den(), 1);
}

TEST(Spectrum, IrrationalSquareHasNoExactEigenvalue) {
  EXPECT_THROW(rect_eigenvalue(Length::inexact(kPi), 1.0, {1, 1}), NoExactRepresentation);
  EXPECT_THROW(tri_eigenvalue(Length::inexact(kPi), {1, 2}), NoExactRepresentation);
}

TEST(Spectrum, TriangleEigenvalues) {
  EXPECT_EQ(tri_eigenvalue(2.0, {1, 2}).units_of_pi2(), Rational(5, 4));
  EXPECT_EQ(tri_eigenvalue(Length::sqrt_of(2), {1, 2}).units_of_pi2(), Rational(5, 2));
  EXPECT_EQ(tri_eigenvalue(1.0, {2, 3}).units_of_pi2(), Rational(13));
  EXPECT_THROW(tri_eigenvalue(1.0, {2, 2}), InvalidArgument);
  EXPECT_THROW(tri_eigenvalue(1.0, {3, 2}), InvalidArgument);
}

TEST(Spectrum, RectangleCoefficients) {
  EXPECT_NEAR(rect_coefficient(1, 1, {1, 1}), 8.0 / (kPi * kPi), 1e-15);
  EXPECT_NEAR(rect_coefficient(1, 1, {1, 1}), 0.810569469, 1e-9);
  EXPECT_EQ(rect_coefficient(1, 1, {1, 2}), 0.0);
  EXPECT_NEAR(rect_coefficient(1, 1, {3, 5}), 8.0 / (15.0 * kPi * kPi), 1e-15);
}

TEST(Spectrum, RectangleCoefficientMatchesQuadrature) {
  const Shape sq = Shape::square(1.0);
  for (ModeIndex m : {ModeIndex{3, 5}, ModeIndex{1, 1}, ModeIndex{2, 3}}) {
    const double q = testing::rectangle_quadrature(
        [&](double x, double y) { return eigenfunction_value(sq, m, x, y); }, 1.0, 1.0, 32, 2);
    EXPECT_NEAR(rect_coefficient(1, 1, m), q, 1e-12);
  }
  const Shape r = Shape::rectangle(2.0, 1.0);
  const double q = testing::rectangle_quadrature(
      [&](double x, double y) { return eigenfunction_value(r, {3, 1}, x, y); }, 2.0, 1.0, 32, 2);
  EXPECT_NEAR(rect_coefficient(2, 1, {3, 1}), q, 1e-12);
}

TEST(Spectrum, PublishedTriangleCoefficient) {
  EXPECT_NEAR(tri_coefficient_paper(1.0, {1, 2}), 4.0 / (2.0 * kPi * kPi), 1e-15);
  EXPECT_NEAR(tri_coefficient_paper(1.0, {1, 2}), 0.202642367, 1e-9);
  EXPECT_EQ(tri_coefficient_paper(1.0, {1, 3}), 0.0);
  EXPECT_NEAR(tri_coefficient_paper(2.0, {1, 2}), 8.0 / (2.0 * kPi * kPi), 1e-15);
}

TEST(Spectrum, ExactTriangleCoefficientFrozenValues) {
  // Frozen from the quadrature oracle; analytic forms 16/(3 pi^2), 32/(15 pi^2).
  EXPECT_NEAR(tri_coefficient_exact(1.0, {1, 2}), 0.54037964, 1e-8);
  EXPECT_NEAR(tri_coefficient_exact(1.0, {1, 2}), 16.0 / (3.0 * kPi * kPi), 1e-15);
  EXPECT_EQ(tri_coefficient_exact(1.0, {1, 3}), 0.0);
  EXPECT_NEAR(tri_coefficient_exact(1.0, {1, 4}), 0.21615186, 1e-8);
  EXPECT_NEAR(tri_coefficient_exact(1.0, {1, 4}), 32.0 / (15.0 * kPi * kPi), 1e-15);
}

TEST(Spectrum, ExactTriangleCoefficientMatchesAdaptiveQuadrature) {
  for (double leg : {1.0, 2.0, std::sqrt(2.0)}) {
    const Shape t = Shape::triangle(leg);
    for (int k = 2; k <= 9; ++k) {
      for (int j = 1; j < k; ++j) {
        const ModeIndex m{j, k};
        const double q = testing::adaptive_triangle_quadrature(
            [&](double x, double y) { return eigenfunction_value(t, m, x, y); }, leg);
        EXPECT_NEAR(tri_coefficient_exact(leg, m), q, 1e-12) << "leg " << leg << " j " << j << " k " << k;
      }
    }
  }
}

TEST(Spectrum, ExactTriangleCoefficientVanishesForEqualParity) {
  for (int k = 2; k <= 40; ++k) {
    for (int j = 1; j < k; ++j) {
      if ((j + k) % 2 == 0) {
        EXPECT_EQ(tri_coefficient_exact(1.0, {j, k}), 0.0);
      } else {
        EXPECT_NE(tri_coefficient_exact(1.0, {j, k}), 0.0);
      }
    }
  }
}

TEST(Spectrum, PublishedAndExactTriangleCoefficientsDisagree) {
  EXPECT_GT(std::abs(tri_coefficient_exact(1.0, {1, 2}) - tri_coefficient_paper(1.0, {1, 2})), 0.3);
}

TEST(Spectrum, EigenfunctionValues) {
  const Shape sq = Shape::square(1.0);
  EXPECT_NEAR(eigenfunction_value(sq, {1, 1}, 0.5, 0.5), 2.0, 1e-15);
  EXPECT_NEAR(eigenfunction_value(sq, {1, 1}, 0.25, 0.5), 2.0 * std::sin(kPi / 4.0), 1e-15);
  EXPECT_NEAR(eigenfunction_value(sq, {1, 1}, 0.25, 0.5), 1.414214, 1e-6);
  const Shape t = Shape::triangle(1.0);
  for (double x = 0.0; x <= 1.0; x += 0.05) {
    EXPECT_LT(std::abs(eigenfunction_value(t, {1, 2}, x, 1.0 - x)), 1e-12);
  }
  EXPECT_THROW(eigenfunction_value(t, {1, 2}, 0.8, 0.8), InvalidArgument);
  EXPECT_THROW(eigenfunction_value(sq, {1, 1}, 1.5, 0.5), InvalidArgument);
}

TEST(Spectrum, EigenfunctionsVanishOnTheBoundary) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<Shape> shapes{Shape::square(1.0), Shape::rectangle(2.0, 1.0),
                                  Shape::triangle(2.0), Shape::triangle(Length::sqrt_of(2))};
  for (const auto& s : shapes) {
    const double l = s.length().value();
    const double h = s.height().value();
    const ModeIndex m = s.is_triangle() ? ModeIndex{2, 5} : ModeIndex{3, 2};
    for (int n = 0; n < 100; ++n) {
      const double u = unit(rng);
      double x = 0.0;
      double y = 0.0;
      switch (n % (s.is_triangle() ? 3 : 4)) {
        case 0: x = u * l; y = 0.0; break;
        case 1: x = 0.0; y = u * h; break;
        case 2: x = s.is_triangle() ? u * l : l; y = s.is_triangle() ? l - x : u * h; break;
        default: x = u * l; y = h; break;
      }
      EXPECT_LT(std::abs(eigenfunction_value(s, m, x, y)), 1e-12) << s.literal();
    }
  }
}

TEST(Spectrum, HelmholtzResidualVanishes) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<Shape> shapes{Shape::square(1.0), Shape::rectangle(2.0, 1.0),
                                  Shape::triangle(2.0), Shape::triangle(Length::sqrt_of(2))};
  for (const auto& s : shapes) {
    for (int n = 0; n < 50; ++n) {
      const ModeIndex m = s.is_triangle() ? ModeIndex{1 + n % 4, 5 + n % 3} : ModeIndex{1 + n % 5, 1 + n % 3};
      double x = unit(rng) * s.length().value();
      double y = unit(rng) * s.height().value();
      if (s.is_triangle() && x + y > s.length().value()) {
        x = s.length().value() - x;
        y = s.length().value() - y;
      }
      const double lambda = eigenvalue(s, m).value();
      const double phi = eigenfunction_value(s, m, x, y);
      const double lap = eigenfunction_laplacian(s, m, x, y);
      const double scale = std::max(std::abs(lap), lambda * std::abs(phi));
      EXPECT_LE(std::abs(lap + lambda * phi), 1e-9 * std::max(scale, 1e-300)) << s.literal();
    }
  }
}

TEST(Spectrum, EnumerationExamples) {
  const SpectrumSlice sq = enumerate_spectrum(Region(Shape::square(1.0)), 6);
  EXPECT_EQ(as_multiset(sq), (std::multiset<Rational>{2, 5, 5}));
  ASSERT_EQ(sq.lines.size(), 2u);
  EXPECT_EQ(sq.lines[1].multiplicity, 2);
  EXPECT_EQ(sq.lines[1].modes[0].mode, (ModeIndex{1, 2}));
  EXPECT_EQ(sq.lines[1].modes[1].mode, (ModeIndex{2, 1}));

  const SpectrumSlice tri = enumerate_spectrum(Region(Shape::triangle(2.0)), 4);
  EXPECT_EQ(as_multiset(tri), (std::multiset<Rational>{Rational(5, 4), Rational(5, 2), Rational(13, 4)}));

  const SpectrumSlice c2 = enumerate_spectrum(chapman_pair().second, 3);
  EXPECT_EQ(as_multiset(c2), (std::multiset<Rational>{Rational(5, 4), 2, Rational(5, 2)}));
}

TEST(Spectrum, EnumerationMatchesBruteForce) {
  const auto [c1, c2] = chapman_pair();
  for (const Region& r : {c1, c2, Region(Shape::rectangle(Length::exact(Rational(3, 2)), 1.0))}) {
    for (const Rational& bound : {Rational(7), Rational(200, 3), Rational(150)}) {
      EXPECT_EQ(as_multiset(enumerate_spectrum(r, bound)), brute_spectrum(r, bound, 40))
          << r.literal() << " " << bound;
    }
  }
}

TEST(Spectrum, EnumerationIsSortedPositiveAndMonotoneInBound) {
  const auto [c1, c2] = chapman_pair();
  const SpectrumSlice small = enumerate_spectrum(c1, 100);
  const SpectrumSlice large = enumerate_spectrum(c1, 400);
  for (std::size_t i = 0; i < large.lines.size(); ++i) {
    EXPECT_GT(large.lines[i].lambda.units_of_pi2(), 0);
    EXPECT_GE(large.lines[i].multiplicity, 1);
    EXPECT_LE(large.lines[i].lambda.units_of_pi2(), Rational(400));
    if (i > 0) EXPECT_LT(large.lines[i - 1].lambda, large.lines[i].lambda);
  }
  const auto s = as_multiset(small);
  const auto l = as_multiset(large);
  EXPECT_TRUE(std::includes(l.begin(), l.end(), s.begin(), s.end()));
}

TEST(Spectrum, TiesBrokenByShapeThenMode) {
  const auto [c1, c2] = chapman_pair();
  for (const auto& line : enumerate_spectrum(c1, 300).lines) {
    for (std::size_t i = 1; i < line.modes.size(); ++i) EXPECT_LT(line.modes[i - 1], line.modes[i]);
  }
}

TEST(Spectrum, IsospectralityExamples) {
  const auto [c1, c2] = chapman_pair();
  const IsospectralReport chapman = isospectral_check(c1, c2, 1000);
  EXPECT_TRUE(chapman.equal);
  EXPECT_EQ(chapman.count_a, chapman.count_b);

  const IsospectralReport differ =
      isospectral_check(Region(Shape::square(1.0)), Region(Shape::rectangle(2.0, 1.0)), 10);
  EXPECT_FALSE(differ.equal);
  ASSERT_TRUE(differ.first_mismatch.has_value());
  EXPECT_EQ(*differ.first_mismatch, Rational(5, 4));

  EXPECT_TRUE(isospectral_check(c1, c1, 50).equal);
}

TEST(Spectrum, ParsevalBoundsHold) {
  const std::vector<Shape> shapes{Shape::square(1.0), Shape::rectangle(2.0, 1.0),
                                  Shape::triangle(2.0), Shape::triangle(1.0)};
  for (const auto& s : shapes) {
    double mass = 0.0;
    for (const auto& m : weighted_modes(Region(s), 500, CoefficientSource::Exact)) mass += m.weight;
    EXPECT_LT(mass, s.area()) << s.literal();
    EXPECT_GT(mass, 0.9 * s.area()) << s.literal();
  }
}

TEST(Spectrum, WeylCountForC1) {
  const auto [c1, c2] = chapman_pair();
  const double bound = 1000.0;
  const double count = static_cast<double>(enumerate_spectrum(c1, 1000).count());
  const double weyl = area(c1) * bound * kPi * kPi / (4.0 * kPi);
  EXPECT_LT(std::abs(count - weyl), 0.15 * weyl);
}

TEST(Spectrum, RejectsNonpositiveBound) {
  EXPECT_THROW(enumerate_spectrum(Region(Shape::square(1.0)), 0), InvalidArgument);
}

}  // namespace
}  // namespace torsionlab
