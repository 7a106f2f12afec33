#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "torsionlab/geometry.hpp"
#include "torsionlab/rational.hpp"

namespace torsionlab {

/// Mode (j, k) of a Dirichlet eigenfunction; triangles require j < k.
struct ModeIndex {
  int j = 1;
  int k = 1;
  auto operator<=>(const ModeIndex&) const = default;
};

/// lambda = q * pi^2 with q an exact positive rational.
class RationalEigenvalue {
 public:
  explicit RationalEigenvalue(Rational q);

  const Rational& units_of_pi2() const { return q_; }
  BigInt num() const { return numerator(q_); }
  BigInt den() const { return denominator(q_); }
  double value() const;

  bool operator==(const RationalEigenvalue& other) const { return q_ == other.q_; }
  bool operator<(const RationalEigenvalue& other) const { return q_ < other.q_; }
  bool operator>(const RationalEigenvalue& other) const { return other < *this; }

 private:
  Rational q_;
};

RationalEigenvalue rect_eigenvalue(const Length& length, const Length& height, ModeIndex m);
RationalEigenvalue tri_eigenvalue(const Length& leg, ModeIndex m);
RationalEigenvalue eigenvalue(const Shape& shape, ModeIndex m);
RationalEigenvalue principal_eigenvalue(const Shape& shape);

/// Integral of the normalized rectangle eigenfunction:
/// 8 sqrt(LH) / (pi^2 j k) when j and k are both odd, zero otherwise.
double rect_coefficient(double length, double height, ModeIndex m);

/// Published triangle coefficient |a| = 4L / (pi^2 j k) for mixed parity.
/// Kept verbatim for the audit; it does not integrate the eigenfunction.
double tri_coefficient_paper(double leg, ModeIndex m);

/// Exact integral of the normalized triangle eigenfunction over the triangle.
double tri_coefficient_exact(double leg, ModeIndex m);

enum class CoefficientSource { Paper, Exact };

/// Rectangles ignore the source; both published and exact values coincide.
double coefficient(const Shape& shape, ModeIndex m, CoefficientSource source);

/// phi_{j,k}(x, y) as printed for each shape. Throws for points outside the shape.
double eigenfunction_value(const Shape& shape, ModeIndex m, double x, double y);

/// Laplacian of phi_{j,k} from its analytic second partial derivatives.
double eigenfunction_laplacian(const Shape& shape, ModeIndex m, double x, double y);

struct ModeTag {
  std::size_t shape = 0;
  ModeIndex mode;
  auto operator<=>(const ModeTag&) const = default;
};

struct SpectrumLine {
  RationalEigenvalue lambda;
  int multiplicity = 0;
  std::vector<ModeTag> modes;
};

/// All eigenvalues <= bound * pi^2, ascending, grouped with multiplicity.
struct SpectrumSlice {
  Rational bound;
  std::vector<SpectrumLine> lines;

  /// Eigenvalue count with multiplicity.
  std::size_t count() const;
};

SpectrumSlice enumerate_spectrum(const Region& region, const Rational& bound);

struct IsospectralReport {
  bool equal = true;
  std::optional<Rational> first_mismatch;  // units of pi^2
  std::size_t count_a = 0;
  std::size_t count_b = 0;
};

IsospectralReport isospectral_check(const Region& a, const Region& b, const Rational& bound);

/// One Dirichlet mode with its eigenvalue and squared coefficient a^2.
struct WeightedMode {
  std::size_t shape = 0;
  ModeIndex mode;
  double lambda = 0.0;
  double weight = 0.0;
};

/// Modes with lambda <= cutoff * pi^2 for every component, ordered by
/// (shape, j, k). Zero-weight modes are kept.
std::vector<WeightedMode> weighted_modes(const Region& region, const Rational& cutoff,
                                         CoefficientSource source);

}  // namespace torsionlab
