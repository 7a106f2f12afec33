#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "torsionlab/geometry.hpp"
#include "torsionlab/rational.hpp"
#include "torsionlab/spectrum.hpp"

namespace torsionlab {

enum class TorsionMethod { RectClosed, TriClosedPaper, Spectral, Oracle };

std::string_view method_name(TorsionMethod method);

/// Torsional rigidity T = integral of u where -Laplace(u) = 1, u = 0 on the boundary.
struct TorsionResult {
  double value = 0.0;
  TorsionMethod method = TorsionMethod::RectClosed;
  double tail_bound = 0.0;
  std::optional<Rational> cutoff;  // spectral only, units of pi^2
  /// False when tail_bound is only a diagnostic (published triangle coefficients).
  bool tail_certified = true;
};

/// Closed form for the L x H rectangle via the odd tanh series, using
/// beta = pi H / L and gamma = pi L / H.
TorsionResult torsion_rect_closed(double length, double height);

/// The published closed form for the right isosceles triangle with leg L,
/// evaluated as printed.
TorsionResult torsion_tri_closed_paper(double leg);

/// Sum of a^2 / lambda over modes with lambda <= cutoff * pi^2.
///
/// Terms are accumulated in ascending lambda, so a larger cutoff only appends
/// nonnegative terms and the result is nondecreasing in the cutoff. The tail
/// bound is (Area - sum a^2) / (cutoff pi^2), which Parseval makes rigorous
/// for exact coefficients.
TorsionResult torsion_spectral(const Region& region, const Rational& cutoff,
                               CoefficientSource source);

struct RegionTorsion {
  double value = 0.0;
  double tail_bound = 0.0;
  std::vector<TorsionResult> components;
};

/// Component-wise closed forms, added over the disjoint union.
RegionTorsion torsion_region_closed(const Region& region);

/// Rayleigh-quotient lower bound for the unit right isosceles triangle from
/// the trial function x y (1 - x - y), in exact arithmetic.
struct VariationalBound {
  Rational integral;          // int u
  Rational dirichlet_energy;  // int |grad u|^2
  Rational bound;             // integral^2 / dirichlet_energy
};

VariationalBound triangle_variational_bound();

}  // namespace torsionlab
