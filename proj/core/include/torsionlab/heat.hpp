#pragma once

#include <vector>

#include "torsionlab/geometry.hpp"
#include "torsionlab/rational.hpp"
#include "torsionlab/spectrum.hpp"

namespace torsionlab {

/// Truncated spectral heat content Q(t) = sum a^2 exp(-lambda t) for a region
/// with unit initial temperature and a cold boundary.
class HeatSpectrum {
 public:
  HeatSpectrum(const Region& region, const Rational& cutoff, CoefficientSource source);

  double content(double t) const;

  /// Bound on the omitted modes: (Area - sum a^2) exp(-cutoff pi^2 t).
  /// Rigorous for exact coefficients.
  double truncation_bound(double t) const;

  /// Smallest eigenvalue carrying nonzero weight.
  double principal_lambda() const;
  double total_weight() const { return total_weight_; }
  double cutoff_lambda() const { return cutoff_lambda_; }
  double area() const { return area_; }
  const std::vector<WeightedMode>& modes() const { return modes_; }

 private:
  std::vector<WeightedMode> modes_;  // nonzero weight, ascending lambda
  double total_weight_ = 0.0;
  double cutoff_lambda_ = 0.0;
  double area_ = 0.0;
};

double heat_content(const Region& region, double t, const Rational& cutoff,
                    CoefficientSource source);

/// int_0^inf Q(t) dt against the spectral torsion with the same modes.
struct HeatMoment {
  double integral = 0.0;
  double torsion = 0.0;
  double gap = 0.0;
  double t_max = 0.0;
};

/// Adaptive Gauss-Kronrod quadrature of Q on [0, t_max] with
/// lambda_1 t_max = 40, plus the exact tail sum a^2 exp(-lambda t_max) / lambda.
HeatMoment heat_moment_identity(const Region& region, const Rational& cutoff,
                                CoefficientSource source);

struct HeatCurve {
  std::vector<double> times;
  std::vector<double> values;
  Rational cutoff;
  CoefficientSource source = CoefficientSource::Exact;
};

struct HeatComparison {
  HeatCurve a;
  HeatCurve b;
  std::vector<double> difference;  // Q_a - Q_b
  /// Sum of both truncation bounds at each time.
  std::vector<double> truncation;
};

HeatCurve heat_curve(const Region& region, const std::vector<double>& times,
                     const Rational& cutoff, CoefficientSource source);

HeatComparison heat_difference_curve(const Region& a, const Region& b,
                                     const std::vector<double>& times, const Rational& cutoff,
                                     CoefficientSource source);

}  // namespace torsionlab
