#include "torsionlab/heat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "torsionlab/error.hpp"
#include "torsionlab/parallel.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMomentHorizon = 40.0;
// Relative accuracy per panel; tighter targets sit at the rounding floor of
// the mode sum and only force the recursion to its depth limit.
constexpr double kMomentTolerance = 1e-12;
constexpr unsigned kMomentMaxDepth = 10;

void require_times(const std::vector<double>& times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || !std::isfinite(times[i])) {
      throw InvalidArgument("heat times must be positive");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw InvalidArgument("heat times must be strictly ascending");
    }
  }
}

}  // namespace

HeatSpectrum::HeatSpectrum(const Region& region, const Rational& cutoff,
                           CoefficientSource source)
    : cutoff_lambda_(to_double(cutoff) * kPi * kPi), area_(torsionlab::area(region)) {
  for (auto& m : weighted_modes(region, cutoff, source)) {
    if (m.weight > 0.0) modes_.push_back(m);
  }
  std::stable_sort(modes_.begin(), modes_.end(), [](const WeightedMode& a, const WeightedMode& b) {
    return a.lambda < b.lambda;
  });
  for (const auto& m : modes_) total_weight_ += m.weight;
}

double HeatSpectrum::content(double t) const {
  if (!(t > 0.0)) throw InvalidArgument("heat content requires t > 0");
  double q = 0.0;
  for (const auto& m : modes_) {
    const double decay = std::exp(-m.lambda * t);
    if (decay == 0.0) break;  // ascending lambda: every later term underflows too
    q += m.weight * decay;
  }
  return q;
}

double HeatSpectrum::truncation_bound(double t) const {
  return std::max(0.0, area_ - total_weight_) * std::exp(-cutoff_lambda_ * t);
}

double HeatSpectrum::principal_lambda() const {
  if (modes_.empty()) throw NumericFailure("no weighted modes below the cutoff");
  return modes_.front().lambda;
}

double heat_content(const Region& region, double t, const Rational& cutoff,
                    CoefficientSource source) {
  return HeatSpectrum(region, cutoff, source).content(t);
}

HeatMoment heat_moment_identity(const Region& region, const Rational& cutoff,
                                CoefficientSource source) {
  const HeatSpectrum heat(region, cutoff, source);
  HeatMoment out;
  out.t_max = kMomentHorizon / heat.principal_lambda();

  // Q(0) is finite, so integrate t in (0, t_max] with the point t = 0
  // evaluated as the total weight.
  auto q = [&heat](double t) { return t > 0.0 ? heat.content(t) : heat.total_weight(); };

  // Dyadic panels resolve the fast modes near t = 0.
  const double lambda_max = heat.modes().back().lambda;
  std::vector<double> edges{out.t_max};
  while (edges.back() * lambda_max > 0.5) edges.push_back(edges.back() / 2.0);
  edges.push_back(0.0);

  using Integrator = boost::math::quadrature::gauss_kronrod<double, 61>;
  double integral = 0.0;
  for (std::size_t i = edges.size() - 1; i > 0; --i) {
    integral += Integrator::integrate(q, edges[i], edges[i - 1], kMomentMaxDepth, kMomentTolerance);
  }

  double tail = 0.0;
  for (const auto& m : heat.modes()) tail += m.weight * std::exp(-m.lambda * out.t_max) / m.lambda;

  out.integral = integral + tail;
  out.torsion = torsion_spectral(region, cutoff, source).value;
  out.gap = std::abs(out.integral - out.torsion);
  return out;
}

HeatCurve heat_curve(const Region& region, const std::vector<double>& times,
                     const Rational& cutoff, CoefficientSource source) {
  require_times(times);
  const HeatSpectrum heat(region, cutoff, source);
  HeatCurve curve{times, std::vector<double>(times.size()), cutoff, source};
  parallel_for(times.size(), [&](std::size_t i) { curve.values[i] = heat.content(times[i]); });
  return curve;
}

HeatComparison heat_difference_curve(const Region& a, const Region& b,
                                     const std::vector<double>& times, const Rational& cutoff,
                                     CoefficientSource source) {
  require_times(times);
  const HeatSpectrum ha(a, cutoff, source);
  const HeatSpectrum hb(b, cutoff, source);
  HeatComparison out;
  out.a = HeatCurve{times, std::vector<double>(times.size()), cutoff, source};
  out.b = HeatCurve{times, std::vector<double>(times.size()), cutoff, source};
  out.difference.resize(times.size());
  out.truncation.resize(times.size());
  parallel_for(times.size(), [&](std::size_t i) {
    out.a.values[i] = ha.content(times[i]);
    out.b.values[i] = hb.content(times[i]);
    out.difference[i] = out.a.values[i] - out.b.values[i];
    out.truncation[i] = ha.truncation_bound(times[i]) + hb.truncation_bound(times[i]);
  });
  return out;
}

}  // namespace torsionlab
