#include "torsionlab/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "torsionlab/error.hpp"
#include "torsionlab/series.hpp"

namespace torsionlab {

namespace {

constexpr double kPi = std::numbers::pi;

double pi6() {
  const double p2 = kPi * kPi;
  return p2 * p2 * p2;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidArgument(std::string(what) + " must be positive");
  }
}

// Bivariate polynomial with exact coefficients, keyed by (x power, y power).
using Poly = std::map<std::pair<int, int>, Rational>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      out[{pa.first + pb.first, pa.second + pb.second}] += ca * cb;
    }
  }
  return out;
}

Poly derivative(const Poly& p, bool in_x) {
  Poly out;
  for (const auto& [pw, c] : p) {
    const int e = in_x ? pw.first : pw.second;
    if (e == 0) continue;
    const auto key = in_x ? std::pair{pw.first - 1, pw.second} : std::pair{pw.first, pw.second - 1};
    out[key] += c * e;
  }
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// int over {x, y >= 0, x + y <= 1} of x^a y^b = a! b! / (a + b + 2)!.
Rational integrate_simplex(const Poly& p) {
  Rational total = 0;
  for (const auto& [pw, c] : p) {
    total += c * Rational(factorial(pw.first) * factorial(pw.second),
                          factorial(pw.first + pw.second + 2));
  }
  return total;
}

}  // namespace

std::string_view method_name(TorsionMethod method) {
  switch (method) {
    case TorsionMethod::RectClosed: return "rect_closed";
    case TorsionMethod::TriClosedPaper: return "tri_closed_paper";
    case TorsionMethod::Spectral: return "spectral";
    case TorsionMethod::Oracle: return "oracle";
  }
  return "unknown";
}

TorsionResult torsion_rect_closed(double length, double height) {
  require_positive(length, "rectangle length");
  require_positive(height, "rectangle height");
  const double beta = kPi * height / length;
  const double gamma = kPi * length / height;
  const SeriesValue series = hyper_sum(Kernel::Tanh, Parity::Odd, gamma / 2.0);
  const double prefactor = 64.0 * height * height * height * length / pi6();
  const double bracket = zeta_constants().z_rect - beta / 4.0 * series.value;
  TorsionResult r;
  r.value = prefactor * bracket;
  r.method = TorsionMethod::RectClosed;
  r.tail_bound = prefactor * beta / 4.0 * series.tail_bound;
  return r;
}

TorsionResult torsion_tri_closed_paper(double leg) {
  require_positive(leg, "triangle leg");
  const SeriesValue tanh_all = hyper_sum(Kernel::Tanh, Parity::All, kPi);
  const SeriesValue coth_odd = hyper_sum(Kernel::Coth, Parity::Odd, kPi / 2.0);
  const double l4 = leg * leg * leg * leg;
  const double prefactor = 0.5 * 16.0 * l4 / pi6();
  const double bracket = zeta_constants().z_tri - kPi / 2.0 / 64.0 * tanh_all.value -
                         kPi / 4.0 * coth_odd.value;
  TorsionResult r;
  r.value = prefactor * bracket;
  r.method = TorsionMethod::TriClosedPaper;
  r.tail_bound =
      prefactor * (kPi / 128.0 * tanh_all.tail_bound + kPi / 4.0 * coth_odd.tail_bound);
  return r;
}

TorsionResult torsion_spectral(const Region& region, const Rational& cutoff,
                               CoefficientSource source) {
  std::vector<WeightedMode> modes = weighted_modes(region, cutoff, source);
  std::stable_sort(modes.begin(), modes.end(), [](const WeightedMode& a, const WeightedMode& b) {
    return a.lambda < b.lambda;
  });
  double sum = 0.0;
  double mass = 0.0;
  for (const auto& m : modes) {
    sum += m.weight / m.lambda;
    mass += m.weight;
  }
  bool has_triangle = false;
  for (const auto& s : region.components()) has_triangle = has_triangle || s.is_triangle();

  TorsionResult r;
  r.value = sum;
  r.method = TorsionMethod::Spectral;
  r.cutoff = cutoff;
  r.tail_bound = std::max(0.0, area(region) - mass) / (to_double(cutoff) * kPi * kPi);
  r.tail_certified = source == CoefficientSource::Exact || !has_triangle;
  return r;
}

RegionTorsion torsion_region_closed(const Region& region) {
  RegionTorsion out;
  for (const auto& s : region.components()) {
    TorsionResult part = s.is_rectangle()
                             ? torsion_rect_closed(s.length().value(), s.height().value())
                             : torsion_tri_closed_paper(s.length().value());
    out.value += part.value;
    out.tail_bound += part.tail_bound;
    out.components.push_back(std::move(part));
  }
  return out;
}

VariationalBound triangle_variational_bound() {
  // u = x y (1 - x - y) = xy - x^2 y - x y^2
  const Poly u{{{1, 1}, Rational(1)}, {{2, 1}, Rational(-1)}, {{1, 2}, Rational(-1)}};
  const Poly ux = derivative(u, true);
  const Poly uy = derivative(u, false);
  VariationalBound vb;
  vb.integral = integrate_simplex(u);
  vb.dirichlet_energy = integrate_simplex(multiply(ux, ux)) + integrate_simplex(multiply(uy, uy));
  vb.bound = vb.integral * vb.integral / vb.dirichlet_energy;
  return vb;
}

}  // namespace torsionlab
