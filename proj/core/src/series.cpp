#include "torsionlab/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "torsionlab/error.hpp"

namespace torsionlab {

namespace {

constexpr double kPi = std::numbers::pi;

double kernel_value(Kernel kernel, double x) {
  const double t = std::tanh(x);
  return kernel == Kernel::Tanh ? t : 1.0 / t;
}

double tail_envelope(Kernel kernel, double theta, int terms) {
  const double cap = kernel == Kernel::Tanh ? 1.0 : kernel_value(kernel, terms * theta);
  const double km1 = static_cast<double>(terms - 1);
  return cap / (4.0 * km1 * km1 * km1 * km1);
}

int default_terms(Kernel kernel, double theta) {
  int terms = 2 + static_cast<int>(std::pow(1.0 / (4.0 * kDefaultTailTarget), 0.25));
  while (tail_envelope(kernel, theta, terms) >= kDefaultTailTarget) ++terms;
  return terms;
}

bool close_relative(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::abs(b);
}

ZetaConstants build_zeta_constants() {
  ZetaConstants z;
  const double pi2 = kPi * kPi;
  z.zeta2 = pi2 / 6.0;
  z.zeta4 = pi2 * pi2 / 90.0;
  z.zeta6 = pi2 * pi2 * pi2 / 945.0;

  // Direct sum over k <= K, smallest terms first, then the Euler-Maclaurin
  // remainder for k > K. The next omitted correction is below K^-8.
  constexpr int kZeta5Terms = 4000;
  double sum = 0.0;
  for (int k = kZeta5Terms; k >= 1; --k) {
    const double kd = k;
    sum += 1.0 / (kd * kd * kd * kd * kd);
  }
  const double kd = kZeta5Terms;
  const double k4 = kd * kd * kd * kd;
  const double remainder = 1.0 / (4.0 * k4) - 1.0 / (2.0 * k4 * kd) + 5.0 / (12.0 * k4 * kd * kd);
  z.zeta5 = sum + remainder;
  z.zeta5_tail = 1.0 / (k4 * k4);

  const double pi6 = pi2 * pi2 * pi2;
  z.z_rect = pi6 / 768.0;
  z.z_tri = pi6 / 960.0;

  const double z_rect_product = (1.0 - 1.0 / 16.0) * (1.0 - 1.0 / 4.0) * z.zeta4 * z.zeta2;
  const double z_tri_combination =
      ((1.0 - 1.0 / 64.0) - (1.0 - 1.0 / 16.0) * (1.0 - 1.0 / 4.0)) * z.zeta4 * z.zeta2 +
      0.5 * (1.0 - 1.0 / 64.0) * z.zeta6;
  if (!close_relative(z_rect_product, z.z_rect, 1e-15) ||
      !close_relative(z_tri_combination, z.z_tri, 1e-15)) {
    throw NumericFailure("zeta product identities disagree with their closed forms");
  }
  return z;
}

}  // namespace

double lorentz_sum_all(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("lorentz_sum_all requires x > 0");
  return -0.5 + kPi / (2.0 * x * std::tanh(kPi / x));
}

double lorentz_sum_odd(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("lorentz_sum_odd requires x > 0");
  return kPi / (4.0 * x) * std::tanh(kPi / (2.0 * x));
}

SeriesValue hyper_sum(Kernel kernel, Parity parity, double theta, int terms) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidArgument("hyper_sum requires theta > 0");
  }
  if (kernel == Kernel::Coth && theta < kMinCothTheta) {
    throw InvalidArgument("coth kernel requires theta >= " + std::to_string(kMinCothTheta));
  }
  if (terms == 0) terms = default_terms(kernel, theta);
  if (terms < 2) throw InvalidArgument("hyper_sum needs at least two terms");

  const int step = parity == Parity::Odd ? 2 : 1;
  double sum = 0.0;
  // Smallest terms first keeps the rounding error near one ulp of the result.
  for (int n = terms - 1; n >= 0; --n) {
    const double k = 1.0 + static_cast<double>(n) * step;
    const double k2 = k * k;
    sum += kernel_value(kernel, k * theta) / (k2 * k2 * k);
  }
  return SeriesValue{sum, tail_envelope(kernel, theta, terms), terms};
}

LatticeSums lattice_sum_components() {
  const ZetaConstants& z = zeta_constants();
  const SeriesValue coth_all_pi = hyper_sum(Kernel::Coth, Parity::All, kPi);
  const SeriesValue coth_odd_pi = hyper_sum(Kernel::Coth, Parity::Odd, kPi);
  const SeriesValue coth_odd_half = hyper_sum(Kernel::Coth, Parity::Odd, kPi / 2.0);

  LatticeSums s;
  s.all = z.zeta4 * z.zeta2 + 0.5 * z.zeta6 - kPi / 2.0 * coth_all_pi.value;
  // F(2j, 2k) = F(j, k) / 2^6.
  s.even = s.all / 64.0;
  const double c = (1.0 - 1.0 / 16.0) * (1.0 - 1.0 / 4.0) * z.zeta4 * z.zeta2;
  s.odd = c - kPi / 2.0 * coth_odd_pi.value + kPi / 4.0 * coth_odd_half.value;
  s.mixed = s.all - s.even - s.odd;
  s.tail_bound = kPi / 2.0 * coth_all_pi.tail_bound * (1.0 + 1.0 / 64.0) +
                 kPi / 2.0 * coth_odd_pi.tail_bound + kPi / 4.0 * coth_odd_half.tail_bound;
  return s;
}

const ZetaConstants& zeta_constants() {
  static const ZetaConstants constants = build_zeta_constants();
  return constants;
}

}  // namespace torsionlab
