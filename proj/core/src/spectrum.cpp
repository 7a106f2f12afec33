#include "torsionlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "torsionlab/error.hpp"

namespace torsionlab {

namespace {

constexpr double kPi = std::numbers::pi;

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

void require_positive_mode(ModeIndex m) {
  if (m.j < 1 || m.k < 1) throw InvalidArgument("mode indices must be positive integers");
}

void require_triangle_mode(ModeIndex m) {
  require_positive_mode(m);
  if (m.j >= m.k) {
    throw InvalidArgument("triangle modes require j < k (got j=" + std::to_string(m.j) +
                          ", k=" + std::to_string(m.k) + ")");
  }
}

BigInt least_common_multiple(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Squared-index form lambda/pi^2 = (j^2 * xs + k^2 * ys) / den over integers.
struct IntegerForm {
  BigInt xs;
  BigInt ys;
  BigInt limit;  // bound * den
  BigInt den;
};

IntegerForm integer_form(const Shape& shape, const Rational& bound) {
  const Rational a = Rational(1) / shape.length().square();
  const Rational b = Rational(1) / shape.height().square();
  BigInt den = least_common_multiple(least_common_multiple(denominator(a), denominator(b)),
                                    denominator(bound));
  IntegerForm f;
  f.xs = numerator(a) * (den / denominator(a));
  f.ys = numerator(b) * (den / denominator(b));
  f.limit = numerator(bound) * (den / denominator(bound));
  f.den = std::move(den);
  return f;
}

struct RawMode {
  Rational q;
  ModeTag tag;
};

// Every mode of one shape with eigenvalue <= bound * pi^2, in (j, k) order.
template <typename Emit>
void sweep_modes(const Shape& shape, const Rational& bound, Emit&& emit) {
  const IntegerForm f = integer_form(shape, bound);
  if (shape.is_rectangle()) {
    for (int j = 1;; ++j) {
      const BigInt jj = BigInt(j) * j * f.xs;
      if (jj + f.ys > f.limit) break;
      for (int k = 1;; ++k) {
        const BigInt total = jj + BigInt(k) * k * f.ys;
        if (total > f.limit) break;
        emit(ModeIndex{j, k}, Rational(total, f.den));
      }
    }
    return;
  }
  // Triangle: xs == ys, j < k.
  for (int j = 1;; ++j) {
    const BigInt jj = BigInt(j) * j * f.xs;
    const BigInt first = BigInt(j + 1) * (j + 1) * f.ys;
    if (jj + first > f.limit) break;
    for (int k = j + 1;; ++k) {
      const BigInt total = jj + BigInt(k) * k * f.ys;
      if (total > f.limit) break;
      emit(ModeIndex{j, k}, Rational(total, f.den));
    }
  }
}

void require_bound(const Rational& bound) {
  if (bound <= 0) throw InvalidArgument("spectral bound must be positive");
}

}  // namespace

RationalEigenvalue::RationalEigenvalue(Rational q) : q_(std::move(q)) {
  if (q_ <= 0) throw InvalidArgument("eigenvalue must be positive");
}

double RationalEigenvalue::value() const { return to_double(q_) * kPi * kPi; }

RationalEigenvalue rect_eigenvalue(const Length& length, const Length& height, ModeIndex m) {
  require_positive_mode(m);
  const Rational j2 = Rational(m.j) * m.j;
  const Rational k2 = Rational(m.k) * m.k;
  return RationalEigenvalue(j2 / length.square() + k2 / height.square());
}

RationalEigenvalue tri_eigenvalue(const Length& leg, ModeIndex m) {
  require_triangle_mode(m);
  return RationalEigenvalue(Rational(m.j * m.j + m.k * m.k) / leg.square());
}

RationalEigenvalue eigenvalue(const Shape& shape, ModeIndex m) {
  return shape.is_rectangle() ? rect_eigenvalue(shape.length(), shape.height(), m)
                              : tri_eigenvalue(shape.length(), m);
}

RationalEigenvalue principal_eigenvalue(const Shape& shape) {
  return eigenvalue(shape, shape.is_rectangle() ? ModeIndex{1, 1} : ModeIndex{1, 2});
}

double rect_coefficient(double length, double height, ModeIndex m) {
  require_positive_mode(m);
  if (m.j % 2 == 0 || m.k % 2 == 0) return 0.0;
  return 8.0 * std::sqrt(length * height) / (kPi * kPi * m.j * m.k);
}

double tri_coefficient_paper(double leg, ModeIndex m) {
  require_triangle_mode(m);
  if ((m.j + m.k) % 2 == 0) return 0.0;
  return 4.0 * leg / (kPi * kPi * m.j * m.k);
}

double tri_coefficient_exact(double leg, ModeIndex m) {
  require_triangle_mode(m);
  const int j = m.j;
  const int k = m.k;
  // With u = x/L the integral is 2L * (1 + s) * J, s = (-1)^(j+k+1), where
  // J = int over {u,v >= 0, u+v <= 1} of sin(j pi u) sin(k pi v); the cross
  // term has the same integral by the u <-> v symmetry of the triangle.
  const int s = -parity_sign(j + k);
  if (s == -1) return 0.0;
  const double sin_integral = (1.0 - parity_sign(j)) / (j * kPi);
  const double sin_cos_integral =
      0.5 * ((1.0 - parity_sign(j + k)) / ((j + k) * kPi) +
             (1.0 - parity_sign(j - k)) / ((j - k) * kPi));
  const double inner = (sin_integral - parity_sign(k) * sin_cos_integral) / (k * kPi);
  return 4.0 * leg * inner;
}

double coefficient(const Shape& shape, ModeIndex m, CoefficientSource source) {
  if (shape.is_rectangle()) {
    return rect_coefficient(shape.length().value(), shape.height().value(), m);
  }
  return source == CoefficientSource::Paper ? tri_coefficient_paper(shape.length().value(), m)
                                            : tri_coefficient_exact(shape.length().value(), m);
}

double eigenfunction_value(const Shape& shape, ModeIndex m, double x, double y) {
  if (!shape.contains(x, y)) throw InvalidArgument("point lies outside the shape");
  const double l = shape.length().value();
  if (shape.is_rectangle()) {
    require_positive_mode(m);
    const double h = shape.height().value();
    return 2.0 / std::sqrt(l * h) * std::sin(m.j * kPi * x / l) * std::sin(m.k * kPi * y / h);
  }
  require_triangle_mode(m);
  const double s = -parity_sign(m.j + m.k);
  const double a = kPi / l;
  return 2.0 / l *
         (std::sin(m.j * a * x) * std::sin(m.k * a * y) +
          s * std::sin(m.k * a * x) * std::sin(m.j * a * y));
}

double eigenfunction_laplacian(const Shape& shape, ModeIndex m, double x, double y) {
  if (!shape.contains(x, y)) throw InvalidArgument("point lies outside the shape");
  const double l = shape.length().value();
  if (shape.is_rectangle()) {
    require_positive_mode(m);
    const double h = shape.height().value();
    const double wx = m.j * kPi / l;
    const double wy = m.k * kPi / h;
    const double c = 2.0 / std::sqrt(l * h);
    const double d2x = -c * wx * wx * std::sin(wx * x) * std::sin(wy * y);
    const double d2y = -c * wy * wy * std::sin(wx * x) * std::sin(wy * y);
    return d2x + d2y;
  }
  require_triangle_mode(m);
  const double s = -parity_sign(m.j + m.k);
  const double wj = m.j * kPi / l;
  const double wk = m.k * kPi / l;
  const double c = 2.0 / l;
  const double d2x = c * (-wj * wj * std::sin(wj * x) * std::sin(wk * y) -
                          s * wk * wk * std::sin(wk * x) * std::sin(wj * y));
  const double d2y = c * (-wk * wk * std::sin(wj * x) * std::sin(wk * y) -
                          s * wj * wj * std::sin(wk * x) * std::sin(wj * y));
  return d2x + d2y;
}

std::size_t SpectrumSlice::count() const {
  std::size_t n = 0;
  for (const auto& line : lines) n += static_cast<std::size_t>(line.multiplicity);
  return n;
}

SpectrumSlice enumerate_spectrum(const Region& region, const Rational& bound) {
  require_bound(bound);
  std::vector<RawMode> raw;
  for (std::size_t s = 0; s < region.size(); ++s) {
    sweep_modes(region[s], bound, [&](ModeIndex m, Rational q) {
      raw.push_back(RawMode{std::move(q), ModeTag{s, m}});
    });
  }
  std::sort(raw.begin(), raw.end(), [](const RawMode& a, const RawMode& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.tag < b.tag;
  });

  SpectrumSlice slice{bound, {}};
  for (auto& r : raw) {
    if (slice.lines.empty() || slice.lines.back().lambda.units_of_pi2() != r.q) {
      slice.lines.push_back(SpectrumLine{RationalEigenvalue(std::move(r.q)), 0, {}});
    }
    auto& line = slice.lines.back();
    ++line.multiplicity;
    line.modes.push_back(r.tag);
  }
  return slice;
}

IsospectralReport isospectral_check(const Region& a, const Region& b, const Rational& bound) {
  const SpectrumSlice sa = enumerate_spectrum(a, bound);
  const SpectrumSlice sb = enumerate_spectrum(b, bound);
  IsospectralReport report;
  report.count_a = sa.count();
  report.count_b = sb.count();

  std::size_t i = 0;
  std::size_t k = 0;
  while (i < sa.lines.size() || k < sb.lines.size()) {
    if (i == sa.lines.size()) {
      report.first_mismatch = sb.lines[k].lambda.units_of_pi2();
      break;
    }
    if (k == sb.lines.size()) {
      report.first_mismatch = sa.lines[i].lambda.units_of_pi2();
      break;
    }
    const auto& la = sa.lines[i];
    const auto& lb = sb.lines[k];
    if (la.lambda != lb.lambda) {
      report.first_mismatch = std::min(la.lambda, lb.lambda).units_of_pi2();
      break;
    }
    if (la.multiplicity != lb.multiplicity) {
      report.first_mismatch = la.lambda.units_of_pi2();
      break;
    }
    ++i;
    ++k;
  }
  report.equal = !report.first_mismatch.has_value();
  return report;
}

std::vector<WeightedMode> weighted_modes(const Region& region, const Rational& cutoff,
                                         CoefficientSource source) {
  require_bound(cutoff);
  std::vector<WeightedMode> modes;
  for (std::size_t s = 0; s < region.size(); ++s) {
    const Shape& shape = region[s];
    sweep_modes(shape, cutoff, [&](ModeIndex m, const Rational& q) {
      const double a = coefficient(shape, m, source);
      modes.push_back(WeightedMode{s, m, to_double(q) * kPi * kPi, a * a});
    });
  }
  return modes;
}

}  // namespace torsionlab
