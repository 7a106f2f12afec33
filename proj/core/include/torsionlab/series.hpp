#pragma once

namespace torsionlab {

/// A truncated series with a rigorous bound on the omitted tail.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms = 0;
};

enum class Kernel { Tanh, Coth };
enum class Parity { Odd, All };

/// sum_{j>=1} 1 / (1 + j^2 x^2) = -1/2 + pi coth(pi/x) / (2x).
double lorentz_sum_all(double x);

/// sum_{j odd} 1 / (1 + j^2 x^2) = (pi / 4x) tanh(pi / 2x).
double lorentz_sum_odd(double x);

/// Smallest coth argument accepted by hyper_sum.
inline constexpr double kMinCothTheta = 0.01;
/// Tail target used when hyper_sum picks its own term count.
inline constexpr double kDefaultTailTarget = 1e-15;

/// sum over k in `parity` of k^-5 kernel(k theta).
///
/// `terms` counts summed indices (k = 1..K, or the first K odd k). The tail
/// is bounded by cap / (4 (K-1)^4) with cap = 1 for tanh and coth(K theta)
/// for coth, since every omitted index exceeds K and both kernels are
/// monotone. With terms == 0 the smallest K meeting kDefaultTailTarget is used.
SeriesValue hyper_sum(Kernel kernel, Parity parity, double theta, int terms = 0);

/// Sums of F(j,k) = 1 / (j^2 k^2 (j^2 + k^2)) over the positive lattice:
/// every pair, both even, both odd, and mixed parity (all - even - odd).
struct LatticeSums {
  double all = 0.0;
  double even = 0.0;
  double odd = 0.0;
  double mixed = 0.0;
  double tail_bound = 0.0;
};

LatticeSums lattice_sum_components();

struct ZetaConstants {
  double zeta2 = 0.0;
  double zeta4 = 0.0;
  double zeta5 = 0.0;
  double zeta6 = 0.0;
  double zeta5_tail = 0.0;
  /// (1 - 2^-4)(1 - 2^-2) zeta(4) zeta(2) = pi^6 / 768.
  double z_rect = 0.0;
  /// pi^6 / 960.
  double z_tri = 0.0;
};

/// Closed forms for the even values, direct summation for zeta(5). Throws
/// NumericFailure if the product and combination identities for the two
/// constants disagree with their closed forms beyond 1e-15 relative.
const ZetaConstants& zeta_constants();

}  // namespace torsionlab
