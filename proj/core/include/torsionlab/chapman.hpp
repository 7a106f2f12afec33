#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torsionlab/rational.hpp"

namespace torsionlab {

/// T(t1) - T(t2) for the two Chapman triangles, as the published
/// three-term expression 1/10 - 3/(4 pi^5) S_tanh - 24/pi^5 S_coth.
double eval_paper_eq8();

struct RectangleDifference {
  double printed = 0.0;      // -1/12 - 16/pi^5 sum_odd k^-5 (tanh(k pi/2) - tanh(k pi/4))
  double direct = 0.0;       // torsion_rect_closed(1,1) - torsion_rect_closed(2,1)
  double discrepancy = 0.0;  // |printed - direct|
  bool flagged = false;
};

/// T(r1) - T(r2) in its published form and from the rectangle closed form.
RectangleDifference eval_paper_eq9();

struct BoundChain {
  double coth_sum = 0.0;     // sum_odd k^-5 coth(k pi/2)
  double zeta5_bound = 0.0;  // (1 - 2^-5) zeta(5)
  double final_bound = 0.0;  // 1/60 - (24 / pi^5)(31/32)
  bool holds = false;
};

/// coth_sum > (31/32) zeta(5) > 31/32 and 1/60 - (24/pi^5)(31/32) < 0.
BoundChain proof_bound_chain();

enum class VerdictSign { Negative, Positive, Indeterminate };

std::string_view verdict_name(VerdictSign v);

struct MethodRow {
  double c1 = 0.0;
  double c2 = 0.0;
  double diff = 0.0;
  double error = 0.0;  // oracle: summed Richardson estimates; spectral: tail bounds
};

struct ChapmanReport {
  Rational isospectral_bound;
  bool isospectral = false;
  std::optional<Rational> first_mismatch;
  /// Ordered rows: closed-paper, spectral-paper, spectral-exact, oracle.
  std::vector<std::pair<std::string, MethodRow>> torsion_by_method;
  bool oracle_converged = false;
  double paper_eq8 = 0.0;
  double paper_eq9 = 0.0;         // printed form
  double paper_eq9_direct = 0.0;  // from the rectangle closed form
  double paper_D = 0.0;           // 1/60 minus the triangle and printed rectangle differences
  double paper_bound = 0.0;
  VerdictSign verdict_sign = VerdictSign::Indeterminate;
  std::vector<std::string> audit_notes;

  const MethodRow& row(std::string_view method) const;
};

/// Verdict rule: negative (positive) only when the oracle difference is below
/// (above) zero by more than its estimated error and the exact-coefficient
/// spectral difference has the same sign.
VerdictSign decide_verdict(const MethodRow& oracle, bool oracle_converged,
                           const MethodRow& spectral_exact);

/// Requires cutoff >= 100 and 1e-7 <= oracle_tol <= 1e-4.
ChapmanReport chapman_report(const Rational& cutoff, double oracle_tol);

}  // namespace torsionlab
