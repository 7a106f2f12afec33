#include "torsionlab/chapman.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "torsionlab/error.hpp"
#include "torsionlab/geometry.hpp"
#include "torsionlab/oracle.hpp"
#include "torsionlab/parallel.hpp"
#include "torsionlab/series.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

namespace {

constexpr double kPi = std::numbers::pi;

double pi5() {
  const double p2 = kPi * kPi;
  return p2 * p2 * kPi;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

MethodRow make_row(double c1, double c2, double error) { return MethodRow{c1, c2, c1 - c2, error}; }

}  // namespace

double eval_paper_eq8() {
  const double tanh_all = hyper_sum(Kernel::Tanh, Parity::All, kPi).value;
  const double coth_odd = hyper_sum(Kernel::Coth, Parity::Odd, kPi / 2.0).value;
  return 0.1 - 3.0 / (4.0 * pi5()) * tanh_all - 24.0 / pi5() * coth_odd;
}

RectangleDifference eval_paper_eq9() {
  const double half = hyper_sum(Kernel::Tanh, Parity::Odd, kPi / 2.0).value;
  const double quarter = hyper_sum(Kernel::Tanh, Parity::Odd, kPi / 4.0).value;
  RectangleDifference d;
  d.printed = -1.0 / 12.0 - 16.0 / pi5() * (half - quarter);
  d.direct = torsion_rect_closed(1.0, 1.0).value - torsion_rect_closed(2.0, 1.0).value;
  d.discrepancy = std::abs(d.printed - d.direct);
  d.flagged = d.discrepancy > 1e-10;
  return d;
}

BoundChain proof_bound_chain() {
  BoundChain chain;
  chain.coth_sum = hyper_sum(Kernel::Coth, Parity::Odd, kPi / 2.0).value;
  chain.zeta5_bound = (1.0 - 1.0 / 32.0) * zeta_constants().zeta5;
  chain.final_bound = 1.0 / 60.0 - 24.0 / pi5() * (31.0 / 32.0);
  chain.holds = chain.coth_sum > chain.zeta5_bound && chain.zeta5_bound > 31.0 / 32.0 &&
                chain.final_bound < 0.0;
  return chain;
}

std::string_view verdict_name(VerdictSign v) {
  switch (v) {
    case VerdictSign::Negative: return "negative";
    case VerdictSign::Positive: return "positive";
    case VerdictSign::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

const MethodRow& ChapmanReport::row(std::string_view method) const {
  for (const auto& [name, r] : torsion_by_method) {
    if (name == method) return r;
  }
  throw InvalidArgument("no torsion row named '" + std::string(method) + "'");
}

VerdictSign decide_verdict(const MethodRow& oracle, bool oracle_converged,
                           const MethodRow& spectral_exact) {
  if (!oracle_converged) return VerdictSign::Indeterminate;
  if (oracle.diff < -oracle.error && spectral_exact.diff < 0.0) return VerdictSign::Negative;
  if (oracle.diff > oracle.error && spectral_exact.diff > 0.0) return VerdictSign::Positive;
  return VerdictSign::Indeterminate;
}

ChapmanReport chapman_report(const Rational& cutoff, double oracle_tol) {
  if (cutoff < 100) throw InvalidArgument("chapman_report requires cutoff >= 100");
  if (!(oracle_tol <= 1e-4 && oracle_tol >= 1e-7)) {
    throw InvalidArgument("chapman_report requires 1e-7 <= oracle tolerance <= 1e-4");
  }
  const auto [c1, c2] = chapman_pair();
  ChapmanReport report;
  report.isospectral_bound = cutoff;
  const IsospectralReport iso = isospectral_check(c1, c2, cutoff);
  report.isospectral = iso.equal;
  report.first_mismatch = iso.first_mismatch;

  const RegionTorsion closed1 = torsion_region_closed(c1);
  const RegionTorsion closed2 = torsion_region_closed(c2);
  const TorsionResult sp_paper1 = torsion_spectral(c1, cutoff, CoefficientSource::Paper);
  const TorsionResult sp_paper2 = torsion_spectral(c2, cutoff, CoefficientSource::Paper);
  const TorsionResult sp_exact1 = torsion_spectral(c1, cutoff, CoefficientSource::Exact);
  const TorsionResult sp_exact2 = torsion_spectral(c2, cutoff, CoefficientSource::Exact);

  // Oracle solves for the four component shapes: C1 = {0, 1}, C2 = {2, 3}.
  const std::array<Shape, 4> shapes{c1[0], c1[1], c2[0], c2[1]};
  std::array<OracleResult, 4> oracle{};
  std::array<std::string, 4> oracle_error{};
  parallel_for(shapes.size(), [&](std::size_t i) {
    try {
      oracle[i] = torsion_oracle(shapes[i], oracle_tol);
    } catch (const NumericFailure& e) {
      oracle_error[i] = e.what();
    }
  });
  report.oracle_converged = true;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (!oracle_error[i].empty() || !oracle[i].converged) {
      report.oracle_converged = false;
      report.audit_notes.push_back("oracle did not converge for " + shapes[i].literal() +
                                   (oracle_error[i].empty() ? "" : ": " + oracle_error[i]));
    }
  }

  report.torsion_by_method = {
      {"closed-paper", make_row(closed1.value, closed2.value, closed1.tail_bound + closed2.tail_bound)},
      {"spectral-paper",
       make_row(sp_paper1.value, sp_paper2.value, sp_paper1.tail_bound + sp_paper2.tail_bound)},
      {"spectral-exact",
       make_row(sp_exact1.value, sp_exact2.value, sp_exact1.tail_bound + sp_exact2.tail_bound)},
      {"oracle", make_row(oracle[0].value + oracle[1].value, oracle[2].value + oracle[3].value,
                          oracle[0].estimated_error + oracle[1].estimated_error +
                              oracle[2].estimated_error + oracle[3].estimated_error)},
  };

  report.paper_eq8 = eval_paper_eq8();
  const RectangleDifference eq9 = eval_paper_eq9();
  report.paper_eq9 = eq9.printed;
  report.paper_eq9_direct = eq9.direct;
  report.paper_D = 1.0 / 60.0 - (report.paper_eq8 + report.paper_eq9);
  const BoundChain chain = proof_bound_chain();
  report.paper_bound = chain.final_bound;

  report.verdict_sign =
      decide_verdict(report.row("oracle"), report.oracle_converged, report.row("spectral-exact"));

  // Audit trail: published expressions next to the independent evaluations.
  const double a_pub = tri_coefficient_paper(1.0, {1, 2});
  const double a_int = tri_coefficient_exact(1.0, {1, 2});
  report.audit_notes.push_back(
      fmt("triangle coefficient a(1,2), leg 1: published formula %.10g, integral of the "
          "normalized eigenfunction %.10g",
          a_pub, a_int));
  const double t_pub = torsion_tri_closed_paper(1.0).value;
  const double t_orc = oracle[1].value / 16.0;
  const double t_spec = torsion_spectral(Region(Shape::triangle(1.0)), cutoff,
                                         CoefficientSource::Exact).value;
  report.audit_notes.push_back(
      fmt("triangle torsion T(tri(1)): published closed form %.10g, finite-difference oracle "
          "%.10g, exact-coefficient spectral sum %.10g",
          t_pub, t_orc, t_spec));
  const double eq8_consistency = std::abs(report.paper_eq8 - 12.0 * t_pub);
  if (eq8_consistency > 1e-12) {
    report.audit_notes.push_back(
        fmt("triangle difference expression disagrees with 12 T_pub(tri(1)) by %.3g",
            eq8_consistency));
  }
  if (eq9.flagged) {
    report.audit_notes.push_back(
        fmt("rectangle difference T(r1)-T(r2): printed form %.10g, rectangle closed form %.10g, "
            "discrepancy %.4g",
            eq9.printed, eq9.direct, eq9.discrepancy));
  }
  report.audit_notes.push_back(
      fmt("published-path difference 1/60 - D = %.10g; oracle difference %.10g; "
          "exact spectral difference %.10g",
          1.0 / 60.0 - report.paper_D, report.row("oracle").diff,
          report.row("spectral-exact").diff));
  report.audit_notes.push_back(
      fmt("bound chain: coth sum %.10g > (31/32) zeta(5) = %.10g; 1/60 - (24/pi^5)(31/32) = %.10g",
          chain.coth_sum, chain.zeta5_bound, chain.final_bound));
  if (!report.isospectral) {
    report.audit_notes.push_back("spectra differ below the bound at " +
                                 format_rational(*report.first_mismatch) + " pi^2");
  }
  return report;
}

}  // namespace torsionlab
