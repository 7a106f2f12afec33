#include "torsionlab/serialize.hpp"

#include <charconv>
#include <cstdio>

namespace torsionlab {

std::string format_number(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string format_roundtrip(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

Json to_json(const SpectrumSlice& slice) {
  Json lines = Json::array();
  for (const auto& line : slice.lines) {
    Json modes = Json::array();
    for (const auto& tag : line.modes) modes.push_back({tag.shape, tag.mode.j, tag.mode.k});
    lines.push_back({{"lambda", format_rational(line.lambda.units_of_pi2())},
                     {"mult", line.multiplicity},
                     {"modes", std::move(modes)}});
  }
  return Json{{"bound", format_rational(slice.bound)}, {"lines", std::move(lines)}};
}

Json to_json(const SeriesValue& series) {
  return Json{{"value", series.value}, {"tail", series.tail_bound}, {"terms", series.terms}};
}

Json to_json(const TorsionResult& result) {
  Json j{{"value", result.value},
         {"method", std::string(method_name(result.method))},
         {"tail", result.tail_bound},
         {"cutoff", nullptr}};
  if (result.cutoff) j["cutoff"] = format_rational(*result.cutoff);
  return j;
}

Json to_json(const ChapmanReport& report) {
  Json torsion = Json::object();
  for (const auto& [name, row] : report.torsion_by_method) {
    torsion[name] = {{"C1", row.c1}, {"C2", row.c2}, {"diff", row.diff}, {"error", row.error}};
  }
  Json audit = Json::array();
  for (const auto& note : report.audit_notes) audit.push_back(note);
  return Json{{"isospectral", report.isospectral},
              {"bound", format_rational(report.isospectral_bound)},
              {"torsion", std::move(torsion)},
              {"paper",
               {{"eq8", report.paper_eq8},
                {"eq9_printed", report.paper_eq9},
                {"eq9_direct", report.paper_eq9_direct},
                {"D", report.paper_D},
                {"bound", report.paper_bound}}},
              {"verdict", std::string(verdict_name(report.verdict_sign))},
              {"audit", std::move(audit)}};
}

void write_heat_csv(std::ostream& out, const HeatComparison& cmp) {
  out << "t,Q_a,Q_b,diff\n";
  for (std::size_t i = 0; i < cmp.a.times.size(); ++i) {
    out << format_roundtrip(cmp.a.times[i]) << ','
        << format_roundtrip(cmp.a.values[i]) << ','
        << format_roundtrip(cmp.b.values[i]) << ','
        << format_roundtrip(cmp.difference[i]) << '\n';
  }
}

void write_heat_csv(std::ostream& out, const HeatCurve& curve) {
  out << "t,Q_a\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    out << format_roundtrip(curve.times[i]) << ','
        << format_roundtrip(curve.values[i]) << '\n';
  }
}

void write_grid(std::ostream& out, const GridField& field) {
  out << field.shape.literal() << ' ' << field.N << ' '
      << format_roundtrip(field.hx) << '\n';
  for (int j = 0; j <= field.ny; ++j) {
    for (int i = 0; i <= field.nx; ++i) {
      if (i > 0) out << ' ';
      out << format_roundtrip(field.at(i, j));
    }
    out << '\n';
  }
}

}  // namespace torsionlab
