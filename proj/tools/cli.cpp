#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "torsionlab/chapman.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/geometry.hpp"
#include "torsionlab/heat.hpp"
#include "torsionlab/oracle.hpp"
#include "torsionlab/serialize.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab::cli {

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::vector<std::string> regions;
  std::string cutoff = "2000";
  std::string bound;
  int grid = 256;
  double tolerance = 1e-5;
  std::string method = "closed";
  std::string coeff = "exact";
  std::string times;
  std::string dump;
  Format format = Format::Text;
  std::string output;
};

/// Oracle exhaustion maps to the numeric-failure exit code.
struct OracleExhausted : NumericFailure {
  using NumericFailure::NumericFailure;
};

std::string num(double v, Format f) {
  return f == Format::Text ? format_number(v, kHumanDigits) : format_roundtrip(v);
}

CoefficientSource coeff_source(const std::string& s) {
  return s == "paper" ? CoefficientSource::Paper : CoefficientSource::Exact;
}

Rational positive_rational(const std::string& text, const char* what) {
  const Rational q = parse_rational(text);
  if (q <= 0) throw InvalidArgument(std::string(what) + " must be positive");
  return q;
}

std::vector<double> parse_times(const std::string& text) {
  std::vector<double> times;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      times.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed time '" + item + "'");
    }
  }
  if (times.empty()) throw InvalidArgument("--times needs at least one value");
  return times;
}

// ------------------------------------------------------------ subcommands

void cmd_torsion(const RunConfig& cfg, std::ostream& out) {
  const Region region = parse_region(cfg.regions.at(0));
  const Format f = cfg.format;
  std::vector<TorsionResult> parts;
  TorsionResult total;
  std::string method_label = cfg.method;

  if (cfg.method == "closed") {
    const RegionTorsion rt = torsion_region_closed(region);
    parts = rt.components;
    total.value = rt.value;
    total.tail_bound = rt.tail_bound;
    total.method = parts.front().method;
    if (region.size() == 1) method_label = std::string(method_name(total.method));
  } else if (cfg.method == "spectral") {
    total = torsion_spectral(region, positive_rational(cfg.cutoff, "--cutoff"),
                             coeff_source(cfg.coeff));
    method_label = "spectral";
  } else if (cfg.method == "oracle" || cfg.method == "fdm") {
    total.method = TorsionMethod::Oracle;
    for (const auto& shape : region.components()) {
      TorsionResult part;
      part.method = TorsionMethod::Oracle;
      if (cfg.method == "oracle") {
        const OracleResult o = torsion_oracle(shape, cfg.tolerance);
        if (!o.converged) {
          throw OracleExhausted("oracle did not converge for " + shape.literal() +
                                " (best estimate " + num(o.value, Format::Json) + ")");
        }
        part.value = o.value;
        part.tail_bound = o.estimated_error;
      } else {
        const GridField field = poisson_solve(shape, cfg.grid);
        part.value = torsion_fdm(field);
        if (!cfg.dump.empty()) {
          if (region.size() != 1) throw InvalidArgument("--dump needs a single-shape region");
          std::ofstream dump(cfg.dump);
          if (!dump) throw InvalidArgument("cannot open dump file '" + cfg.dump + "'");
          write_grid(dump, field);
        }
      }
      total.value += part.value;
      total.tail_bound += part.tail_bound;
      parts.push_back(part);
    }
  } else {
    throw InvalidArgument("unknown method '" + cfg.method + "'");
  }

  if (f == Format::Json) {
    Json j{{"region", region.literal()}};
    const Json fields = to_json(total);
    for (const auto& [key, value] : fields.items()) j[key] = value;
    j["method"] = method_label;
    Json comps = Json::array();
    for (const auto& p : parts) comps.push_back(to_json(p));
    if (!parts.empty()) j["components"] = std::move(comps);
    out << j.dump(2) << '\n';
  } else if (f == Format::Csv) {
    out << "region,method,value,tail\n"
        << region.literal() << ',' << method_label << ',' << num(total.value, f) << ','
        << num(total.tail_bound, f) << '\n';
  } else {
    out << "T(" << region.literal() << ") = " << num(total.value, f) << "  [" << method_label;
    if (cfg.method == "spectral") out << ", coeff " << cfg.coeff << ", cutoff " << cfg.cutoff;
    if (cfg.method == "fdm") out << ", N " << cfg.grid;
    out << "]\n";
    if (total.tail_bound > 0.0) out << "  tail/error bound " << num(total.tail_bound, f) << '\n';
  }
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Region region = parse_region(cfg.regions.at(0));
  const SpectrumSlice slice = enumerate_spectrum(region, positive_rational(cfg.bound, "--bound"));
  if (cfg.format == Format::Json) {
    out << to_json(slice).dump(2) << '\n';
    return;
  }
  if (cfg.format == Format::Csv) {
    out << "lambda_over_pi2,mult\n";
    for (const auto& line : slice.lines) {
      out << format_rational(line.lambda.units_of_pi2()) << ',' << line.multiplicity << '\n';
    }
    return;
  }
  out << "spectrum of " << region.literal() << " up to " << format_rational(slice.bound)
      << " pi^2: " << slice.count() << " eigenvalues\n";
  for (const auto& line : slice.lines) {
    out << "  " << format_rational(line.lambda.units_of_pi2()) << " pi^2  x" << line.multiplicity
        << "  ";
    for (const auto& tag : line.modes) {
      out << " [" << tag.shape << ":" << tag.mode.j << "," << tag.mode.k << "]";
    }
    out << '\n';
  }
}

void cmd_isospectral(const RunConfig& cfg, std::ostream& out) {
  const Region a = parse_region(cfg.regions.at(0));
  const Region b = parse_region(cfg.regions.at(1));
  const Rational bound = positive_rational(cfg.bound, "--bound");
  const IsospectralReport rep = isospectral_check(a, b, bound);
  if (cfg.format == Format::Json) {
    Json j{{"isospectral", rep.equal},
           {"bound", format_rational(bound)},
           {"first_mismatch", nullptr},
           {"count_a", rep.count_a},
           {"count_b", rep.count_b}};
    if (rep.first_mismatch) j["first_mismatch"] = format_rational(*rep.first_mismatch);
    out << j.dump(2) << '\n';
    return;
  }
  out << "isospectral: " << (rep.equal ? "true" : "false");
  if (rep.first_mismatch) out << " (first mismatch " << format_rational(*rep.first_mismatch) << " pi^2)";
  out << '\n';
  if (cfg.format == Format::Text) {
    out << "eigenvalues up to " << format_rational(bound) << " pi^2: " << rep.count_a << " vs "
        << rep.count_b << '\n';
  }
}

void print_chapman_text(const ChapmanReport& r, std::ostream& out, bool audit_only) {
  const Format f = Format::Text;
  if (!audit_only) {
    out << "isospectral up to " << format_rational(r.isospectral_bound)
        << " pi^2: " << (r.isospectral ? "true" : "false") << '\n';
    out << "torsion            T(C1)        T(C2)        diff\n";
    for (const auto& [name, row] : r.torsion_by_method) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-15s %-12s %-12s %s\n", name.c_str(),
                    num(row.c1, f).c_str(), num(row.c2, f).c_str(), num(row.diff, f).c_str());
      out << line;
    }
    out << "verdict: T(C1) - T(C2) is " << verdict_name(r.verdict_sign) << '\n';
  }
  out << "published expressions:\n"
      << "  triangle difference  " << num(r.paper_eq8, f) << '\n'
      << "  rectangle difference " << num(r.paper_eq9, f) << " (closed form "
      << num(r.paper_eq9_direct, f) << ")\n"
      << "  D                    " << num(r.paper_D, f) << '\n'
      << "  final bound          " << num(r.paper_bound, f) << '\n';
  out << "audit:\n";
  for (const auto& note : r.audit_notes) out << "  - " << note << '\n';
}

void cmd_chapman(const RunConfig& cfg, std::ostream& out, bool audit_only) {
  const ChapmanReport r = chapman_report(positive_rational(cfg.cutoff, "--cutoff"), cfg.tolerance);
  if (cfg.format == Format::Json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    print_chapman_text(r, out, audit_only);
  }
  if (!r.oracle_converged) throw OracleExhausted("oracle did not converge");
}

void cmd_heat(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> times = parse_times(cfg.times);
  const Rational cutoff = positive_rational(cfg.cutoff, "--cutoff");
  const CoefficientSource src = coeff_source(cfg.coeff);
  const Region a = parse_region(cfg.regions.at(0));
  const Format f = cfg.format;

  if (cfg.regions.size() == 1) {
    const HeatCurve curve = heat_curve(a, times, cutoff, src);
    if (f == Format::Csv) {
      write_heat_csv(out, curve);
    } else if (f == Format::Json) {
      out << Json{{"region", a.literal()}, {"t", curve.times}, {"Q", curve.values}}.dump(2) << '\n';
    } else {
      out << "heat content of " << a.literal() << '\n';
      for (std::size_t i = 0; i < times.size(); ++i) {
        out << "  t=" << num(times[i], f) << "  Q=" << num(curve.values[i], f) << '\n';
      }
    }
    return;
  }

  const Region b = parse_region(cfg.regions.at(1));
  const HeatComparison cmp = heat_difference_curve(a, b, times, cutoff, src);
  if (f == Format::Csv) {
    write_heat_csv(out, cmp);
  } else if (f == Format::Json) {
    out << Json{{"a", a.literal()},
                {"b", b.literal()},
                {"t", times},
                {"Q_a", cmp.a.values},
                {"Q_b", cmp.b.values},
                {"diff", cmp.difference},
                {"truncation", cmp.truncation}}
               .dump(2)
        << '\n';
  } else {
    out << "heat content " << a.literal() << " vs " << b.literal() << '\n';
    for (std::size_t i = 0; i < times.size(); ++i) {
      out << "  t=" << num(times[i], f) << "  Q_a=" << num(cmp.a.values[i], f)
          << "  Q_b=" << num(cmp.b.values[i], f) << "  diff=" << num(cmp.difference[i], f)
          << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsional rigidity, Dirichlet spectra and heat content of rectangles, right "
               "isosceles triangles and their disjoint unions"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");
  };
  const std::vector<std::string> method_names{"closed", "spectral", "oracle", "fdm"};
  const std::vector<std::string> coeff_names{"paper", "exact"};

  auto* torsion = app.add_subcommand("torsion", "Torsional rigidity of a region");
  torsion->add_option("region", cfg.regions, "Region literal, e.g. square:1+tri:2")
      ->required()
      ->expected(1);
  torsion->add_option("--method", cfg.method, "closed, spectral, oracle or fdm")
      ->check(CLI::IsMember(method_names));
  torsion->add_option("--coeff", cfg.coeff, "Triangle coefficients: paper or exact")
      ->check(CLI::IsMember(coeff_names));
  torsion->add_option("--cutoff", cfg.cutoff, "Spectral cutoff in units of pi^2 (p or p/q)");
  torsion->add_option("--N", cfg.grid, "Grid cells along the shorter side (fdm)")
      ->check(CLI::Range(8, 8192));
  torsion->add_option("--tol", cfg.tolerance, "Oracle tolerance");
  torsion->add_option("--dump", cfg.dump, "Write the fdm grid field to this file");
  add_common(torsion);

  auto* spectrum = app.add_subcommand("spectrum", "Exact Dirichlet spectrum up to a bound");
  spectrum->add_option("region", cfg.regions, "Region literal")->required()->expected(1);
  spectrum->add_option("--bound", cfg.bound, "Bound in units of pi^2 (p or p/q)")->required();
  add_common(spectrum);

  auto* iso = app.add_subcommand("isospectral", "Exact isospectrality check of two regions");
  iso->add_option("regions", cfg.regions, "Two region literals")->required()->expected(2);
  iso->add_option("--bound", cfg.bound, "Bound in units of pi^2 (p or p/q)")->required();
  add_common(iso);

  auto* chapman = app.add_subcommand("chapman", "Full report for the Chapman pair");
  chapman->add_option("--cutoff", cfg.cutoff, "Spectral cutoff and isospectrality bound");
  chapman->add_option("--tol", cfg.tolerance, "Oracle tolerance");
  add_common(chapman);

  auto* heat = app.add_subcommand("heat", "Spectral heat content of one or two regions");
  heat->add_option("regions", cfg.regions, "One or two region literals")
      ->required()
      ->expected(1, 2);
  heat->add_option("--times", cfg.times, "Comma-separated ascending times")->required();
  heat->add_option("--cutoff", cfg.cutoff, "Spectral cutoff in units of pi^2");
  heat->add_option("--coeff", cfg.coeff, "Triangle coefficients: paper or exact")
      ->check(CLI::IsMember(coeff_names));
  add_common(heat);

  auto* audit = app.add_subcommand("audit", "Published expressions next to independent values");
  audit->add_option("--cutoff", cfg.cutoff, "Spectral cutoff");
  audit->add_option("--tol", cfg.tolerance, "Oracle tolerance");
  add_common(audit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  try {
    if (torsion->parsed()) cmd_torsion(cfg, buffer);
    if (spectrum->parsed()) cmd_spectrum(cfg, buffer);
    if (iso->parsed()) cmd_isospectral(cfg, buffer);
    if (chapman->parsed()) cmd_chapman(cfg, buffer, false);
    if (heat->parsed()) cmd_heat(cfg, buffer);
    if (audit->parsed()) cmd_chapman(cfg, buffer, true);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericFailure& e) {
    // Partial output (for example a report with a failed oracle) is still emitted.
    out << buffer.str();
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot open output file '" << cfg.output << "'\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return kOk;
}

}  // namespace torsionlab::cli
