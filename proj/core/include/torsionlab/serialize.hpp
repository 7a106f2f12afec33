#pragma once

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "torsionlab/chapman.hpp"
#include "torsionlab/heat.hpp"
#include "torsionlab/oracle.hpp"
#include "torsionlab/series.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

using Json = nlohmann::ordered_json;

/// printf "%.{digits}g".
std::string format_number(double value, int digits);

/// Shortest decimal that parses back to the same double.
std::string format_roundtrip(double value);

inline constexpr int kHumanDigits = 7;

/// {"bound": "p/q", "lines": [{"lambda": "p/q", "mult": n, "modes": [[shape, j, k], ...]}]}
Json to_json(const SpectrumSlice& slice);

/// {"value": v, "tail": t, "terms": n}
Json to_json(const SeriesValue& series);

/// {"value": v, "method": m, "tail": t, "cutoff": "p/q" | null}
Json to_json(const TorsionResult& result);

/// {"isospectral", "bound", "torsion": {method: {"C1", "C2", "diff", "error"}},
///  "paper": {"eq8", "eq9_printed", "eq9_direct", "D", "bound"}, "verdict", "audit"}
Json to_json(const ChapmanReport& report);

/// Header "t,Q_a,Q_b,diff", values in round-trip form.
void write_heat_csv(std::ostream& out, const HeatComparison& cmp);
/// Header "t,Q_a".
void write_heat_csv(std::ostream& out, const HeatCurve& curve);

/// Header line "<shape literal> <N> <h>", then one text row of nx+1 values
/// per lattice row j = 0..ny, values in round-trip form.
void write_grid(std::ostream& out, const GridField& field);

}  // namespace torsionlab
