#pragma once

// Machine-readable outputs: probability curves as CSV, run summaries and
// partitions as JSON, the third-order census as CSV.

#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "json.hpp"
#include "kronwalk/analysis.hpp"
#include "kronwalk/reducer.hpp"
#include "kronwalk/walk.hpp"

namespace kronwalk {

/// Header "t,probability", one row per sample, 15 significant digits.
void write_series_csv(std::ostream& out, const SimulationResult& result);

/// {"M", "j", "N", "gamma", "gamma_formula", "mode", "peak_time",
///  "peak_probability", "peak_interior", "predicted_time"}
nlohmann::json summary_json(const SimulationResult& result, std::uint32_t m, std::uint32_t order,
                            std::string_view gamma_formula, std::string_view mode);

/// {"cells": [[v, ...], ...], "sizes": [...]}
nlohmann::json partition_json(const Partition& p);

nlohmann::json reduced_json(const ReducedHamiltonian& h);

/// Columns class,count,mutual_neighbors.
void write_census_csv(std::ostream& out, const Census& census);

nlohmann::json perturbation_json(const PerturbationReport& r);

}  // namespace kronwalk
