// JSON ingestion for solver configuration, operating points, sweep grids,
// geometry overrides and property-table overrides, plus atomic file output.
#pragma once

#include <string>

#include "rotorcool/analysis.hpp"
#include "rotorcool/geometry.hpp"
#include "rotorcool/properties.hpp"
#include "rotorcool/solver.hpp"

namespace rotorcool {

// Top-level config file; every section is optional.
struct FileConfig {
    SolverConfig solver;
    OperatingPoint operating_point;
    SweepSpec sweep;
    bool has_sweep = false;
    bool has_geometry = false;
    ShaftSpec geometry;           // preset(model) with overridden fields
    bool has_fluid_table = false;
    std::vector<FluidRow> fluid_rows;
};

FileConfig load_config_file(const std::string& path);

// Defaults of the solver configuration and operating point as pretty JSON,
// for golden-file capture via `config-show`.
std::string config_defaults_json();

// Writes via a temp file in the same directory and renames over the target.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace rotorcool
