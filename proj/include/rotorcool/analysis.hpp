// Batch parameter sweeps over the operating grids, model comparisons, the
// heat-per-area versus pressure metric, and Pareto design exploration.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotorcool/solver.hpp"

namespace rotorcool {

struct SweepSpec {
    std::vector<int> models;
    std::vector<double> speeds_rpm;
    std::vector<double> flows_lpm;
    std::vector<double> inlet_temps_c;
    double wall_temperature_c = 100.0;
    double ambient_temperature_c = 65.0;
    double free_convection_w_m2k = 10.0;
    int n_axial_segments = 200;
    bool calibrate = true;              // match tooth fill to the interface area
    bool allow_extended_ranges = false; // permit values outside the studied grids
};

struct SweepRow {
    int model_id = 0;
    double rpm = 0.0;
    double flow_lpm = 0.0;
    double inlet_temp_c = 0.0;
    double outlet_temp_c = 0.0;
    double heat_rate_w = 0.0;
    double max_pressure_pa = 0.0;
    double max_velocity_m_s = 0.0;
    double heat_per_area_w_m2 = 0.0;   // heat rate over the spec interface area
    double friction_pressure_pa = 0.0; // friction component (not in the CSV)
    bool converged = false;
};

enum class ExecutionPolicy { serial, parallel };

// Cartesian product of the sweep axes, solved row by row. Output order is
// lexicographic in (model, speed, flow, inlet temperature) regardless of the
// execution policy; the parallel path writes rows into preassigned slots so
// both policies produce identical bytes. Per-row failures are recorded in the
// row, never aborting the sweep.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const SolverConfig& cfg = {},
                                ExecutionPolicy policy = ExecutionPolicy::parallel,
                                const FluidPropertyTable& fluid = oil_table(),
                                const SolidPropertyTable& solid = steel_table());

// Serial reference implementation used for testing and benchmarking.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec,
                                       const SolverConfig& cfg = {},
                                       const FluidPropertyTable& fluid = oil_table(),
                                       const SolidPropertyTable& solid = steel_table());

struct GridPoint {
    double rpm = 0.0;
    double flow_lpm = 0.0;
    double inlet_temp_c = 0.0;
};

enum class RankMetric { heat_rate, heat_per_area, max_pressure, max_velocity };

// Models at the given grid point in descending metric order, ties broken by
// ascending model id. Throws when a requested model is missing at the point.
std::vector<int> rank_models(const std::vector<SweepRow>& rows,
                             const std::vector<int>& models, const GridPoint& at,
                             RankMetric metric = RankMetric::heat_rate);

// candidate heat rate / baseline heat rate at the point; empty when the
// baseline rate is zero.
std::optional<double> improvement_ratio(const std::vector<SweepRow>& rows,
                                        int candidate_model, int baseline_model,
                                        const GridPoint& at);

struct ParetoPoint {
    int tooth_channels = 0;
    double profile_depth_mm = 0.0;
    double fill_fraction = 0.0;
    double heat_per_area_w_m2 = 0.0;
    double max_pressure_pa = 0.0;
    bool dominated = false;
};

// Marks dominated points: another point with >= heat_per_area and <= pressure,
// strict in at least one coordinate.
void mark_dominated(std::vector<ParetoPoint>& points);

// The nondominated subset in stable input order.
std::vector<ParetoPoint> pareto_front(const std::vector<ParetoPoint>& points);

struct DesignScanResult {
    std::vector<ParetoPoint> points;
    std::vector<std::string> skipped;  // infeasible variants with the reason
};

// Builds geometry variants of the base model over tooth count, profile depth
// (1..6 mm) and fill fraction, solves each at the reference operating point
// and projects to (heat per contact area, max pressure). The denominator is
// the variant's own heated contact area since the catalogue interface areas
// only describe the unmodified shafts.
DesignScanResult design_scan(int base_model, const std::vector<int>& tooth_counts,
                             const std::vector<double>& depths_mm,
                             const std::vector<double>& fills,
                             const OperatingPoint& reference_op,
                             const SolverConfig& cfg = {},
                             int n_axial_segments = 200,
                             ExecutionPolicy policy = ExecutionPolicy::parallel,
                             const FluidPropertyTable& fluid = oil_table(),
                             const SolidPropertyTable& solid = steel_table());

// CSV with the fixed header
// model,rpm,flow_lpm,inlet_temp_c,outlet_temp_c,heat_rate_w,max_pressure_pa,
// max_velocity_m_s,heat_per_area_w_m2,converged
// 6-significant-digit values, LF line endings.
std::string to_csv(const std::vector<SweepRow>& rows);

// JSON summary: per-point model rankings by heat rate plus the model-3 over
// model-1 improvement ratios where both are present.
std::string summary_json(const std::vector<SweepRow>& rows);

std::string to_json(const std::vector<SweepRow>& rows);

}  // namespace rotorcool
