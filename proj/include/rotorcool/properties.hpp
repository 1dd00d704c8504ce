// Temperature-dependent coolant (ATF oil) and shaft-steel (20MnCr5) property
// tables with piecewise-linear point evaluation.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rotorcool {

// One row of the oil property table. Units follow the data sheet:
// temperature in deg C, density kg/m^3, kinematic viscosity m^2/s,
// specific heat J/(kg K), thermal conductivity W/(m K), dynamic viscosity Pa s.
struct FluidRow {
    double temperature_c;
    double density;
    double kinematic_viscosity;
    double specific_heat;
    double thermal_conductivity;
    double dynamic_viscosity;
};

// Interpolated fluid state at a bulk temperature.
struct FluidState {
    double temperature_c;
    double density;
    double kinematic_viscosity;
    double specific_heat;
    double thermal_conductivity;
    double dynamic_viscosity;
    double prandtl;   // mu * cp / k
    bool clamped;     // true when the query temperature fell outside the table
};

// Ordered, validated oil property table. Immutable after construction; all
// evaluations are pure and safe for concurrent use.
class FluidPropertyTable {
public:
    explicit FluidPropertyTable(std::vector<FluidRow> rows);

    const std::vector<FluidRow>& rows() const { return rows_; }
    double min_temperature() const { return rows_.front().temperature_c; }
    double max_temperature() const { return rows_.back().temperature_c; }

private:
    std::vector<FluidRow> rows_;
};

struct SolidRow {
    double temperature_c;
    double density;                 // kg/m^3
    double thermal_conductivity;    // W/(m K)
    double thermal_diffusivity;     // 1e-6 m^2/s (stored, unused by the solver)
    double electrical_resistance;   // uOhm m   (stored, unused by the solver)
    double specific_heat;           // kJ/(kg K)
};

struct SolidState {
    double thermal_conductivity;    // W/(m K)
    double density;                 // kg/m^3
    double specific_heat;           // kJ/(kg K)
};

class SolidPropertyTable {
public:
    explicit SolidPropertyTable(std::vector<SolidRow> rows);
    const std::vector<SolidRow>& rows() const { return rows_; }

private:
    std::vector<SolidRow> rows_;
};

// Built-in tables. The oil is Fuchs FES 821-6436A ATF, the steel is 20MnCr5.
const FluidPropertyTable& oil_table();
const SolidPropertyTable& steel_table();

// Piecewise-linear evaluation, clamped to the boundary rows outside the
// tabulated range (linear extrapolation of viscosity can go negative).
FluidState fluid_at(const FluidPropertyTable& table, double temperature_c);
SolidState solid_at(const SolidPropertyTable& table, double temperature_c);

// Self-validation of the oil table transcription: per-row relative
// |mu - rho*nu| / mu discrepancy.
struct ConsistencyReport {
    double max_relative_discrepancy = 0.0;
    std::vector<std::size_t> offending_rows;  // rows exceeding the threshold
    bool pass = true;
};

ConsistencyReport consistency_check(const FluidPropertyTable& table,
                                    double threshold = 0.005);

}  // namespace rotorcool
