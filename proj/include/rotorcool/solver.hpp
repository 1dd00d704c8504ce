// Steady-state 1-D marching solution of coolant temperature, pressure and
// velocity along a channel network under rotation: mass/energy balances with
// friction and Nusselt correlation closures and a centrifugal pressure term.
#pragma once

#include <vector>

#include "rotorcool/geometry.hpp"
#include "rotorcool/properties.hpp"

namespace rotorcool {

struct OperatingPoint {
    double rotational_speed_rpm = 0.0;
    double inlet_flow_lpm = 5.0;
    double inlet_temperature_c = 80.0;
    double wall_temperature_c = 100.0;
    double ambient_temperature_c = 65.0;
    double free_convection_w_m2k = 10.0;  // still-air coefficient on unheated walls
};

enum class PropertyEval { bulk, film };
enum class BlendMode { linear, step };

struct SolverConfig {
    // Rotation factors on the friction factor and the Nusselt number.
    double c_f = 0.1;
    double c_n = 0.5;
    double friction_rotation_exponent = 0.5;
    double nusselt_rotation_exponent = 0.4;
    // Laminar/turbulent transition band.
    double re_laminar = 2300.0;
    double re_turbulent = 4000.0;
    BlendMode blend = BlendMode::linear;
    PropertyEval property_eval = PropertyEval::bulk;
    bool constant_properties = false;  // freeze properties at the inlet temperature
    bool rotation_enabled = true;      // stub every rotation term to zero when false
    bool wall_conduction = true;       // casing conduction in series with the film
    double convergence_tol_c = 1e-6;
    int max_iterations = 100;
};

struct SegmentState {
    double bulk_temperature = 0.0;
    double gauge_pressure = 0.0;       // at the segment's upstream face, outlet = 0
    double axial_velocity = 0.0;
    double tangential_velocity = 0.0;
    double reynolds = 0.0;
    double rotational_reynolds = 0.0;
    double nusselt = 0.0;
    double heat_transfer_coefficient = 0.0;  // applied overall coefficient
    double heat_input = 0.0;                 // W, positive into the coolant
};

struct SolveResult {
    double outlet_temperature = 0.0;
    double total_heat_rate = 0.0;       // rho(T_in) * Q * cp(T_in) * (T_out - T_in)
    double max_gauge_pressure = 0.0;
    double max_velocity = 0.0;          // max over segments of |(axial, tangential)|
    // Pressure decomposition at the peak-pressure station and in total.
    double max_pressure_centrifugal_part = 0.0;
    double max_pressure_friction_part = 0.0;
    double friction_pressure_total = 0.0;  // sum of per-segment friction losses
    // Pumping work dissipated against friction, mdot * dp_friction / rho;
    // stands in for the churning loss that a full flow field would resolve.
    double friction_power_w = 0.0;
    std::vector<SegmentState> per_segment;
    int iterations = 0;
    bool converged = false;
};

// v_t = omega * r.
double tangential_velocity(double omega, double radius);

// Radial integral of the centrifugal body force: rho * omega^2 * (r2^2 - r1^2) / 2.
// Pressure rise for outward flow; the caller negates for inward flow.
double centrifugal_delta_p(double density, double omega, double r1, double r2);

// Rotating-duct group rho * omega * D_h^2 / mu.
double rotational_reynolds(double density, double omega, double hydraulic_diameter,
                           double dynamic_viscosity);

// Darcy friction factor: 64/Re laminar, Blasius turbulent, linear blend in the
// transition band, multiplied by (1 + c_f * Re_rot / Re)^0.5.
double friction_factor(double re, double re_rot, const SolverConfig& cfg = {});

// Nusselt number: 3.66 laminar (constant wall temperature), Dittus-Boelter
// turbulent, linear blend, multiplied by the rotation augmentation
// (1 + c_n * Re_rot / re_laminar)^0.4. The augmentation is normalised by the
// laminar transition bound and is therefore independent of through-flow.
double nusselt(double re, double pr, double re_rot, const SolverConfig& cfg = {});

// P = rho * Q * cp * (T_out - T_in).
double heat_transfer_rate(double density, double volume_flow, double specific_heat,
                          double t_out, double t_in);

SolveResult march(const ChannelNetwork& network, const OperatingPoint& op,
                  const SolverConfig& cfg = {},
                  const FluidPropertyTable& fluid = oil_table(),
                  const SolidPropertyTable& solid = steel_table());

struct ConvergenceRow {
    int n_segments = 0;
    double outlet_temperature = 0.0;
    double max_gauge_pressure = 0.0;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    std::vector<double> outlet_temperature_diffs;   // |T(n_k+1) - T(n_k)|
    std::vector<double> max_pressure_diffs;
};

// Refinement study over ascending segment counts. Runs with a tightened
// temperature fixed-point tolerance (1e-12) so iteration residue does not
// mask the discretisation differences being measured.
ConvergenceTable grid_convergence(const ShaftSpec& spec, const OperatingPoint& op,
                                  const std::vector<int>& counts,
                                  const SolverConfig& cfg = {},
                                  const FluidPropertyTable& fluid = oil_table(),
                                  const SolidPropertyTable& solid = steel_table());

}  // namespace rotorcool
