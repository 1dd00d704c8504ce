#include "rotorcool/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rotorcool {

namespace {

constexpr double kRpmToRadS = 2.0 * std::numbers::pi / 60.0;
constexpr double kLpmToM3s = 1.0 / 60000.0;

double base_friction(double re, const SolverConfig& cfg) {
    const double f_lam = 64.0 / re;
    const double f_turb = 0.316 * std::pow(re, -0.25);
    if (re <= cfg.re_laminar) return f_lam;
    if (re >= cfg.re_turbulent) return f_turb;
    if (cfg.blend == BlendMode::step)
        return re < 0.5 * (cfg.re_laminar + cfg.re_turbulent)
                   ? 64.0 / cfg.re_laminar
                   : 0.316 * std::pow(cfg.re_turbulent, -0.25);
    const double w = (re - cfg.re_laminar) / (cfg.re_turbulent - cfg.re_laminar);
    const double a = 64.0 / cfg.re_laminar;
    const double b = 0.316 * std::pow(cfg.re_turbulent, -0.25);
    return a + w * (b - a);
}

double base_nusselt(double re, double pr, const SolverConfig& cfg) {
    const double nu_lam = 3.66;  // constant-wall-temperature duct
    const double nu_turb = 0.023 * std::pow(re, 0.8) * std::pow(pr, 0.4);
    if (re <= cfg.re_laminar) return nu_lam;
    if (re >= cfg.re_turbulent) return nu_turb;
    if (cfg.blend == BlendMode::step)
        return re < 0.5 * (cfg.re_laminar + cfg.re_turbulent)
                   ? nu_lam
                   : 0.023 * std::pow(cfg.re_turbulent, 0.8) * std::pow(pr, 0.4);
    const double w = (re - cfg.re_laminar) / (cfg.re_turbulent - cfg.re_laminar);
    const double b = 0.023 * std::pow(cfg.re_turbulent, 0.8) * std::pow(pr, 0.4);
    return nu_lam + w * (b - nu_lam);
}

void check_operating_point(const OperatingPoint& op) {
    if (op.inlet_flow_lpm <= 0.0)
        throw std::invalid_argument("OperatingPoint: inlet flow must be positive");
    if (op.rotational_speed_rpm < 0.0)
        throw std::invalid_argument("OperatingPoint: rotational speed must be >= 0");
    if (op.inlet_temperature_c >= op.wall_temperature_c)
        throw std::invalid_argument(
            "OperatingPoint: inlet temperature must be below the wall temperature");
    if (op.free_convection_w_m2k < 0.0)
        throw std::invalid_argument("OperatingPoint: free convection coefficient < 0");
}

}  // namespace

double tangential_velocity(double omega, double radius) {
    if (omega < 0.0 || radius < 0.0)
        throw std::invalid_argument("tangential_velocity: omega and r must be >= 0");
    return radius * omega;
}

double centrifugal_delta_p(double density, double omega, double r1, double r2) {
    if (r1 < 0.0 || r2 < r1)
        throw std::invalid_argument("centrifugal_delta_p: need r2 >= r1 >= 0");
    return 0.5 * density * omega * omega * (r2 * r2 - r1 * r1);
}

double rotational_reynolds(double density, double omega, double hydraulic_diameter,
                           double dynamic_viscosity) {
    if (density <= 0.0 || hydraulic_diameter <= 0.0 || dynamic_viscosity <= 0.0 ||
        omega < 0.0)
        throw std::invalid_argument("rotational_reynolds: invalid inputs");
    return density * omega * hydraulic_diameter * hydraulic_diameter /
           dynamic_viscosity;
}

double friction_factor(double re, double re_rot, const SolverConfig& cfg) {
    if (re <= 0.0)
        throw std::invalid_argument("friction_factor: Re must be positive");
    double f = base_friction(re, cfg);
    if (re_rot > 0.0)
        f *= std::pow(1.0 + cfg.c_f * re_rot / re, cfg.friction_rotation_exponent);
    return f;
}

double nusselt(double re, double pr, double re_rot, const SolverConfig& cfg) {
    if (re <= 0.0 || pr <= 0.0)
        throw std::invalid_argument("nusselt: Re and Pr must be positive");
    double nu = base_nusselt(re, pr, cfg);
    if (re_rot > 0.0)
        nu *= std::pow(1.0 + cfg.c_n * re_rot / cfg.re_laminar,
                       cfg.nusselt_rotation_exponent);
    return nu;
}

double heat_transfer_rate(double density, double volume_flow, double specific_heat,
                          double t_out, double t_in) {
    if (volume_flow <= 0.0)
        throw std::invalid_argument("heat_transfer_rate: Q must be positive");
    return density * volume_flow * specific_heat * (t_out - t_in);
}

SolveResult march(const ChannelNetwork& network, const OperatingPoint& op,
                  const SolverConfig& cfg, const FluidPropertyTable& fluid,
                  const SolidPropertyTable& solid) {
    if (network.segments.empty())
        throw std::invalid_argument("march: empty network");
    check_operating_point(op);

    const double omega =
        cfg.rotation_enabled ? op.rotational_speed_rpm * kRpmToRadS : 0.0;
    const double volume_flow = op.inlet_flow_lpm * kLpmToM3s;
    const double t_in = op.inlet_temperature_c;

    const FluidState inlet = fluid_at(fluid, t_in);
    const double mdot = inlet.density * volume_flow;  // held constant (continuity)
    const double mdot_cp_in = mdot * inlet.specific_heat;

    const double k_steel =
        solid_at(solid, op.wall_temperature_c).thermal_conductivity;

    const std::size_t n = network.segments.size();
    SolveResult result;
    result.per_segment.assign(n, SegmentState{});
    std::vector<double> bulk(n, t_in);

    auto eval_temperature = [&](std::size_t i) {
        if (cfg.constant_properties) return t_in;
        const double t_bulk = bulk[i];
        if (cfg.property_eval == PropertyEval::film) {
            const double t_wall = network.segments[i].heated
                                      ? op.wall_temperature_c
                                      : op.ambient_temperature_c;
            return 0.5 * (t_bulk + t_wall);
        }
        return t_bulk;
    };

    // Outer fixed point on the bulk-temperature field; the exponential update
    // is exact per segment for constant wall temperature, so the iteration
    // only has to settle the property evaluation temperatures.
    int iteration = 0;
    bool converged = false;
    while (iteration < cfg.max_iterations && !converged) {
        ++iteration;
        double t = t_in;
        double max_delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const FlowSegment& seg = network.segments[i];
            const FluidState props = fluid_at(fluid, eval_temperature(i));
            const double v = volume_flow / seg.flow_area;
            const double re = props.density * v * seg.hydraulic_diameter /
                              props.dynamic_viscosity;
            const double re_rot =
                omega > 0.0 ? rotational_reynolds(props.density, omega,
                                                  seg.hydraulic_diameter,
                                                  props.dynamic_viscosity)
                            : 0.0;
            const double nu = nusselt(re, props.prandtl, re_rot, cfg);

            double u_applied;
            double t_target;
            if (seg.heated) {
                const double h_conv = nu * props.thermal_conductivity /
                                      seg.hydraulic_diameter;
                double resistance = 1.0 / h_conv;
                if (cfg.wall_conduction)
                    resistance += seg.wall_resistance_geom / k_steel;
                u_applied = 1.0 / resistance;
                t_target = op.wall_temperature_c;
            } else {
                // Still-air side dominates on the unheated stretches.
                u_applied = op.free_convection_w_m2k;
                t_target = op.ambient_temperature_c;
            }

            const double ntu =
                u_applied * seg.heat_exchange_area / (mdot * props.specific_heat);
            const double t_next = t_target - (t_target - t) * std::exp(-ntu);
            if (!std::isfinite(t_next))
                throw std::runtime_error(
                    "march: temperature update diverged at segment " +
                    std::to_string(i));

            const double new_bulk = 0.5 * (t + t_next);
            max_delta = std::max(max_delta, std::abs(new_bulk - bulk[i]));
            bulk[i] = new_bulk;

            SegmentState& st = result.per_segment[i];
            st.bulk_temperature = new_bulk;
            st.axial_velocity = v;
            st.tangential_velocity = omega * seg.mean_radius;
            st.reynolds = re;
            st.rotational_reynolds = re_rot;
            st.nusselt = nu;
            st.heat_transfer_coefficient = u_applied;
            // Bookkeeping in inlet-property units so the segment inputs sum
            // exactly to the aggregate rate.
            st.heat_input = mdot_cp_in * (t_next - t);
            t = t_next;
        }
        result.outlet_temperature = t;
        if (max_delta < cfg.convergence_tol_c) converged = true;
    }
    result.iterations = iteration;
    result.converged = converged;
    result.total_heat_rate = heat_transfer_rate(
        inlet.density, volume_flow, inlet.specific_heat, result.outlet_temperature,
        t_in);

    // Pressure march from the outlet (gauge zero) backwards. Friction always
    // raises the upstream pressure; the centrifugal head raises it across the
    // radial outlet (inward flow) and lowers it across the radial inlet.
    double p = 0.0;
    double max_p = 0.0;
    double centrifugal_cumulative = 0.0;
    double centrifugal_at_peak = 0.0;
    for (std::size_t ri = n; ri-- > 0;) {
        const FlowSegment& seg = network.segments[ri];
        const FluidState props = fluid_at(fluid, eval_temperature(ri));
        const double v = volume_flow / seg.flow_area;
        const double re =
            props.density * v * seg.hydraulic_diameter / props.dynamic_viscosity;
        const double re_rot =
            omega > 0.0 ? rotational_reynolds(props.density, omega,
                                              seg.hydraulic_diameter,
                                              props.dynamic_viscosity)
                        : 0.0;
        const double f = friction_factor(re, re_rot, cfg);
        const double dp_friction = f * (seg.length / seg.hydraulic_diameter) *
                                   0.5 * props.density * v * v;
        result.friction_pressure_total += dp_friction;

        double dp_centrifugal = 0.0;
        if (omega > 0.0 && seg.kind == SegmentKind::radial_inlet)
            dp_centrifugal = centrifugal_delta_p(props.density, omega,
                                                 seg.radius_start, seg.radius_end);
        else if (omega > 0.0 && seg.kind == SegmentKind::radial_outlet)
            dp_centrifugal = -centrifugal_delta_p(props.density, omega,
                                                  seg.radius_end, seg.radius_start);

        p += dp_friction - dp_centrifugal;
        centrifugal_cumulative -= dp_centrifugal;
        if (!std::isfinite(p))
            throw std::runtime_error("march: pressure march diverged at segment " +
                                     std::to_string(ri));
        result.per_segment[ri].gauge_pressure = p;
        if (p > max_p) {
            max_p = p;
            centrifugal_at_peak = centrifugal_cumulative;
        }
    }
    result.max_gauge_pressure = max_p;
    result.max_pressure_centrifugal_part = centrifugal_at_peak;
    result.max_pressure_friction_part = max_p - centrifugal_at_peak;
    result.friction_power_w = mdot * result.friction_pressure_total / inlet.density;

    double max_v = 0.0;
    for (const SegmentState& st : result.per_segment)
        max_v = std::max(max_v, std::hypot(st.axial_velocity, st.tangential_velocity));
    result.max_velocity = max_v;
    return result;
}

ConvergenceTable grid_convergence(const ShaftSpec& spec, const OperatingPoint& op,
                                  const std::vector<int>& counts,
                                  const SolverConfig& cfg,
                                  const FluidPropertyTable& fluid,
                                  const SolidPropertyTable& solid) {
    if (counts.empty())
        throw std::invalid_argument("grid_convergence: empty count list");
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 10)
            throw std::invalid_argument("grid_convergence: counts must be >= 10");
        if (i > 0 && counts[i] <= counts[i - 1])
            throw std::invalid_argument("grid_convergence: counts must ascend");
    }
    SolverConfig study_cfg = cfg;
    study_cfg.convergence_tol_c = std::min(cfg.convergence_tol_c, 1e-12);

    ConvergenceTable table;
    for (int n : counts) {
        const ChannelNetwork net = build_network(spec, n);
        const SolveResult res = march(net, op, study_cfg, fluid, solid);
        table.rows.push_back({n, res.outlet_temperature, res.max_gauge_pressure});
    }
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        table.outlet_temperature_diffs.push_back(std::abs(
            table.rows[i].outlet_temperature - table.rows[i - 1].outlet_temperature));
        table.max_pressure_diffs.push_back(std::abs(
            table.rows[i].max_gauge_pressure - table.rows[i - 1].max_gauge_pressure));
    }
    return table;
}

}  // namespace rotorcool
