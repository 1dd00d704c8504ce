// rotorcool: command-line front end for shaft coolant-flow simulations.
//
// Subcommands: simulate, sweep, compare, props, convergence, design-scan,
// config-show, geometry-describe. Exit codes: 0 success, 1 runtime error,
// 2 usage error.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotorcool/analysis.hpp"
#include "rotorcool/geometry.hpp"
#include "rotorcool/jsonio.hpp"
#include "rotorcool/properties.hpp"
#include "rotorcool/solver.hpp"

namespace {

using namespace rotorcool;

std::string resolve_out_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (path.empty()) return path;
    const char* dir = std::getenv("ROTORCOOL_OUT_DIR");
    if (dir && *dir && fs::path(path).is_relative())
        return (fs::path(dir) / path).string();
    return path;
}

struct CommonArgs {
    int model = 1;
    double rpm = 0.0;
    double flow_lpm = 5.0;
    double inlet_temp_c = 80.0;
    double wall_temp_c = 100.0;
    int segments = 200;
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    bool no_calibrate = false;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool with_model = true) {
    if (with_model)
        cmd->add_option("--model", args.model, "Shaft model (1..4)")
            ->check(CLI::Range(1, 4));
    cmd->add_option("--rpm", args.rpm, "Rotational speed, 1/min")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--flow-lpm", args.flow_lpm, "Inlet flow rate, l/min");
    cmd->add_option("--inlet-temp-c", args.inlet_temp_c, "Inlet temperature, degC");
    cmd->add_option("--wall-temp-c", args.wall_temp_c,
                    "Fixed wall temperature, degC (default 100)");
    cmd->add_option("--segments", args.segments,
                    "Axial channel segments (default 200)");
    cmd->add_option("--config", args.config_path, "JSON configuration file");
    cmd->add_option("--out", args.out_path, "Output file path");
    cmd->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--no-calibrate", args.no_calibrate,
                  "Skip the tooth-fill interface-area calibration");
}

struct LoadedConfig {
    SolverConfig solver;
    OperatingPoint op;
    FileConfig file;
    bool has_file = false;
    std::optional<FluidPropertyTable> fluid;

    const FluidPropertyTable& fluid_table() const {
        return fluid ? *fluid : oil_table();
    }
};

bool flag_given(const CLI::App* cmd, const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

// Configuration file values form the base; flags override only when typed.
// With no file, the flag defaults are the studied baseline (5 l/min, 80 degC).
LoadedConfig gather(const CommonArgs& args, const CLI::App* cmd) {
    LoadedConfig lc;
    if (!args.config_path.empty()) {
        lc.file = load_config_file(args.config_path);
        lc.solver = lc.file.solver;
        lc.op = lc.file.operating_point;
        lc.has_file = true;
    }
    if (lc.has_file && lc.file.has_fluid_table)
        lc.fluid.emplace(lc.file.fluid_rows);
    if (!lc.has_file || flag_given(cmd, "--rpm"))
        lc.op.rotational_speed_rpm = args.rpm;
    if (!lc.has_file || flag_given(cmd, "--flow-lpm"))
        lc.op.inlet_flow_lpm = args.flow_lpm;
    if (!lc.has_file || flag_given(cmd, "--inlet-temp-c"))
        lc.op.inlet_temperature_c = args.inlet_temp_c;
    if (!lc.has_file || flag_given(cmd, "--wall-temp-c"))
        lc.op.wall_temperature_c = args.wall_temp_c;
    return lc;
}

ShaftSpec shaft_for(const CommonArgs& args, const LoadedConfig& lc) {
    ShaftSpec spec = (lc.has_file && lc.file.has_geometry) ? lc.file.geometry
                                                           : preset(args.model);
    if (!args.no_calibrate && spec.has_teeth())
        spec = calibrate_fill_fraction(spec).spec;
    return spec;
}

SweepRow row_from_result(const ShaftSpec& spec, const OperatingPoint& op,
                         const SolveResult& res) {
    SweepRow row;
    row.model_id = spec.model_id;
    row.rpm = op.rotational_speed_rpm;
    row.flow_lpm = op.inlet_flow_lpm;
    row.inlet_temp_c = op.inlet_temperature_c;
    row.outlet_temp_c = res.outlet_temperature;
    row.heat_rate_w = res.total_heat_rate;
    row.max_pressure_pa = res.max_gauge_pressure;
    row.max_velocity_m_s = res.max_velocity;
    row.heat_per_area_w_m2 = res.total_heat_rate / (spec.interface_area_mm2 * 1e-6);
    row.friction_pressure_pa = res.friction_pressure_total;
    row.converged = res.converged;
    return row;
}

void print_summary(const SolveResult& res) {
    std::printf("outlet temperature: %.4g degC\n", res.outlet_temperature);
    std::printf("heat rate:          %.4g W\n", res.total_heat_rate);
    std::printf("max pressure:       %.4g bar\n", res.max_gauge_pressure / 1e5);
    std::printf("max velocity:       %.4g m/s\n", res.max_velocity);
    std::printf("friction power:     %.4g W\n", res.friction_power_w);
    if (!res.converged)
        std::printf("warning: temperature iteration did not converge (%d iterations)\n",
                    res.iterations);
}

void emit_rows(const std::vector<SweepRow>& rows, const std::string& format,
               const std::string& out_path) {
    const std::string body = format == "json" ? to_json(rows) : to_csv(rows);
    if (out_path.empty()) {
        std::fputs(body.c_str(), stdout);
    } else {
        atomic_write(resolve_out_path(out_path), body);
    }
}

int cmd_simulate(const CommonArgs& args, const CLI::App* cmd) {
    const LoadedConfig lc = gather(args, cmd);
    const ShaftSpec spec = shaft_for(args, lc);
    const ChannelNetwork net = build_network(spec, args.segments);
    const SolveResult res = march(net, lc.op, lc.solver, lc.fluid_table());
    print_summary(res);
    if (!args.out_path.empty())
        emit_rows({row_from_result(spec, lc.op, res)}, args.format, args.out_path);
    return 0;
}

int cmd_sweep(const CommonArgs& args, const CLI::App* cmd) {
    const LoadedConfig lc = gather(args, cmd);
    SweepSpec sweep;
    if (lc.has_file && lc.file.has_sweep) {
        sweep = lc.file.sweep;
    } else {
        sweep.models = {args.model};
        sweep.speeds_rpm = {lc.op.rotational_speed_rpm};
        sweep.flows_lpm = {lc.op.inlet_flow_lpm};
        sweep.inlet_temps_c = {lc.op.inlet_temperature_c};
    }
    if (flag_given(cmd, "--wall-temp-c"))
        sweep.wall_temperature_c = args.wall_temp_c;
    if (args.no_calibrate) sweep.calibrate = false;
    const std::vector<SweepRow> rows =
        run_sweep(sweep, lc.solver, ExecutionPolicy::parallel, lc.fluid_table());
    emit_rows(rows, args.format, args.out_path);
    if (!args.out_path.empty()) {
        std::printf("%zu rows written to %s\n", rows.size(),
                    resolve_out_path(args.out_path).c_str());
        const std::string summary_path = resolve_out_path(args.out_path) + ".summary.json";
        atomic_write(summary_path, summary_json(rows));
        std::printf("summary written to %s\n", summary_path.c_str());
    }
    return 0;
}

int cmd_compare(const CommonArgs& args, const CLI::App* cmd) {
    const LoadedConfig lc = gather(args, cmd);
    SweepSpec sweep;
    sweep.models = {1, 2, 3, 4};
    sweep.speeds_rpm = {lc.op.rotational_speed_rpm};
    sweep.flows_lpm = {lc.op.inlet_flow_lpm};
    sweep.inlet_temps_c = {lc.op.inlet_temperature_c};
    sweep.wall_temperature_c = lc.op.wall_temperature_c;
    sweep.n_axial_segments = args.segments;
    if (args.no_calibrate) sweep.calibrate = false;
    const std::vector<SweepRow> rows =
        run_sweep(sweep, lc.solver, ExecutionPolicy::parallel, lc.fluid_table());

    const GridPoint at{lc.op.rotational_speed_rpm, lc.op.inlet_flow_lpm,
                       lc.op.inlet_temperature_c};
    const std::vector<int> ranking = rank_models(rows, sweep.models, at);
    std::printf("model ranking by heat rate at %.6g 1/min, %.6g l/min, %.6g degC:\n",
                at.rpm, at.flow_lpm, at.inlet_temp_c);
    for (int m : ranking) {
        const SweepRow* r = nullptr;
        for (const SweepRow& row : rows)
            if (row.model_id == m) r = &row;
        std::printf("  model %d: heat %.4g W, max pressure %.4g bar, max velocity "
                    "%.4g m/s\n",
                    m, r->heat_rate_w, r->max_pressure_pa / 1e5, r->max_velocity_m_s);
    }
    const auto ratio = improvement_ratio(rows, 3, 1, at);
    if (ratio)
        std::printf("model 3 over model 1 heat-rate ratio: %.4g\n", *ratio);
    if (!args.out_path.empty()) emit_rows(rows, args.format, args.out_path);
    return 0;
}

int cmd_props(const CommonArgs& args, bool eval_given) {
    const FluidPropertyTable& oil = oil_table();
    std::printf("oil property table (T degC, rho kg/m3, nu m2/s, cp J/kgK, k W/mK, "
                "mu Pa s):\n");
    for (const FluidRow& r : oil.rows())
        std::printf("  %6.6g %8.6g %12.6g %8.6g %6.6g %12.6g\n", r.temperature_c,
                    r.density, r.kinematic_viscosity, r.specific_heat,
                    r.thermal_conductivity, r.dynamic_viscosity);
    const ConsistencyReport rep = consistency_check(oil);
    std::printf("mu vs rho*nu max relative discrepancy: %.3g (%s)\n",
                rep.max_relative_discrepancy, rep.pass ? "pass" : "FAIL");
    std::printf("shaft steel table (T degC, rho kg/m3, k W/mK, cp kJ/kgK):\n");
    for (const SolidRow& r : steel_table().rows())
        std::printf("  %6.6g %8.6g %8.6g %6.6g\n", r.temperature_c, r.density,
                    r.thermal_conductivity, r.specific_heat);
    if (eval_given) {
        const FluidState s = fluid_at(oil, args.inlet_temp_c);
        std::printf("oil at %.6g degC: rho %.6g kg/m3, nu %.6g m2/s, cp %.6g J/kgK, "
                    "k %.6g W/mK, mu %.6g Pa s, Pr %.6g%s\n",
                    s.temperature_c, s.density, s.kinematic_viscosity,
                    s.specific_heat, s.thermal_conductivity, s.dynamic_viscosity,
                    s.prandtl, s.clamped ? " (clamped)" : "");
        const SolidState st = solid_at(steel_table(), args.inlet_temp_c);
        std::printf("steel at %.6g degC: k %.6g W/mK, rho %.6g kg/m3, cp %.6g kJ/kgK\n",
                    args.inlet_temp_c, st.thermal_conductivity, st.density,
                    st.specific_heat);
    }
    return 0;
}

int cmd_convergence(const CommonArgs& args, const CLI::App* cmd,
                    const std::vector<int>& counts) {
    const LoadedConfig lc = gather(args, cmd);
    const ShaftSpec spec = shaft_for(args, lc);
    const ConvergenceTable table =
        grid_convergence(spec, lc.op, counts, lc.solver, lc.fluid_table());
    std::printf("segments  outlet_temp_c      max_pressure_pa\n");
    for (const ConvergenceRow& r : table.rows)
        std::printf("%8d  %.12g  %.12g\n", r.n_segments, r.outlet_temperature,
                    r.max_gauge_pressure);
    for (std::size_t i = 0; i < table.outlet_temperature_diffs.size(); ++i)
        std::printf("|T(%d) - T(%d)| = %.6g degC, |p| diff = %.6g Pa\n",
                    table.rows[i + 1].n_segments, table.rows[i].n_segments,
                    table.outlet_temperature_diffs[i], table.max_pressure_diffs[i]);
    return 0;
}

int cmd_design_scan(const CommonArgs& args, const CLI::App* cmd,
                    const std::vector<int>& teeth,
                    const std::vector<double>& depths,
                    const std::vector<double>& fills) {
    const LoadedConfig lc = gather(args, cmd);
    OperatingPoint op = lc.op;
    const DesignScanResult scan = design_scan(
        args.model == 1 ? 2 : args.model, teeth, depths, fills, op, lc.solver,
        args.segments, ExecutionPolicy::parallel, lc.fluid_table());
    std::printf("teeth  depth_mm  fill    heat_per_area_w_m2  max_pressure_pa  front\n");
    for (const ParetoPoint& p : scan.points)
        std::printf("%5d  %8.6g  %.6g  %18.6g  %15.6g  %s\n", p.tooth_channels,
                    p.profile_depth_mm, p.fill_fraction, p.heat_per_area_w_m2,
                    p.max_pressure_pa, p.dominated ? "-" : "yes");
    for (const std::string& note : scan.skipped)
        std::printf("skipped %s\n", note.c_str());
    if (!args.out_path.empty()) {
        std::string csv = "tooth_channels,profile_depth_mm,fill_fraction,"
                          "heat_per_area_w_m2,max_pressure_pa,on_front\n";
        char line[256];
        for (const ParetoPoint& p : scan.points) {
            std::snprintf(line, sizeof(line), "%d,%.6g,%.6g,%.6g,%.6g,%d\n",
                          p.tooth_channels, p.profile_depth_mm, p.fill_fraction,
                          p.heat_per_area_w_m2, p.max_pressure_pa,
                          p.dominated ? 0 : 1);
            csv += line;
        }
        atomic_write(resolve_out_path(args.out_path), csv);
    }
    return 0;
}

int cmd_geometry_describe(const CommonArgs& args, const CLI::App* cmd) {
    const LoadedConfig lc = gather(args, cmd);
    const ShaftSpec spec = shaft_for(args, lc);
    std::fputs(describe(spec).c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotorcool: coolant flow and heat transfer in rotating shafts"};
    app.require_subcommand(1);

    CommonArgs args;
    bool props_eval_given = false;
    std::vector<int> counts = {100, 200, 400};
    std::vector<int> teeth = {14, 21, 28};
    std::vector<double> depths = {2.0, 4.0, 4.4};
    std::vector<double> fills = {0.35, 0.5, 0.65};

    CLI::App* simulate = app.add_subcommand("simulate", "Solve one operating point");
    add_common_flags(simulate, args);

    CLI::App* sweep = app.add_subcommand("sweep", "Run an operating-grid sweep");
    add_common_flags(sweep, args);

    CLI::App* compare =
        app.add_subcommand("compare", "Rank the four shafts at one operating point");
    add_common_flags(compare, args, /*with_model=*/false);

    CLI::App* props = app.add_subcommand("props", "Print the property tables");
    props->add_option("--inlet-temp-c", args.inlet_temp_c,
                      "Also evaluate the tables at this temperature")
        ->each([&props_eval_given](const std::string&) { props_eval_given = true; });

    CLI::App* convergence =
        app.add_subcommand("convergence", "Axial grid refinement study");
    add_common_flags(convergence, args);
    convergence->add_option("--counts", counts, "Ascending segment counts");

    CLI::App* design =
        app.add_subcommand("design-scan", "Scan tooth geometry variants");
    add_common_flags(design, args);
    design->add_option("--teeth", teeth, "Tooth channel counts");
    design->add_option("--depths", depths, "Profile depths, mm (1..6)");
    design->add_option("--fills", fills, "Tooth fill fractions (0..1)");

    CLI::App* config_show =
        app.add_subcommand("config-show", "Print the default configuration");

    CLI::App* geometry_describe =
        app.add_subcommand("geometry-describe", "Print the shaft geometry block");
    add_common_flags(geometry_describe, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(args, simulate);
        if (sweep->parsed()) return cmd_sweep(args, sweep);
        if (compare->parsed()) return cmd_compare(args, compare);
        if (props->parsed()) return cmd_props(args, props_eval_given);
        if (convergence->parsed()) return cmd_convergence(args, convergence, counts);
        if (design->parsed())
            return cmd_design_scan(args, design, teeth, depths, fills);
        if (config_show->parsed()) {
            std::fputs(config_defaults_json().c_str(), stdout);
            return 0;
        }
        if (geometry_describe->parsed())
            return cmd_geometry_describe(args, geometry_describe);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
