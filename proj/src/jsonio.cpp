#include "rotorcool/jsonio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rotorcool {

namespace {

using nlohmann::json;

template <typename T>
void get_if(const json& j, const char* key, T& target) {
    if (j.contains(key)) target = j.at(key).get<T>();
}

SolverConfig parse_solver(const json& j) {
    SolverConfig cfg;
    get_if(j, "c_f", cfg.c_f);
    get_if(j, "c_n", cfg.c_n);
    get_if(j, "friction_rotation_exponent", cfg.friction_rotation_exponent);
    get_if(j, "nusselt_rotation_exponent", cfg.nusselt_rotation_exponent);
    get_if(j, "re_laminar", cfg.re_laminar);
    get_if(j, "re_turbulent", cfg.re_turbulent);
    if (j.contains("blend")) {
        const std::string mode = j.at("blend").get<std::string>();
        if (mode == "linear")
            cfg.blend = BlendMode::linear;
        else if (mode == "step")
            cfg.blend = BlendMode::step;
        else
            throw std::invalid_argument("config: blend must be 'linear' or 'step'");
    }
    if (j.contains("property_eval")) {
        const std::string mode = j.at("property_eval").get<std::string>();
        if (mode == "bulk")
            cfg.property_eval = PropertyEval::bulk;
        else if (mode == "film")
            cfg.property_eval = PropertyEval::film;
        else
            throw std::invalid_argument("config: property_eval must be 'bulk' or 'film'");
    }
    get_if(j, "constant_properties", cfg.constant_properties);
    get_if(j, "rotation_enabled", cfg.rotation_enabled);
    get_if(j, "wall_conduction", cfg.wall_conduction);
    get_if(j, "convergence_tol_c", cfg.convergence_tol_c);
    get_if(j, "max_iterations", cfg.max_iterations);
    return cfg;
}

OperatingPoint parse_operating_point(const json& j) {
    OperatingPoint op;
    get_if(j, "rpm", op.rotational_speed_rpm);
    get_if(j, "flow_lpm", op.inlet_flow_lpm);
    get_if(j, "inlet_temp_c", op.inlet_temperature_c);
    get_if(j, "wall_temp_c", op.wall_temperature_c);
    get_if(j, "ambient_temp_c", op.ambient_temperature_c);
    get_if(j, "free_convection_w_m2k", op.free_convection_w_m2k);
    return op;
}

SweepSpec parse_sweep(const json& j) {
    SweepSpec spec;
    get_if(j, "models", spec.models);
    get_if(j, "speeds_rpm", spec.speeds_rpm);
    get_if(j, "flows_lpm", spec.flows_lpm);
    get_if(j, "inlet_temps_c", spec.inlet_temps_c);
    get_if(j, "wall_temp_c", spec.wall_temperature_c);
    get_if(j, "ambient_temp_c", spec.ambient_temperature_c);
    get_if(j, "free_convection_w_m2k", spec.free_convection_w_m2k);
    get_if(j, "n_axial_segments", spec.n_axial_segments);
    get_if(j, "calibrate", spec.calibrate);
    get_if(j, "allow_extended_ranges", spec.allow_extended_ranges);
    return spec;
}

ShaftSpec parse_geometry(const json& j) {
    int model = 2;
    get_if(j, "model_id", model);
    ShaftSpec s = preset(model);
    get_if(j, "length_total_mm", s.length_total_mm);
    get_if(j, "length_tempfix_mm", s.length_tempfix_mm);
    get_if(j, "d_in_mm", s.d_in_mm);
    get_if(j, "d_in_post_mm", s.d_in_post_mm);
    get_if(j, "d_out_mm", s.d_out_mm);
    if (j.contains("d_out_pre_mm")) s.d_out_pre_mm = j.at("d_out_pre_mm").get<double>();
    get_if(j, "d_outer_mm", s.d_outer_mm);
    if (j.contains("d_inner_mm")) s.d_inner_mm = j.at("d_inner_mm").get<double>();
    get_if(j, "fix_temp_area_mm2", s.fix_temp_area_mm2);
    get_if(j, "interface_area_mm2", s.interface_area_mm2);
    get_if(j, "n_inlet_passages", s.n_inlet_passages);
    get_if(j, "d_passage_in_mm", s.d_passage_in_mm);
    get_if(j, "n_outlet_passages", s.n_outlet_passages);
    get_if(j, "d_passage_out_mm", s.d_passage_out_mm);
    get_if(j, "n_tooth_channels", s.n_tooth_channels);
    get_if(j, "profile_depth_mm", s.profile_depth_mm);
    get_if(j, "tooth_fill_fraction", s.tooth_fill_fraction);
    if (j.contains("inner_profile")) {
        const std::string p = j.at("inner_profile").get<std::string>();
        if (p == "none")
            s.inner_profile = InnerProfile::none;
        else if (p == "smooth")
            s.inner_profile = InnerProfile::smooth;
        else if (p == "wavy")
            s.inner_profile = InnerProfile::wavy;
        else
            throw std::invalid_argument("geometry: unknown inner_profile '" + p + "'");
    }
    get_if(j, "open_area_factor", s.open_area_factor);
    get_if(j, "wetted_perimeter_factor", s.wetted_perimeter_factor);
    get_if(j, "min_wall_mm", s.min_wall_mm);
    return s;
}

std::vector<FluidRow> parse_fluid_rows(const json& j) {
    std::vector<FluidRow> rows;
    for (const json& r : j) {
        FluidRow row{};
        row.temperature_c = r.at("temperature_c").get<double>();
        row.density = r.at("density_kg_m3").get<double>();
        row.kinematic_viscosity = r.at("kinematic_viscosity_m2_s").get<double>();
        row.specific_heat = r.at("specific_heat_j_kgk").get<double>();
        row.thermal_conductivity = r.at("thermal_conductivity_w_mk").get<double>();
        row.dynamic_viscosity = r.at("dynamic_viscosity_pa_s").get<double>();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

FileConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config parse error in " + path + ": " + e.what());
    }

    FileConfig cfg;
    if (j.contains("solver")) cfg.solver = parse_solver(j.at("solver"));
    if (j.contains("operating_point"))
        cfg.operating_point = parse_operating_point(j.at("operating_point"));
    if (j.contains("sweep")) {
        cfg.sweep = parse_sweep(j.at("sweep"));
        cfg.has_sweep = true;
    }
    if (j.contains("geometry")) {
        cfg.geometry = parse_geometry(j.at("geometry"));
        cfg.has_geometry = true;
    }
    if (j.contains("fluid_table")) {
        cfg.fluid_rows = parse_fluid_rows(j.at("fluid_table"));
        cfg.has_fluid_table = true;
    }
    return cfg;
}

std::string config_defaults_json() {
    const SolverConfig cfg;
    const OperatingPoint op;
    json j;
    j["solver"] = {
        {"c_f", cfg.c_f},
        {"c_n", cfg.c_n},
        {"friction_rotation_exponent", cfg.friction_rotation_exponent},
        {"nusselt_rotation_exponent", cfg.nusselt_rotation_exponent},
        {"re_laminar", cfg.re_laminar},
        {"re_turbulent", cfg.re_turbulent},
        {"blend", "linear"},
        {"property_eval", "bulk"},
        {"constant_properties", cfg.constant_properties},
        {"rotation_enabled", cfg.rotation_enabled},
        {"wall_conduction", cfg.wall_conduction},
        {"convergence_tol_c", cfg.convergence_tol_c},
        {"max_iterations", cfg.max_iterations},
    };
    j["operating_point"] = {
        {"rpm", op.rotational_speed_rpm},
        {"flow_lpm", op.inlet_flow_lpm},
        {"inlet_temp_c", op.inlet_temperature_c},
        {"wall_temp_c", op.wall_temperature_c},
        {"ambient_temp_c", op.ambient_temperature_c},
        {"free_convection_w_m2k", op.free_convection_w_m2k},
    };
    return j.dump(2) + "\n";
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
    const fs::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write to " + tmp.string());
        out << content;
        if (!out)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot replace " + path + ": " + ec.message());
    }
}

}  // namespace rotorcool
