#include "rotorcool/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace rotorcool {

namespace {

std::string g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void validate_spec(const SweepSpec& spec) {
    if (spec.models.empty() || spec.speeds_rpm.empty() || spec.flows_lpm.empty() ||
        spec.inlet_temps_c.empty())
        throw std::invalid_argument("SweepSpec: every axis needs at least one value");
    for (int m : spec.models)
        if (m < 1 || m > 4)
            throw std::invalid_argument("SweepSpec: model ids must be 1..4");
    if (spec.n_axial_segments < 10)
        throw std::invalid_argument("SweepSpec: n_axial_segments must be >= 10");
    if (!spec.allow_extended_ranges) {
        for (double s : spec.speeds_rpm)
            if (s < 0.0 || s > 18000.0)
                throw std::invalid_argument(
                    "SweepSpec: speed outside the studied 0..18000 1/min range "
                    "(set allow_extended_ranges to override)");
        for (double f : spec.flows_lpm)
            if (f < 3.0 || f > 6.0)
                throw std::invalid_argument(
                    "SweepSpec: flow outside the studied 3..6 l/min range "
                    "(set allow_extended_ranges to override)");
        for (double t : spec.inlet_temps_c)
            if (t < 50.0 || t > 80.0)
                throw std::invalid_argument(
                    "SweepSpec: inlet temperature outside the studied 50..80 degC "
                    "range (set allow_extended_ranges to override)");
    }
}

struct PreparedModel {
    ShaftSpec spec;
    ChannelNetwork network;
};

PreparedModel prepare_model(int model_id, const SweepSpec& sweep) {
    ShaftSpec s = preset(model_id);
    if (sweep.calibrate && s.has_teeth())
        s = calibrate_fill_fraction(s).spec;
    return {s, build_network(s, sweep.n_axial_segments)};
}

SweepRow solve_row(const PreparedModel& model, const SweepSpec& sweep, double rpm,
                   double flow, double temp, const SolverConfig& cfg,
                   const FluidPropertyTable& fluid, const SolidPropertyTable& solid) {
    SweepRow row;
    row.model_id = model.spec.model_id;
    row.rpm = rpm;
    row.flow_lpm = flow;
    row.inlet_temp_c = temp;
    OperatingPoint op;
    op.rotational_speed_rpm = rpm;
    op.inlet_flow_lpm = flow;
    op.inlet_temperature_c = temp;
    op.wall_temperature_c = sweep.wall_temperature_c;
    op.ambient_temperature_c = sweep.ambient_temperature_c;
    op.free_convection_w_m2k = sweep.free_convection_w_m2k;
    try {
        const SolveResult res = march(model.network, op, cfg, fluid, solid);
        row.outlet_temp_c = res.outlet_temperature;
        row.heat_rate_w = res.total_heat_rate;
        row.max_pressure_pa = res.max_gauge_pressure;
        row.max_velocity_m_s = res.max_velocity;
        row.friction_pressure_pa = res.friction_pressure_total;
        row.heat_per_area_w_m2 =
            res.total_heat_rate / (model.spec.interface_area_mm2 * 1e-6);
        row.converged = res.converged;
    } catch (const std::exception&) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.outlet_temp_c = nan;
        row.heat_rate_w = nan;
        row.max_pressure_pa = nan;
        row.max_velocity_m_s = nan;
        row.heat_per_area_w_m2 = nan;
        row.friction_pressure_pa = nan;
        row.converged = false;
    }
    return row;
}

std::vector<SweepRow> run_sweep_impl(const SweepSpec& spec, const SolverConfig& cfg,
                                     bool parallel, const FluidPropertyTable& fluid,
                                     const SolidPropertyTable& solid) {
    validate_spec(spec);

    std::vector<PreparedModel> prepared;
    prepared.reserve(spec.models.size());
    for (int m : spec.models) prepared.push_back(prepare_model(m, spec));

    const std::size_t n_speeds = spec.speeds_rpm.size();
    const std::size_t n_flows = spec.flows_lpm.size();
    const std::size_t n_temps = spec.inlet_temps_c.size();
    const std::size_t total = prepared.size() * n_speeds * n_flows * n_temps;

    std::vector<SweepRow> rows(total);
    // Row index encodes the lexicographic (model, speed, flow, temp) order,
    // so parallel execution lands every result in its canonical slot.
    const auto solve_index = [&](std::size_t idx) {
        std::size_t rest = idx;
        const std::size_t ti = rest % n_temps;
        rest /= n_temps;
        const std::size_t fi = rest % n_flows;
        rest /= n_flows;
        const std::size_t si = rest % n_speeds;
        const std::size_t mi = rest / n_speeds;
        rows[idx] = solve_row(prepared[mi], spec, spec.speeds_rpm[si],
                              spec.flows_lpm[fi], spec.inlet_temps_c[ti], cfg,
                              fluid, solid);
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(total); ++i)
            solve_index(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < total; ++i) solve_index(i);
    }
    return rows;
}

const SweepRow* find_row(const std::vector<SweepRow>& rows, int model,
                         const GridPoint& at) {
    for (const SweepRow& r : rows) {
        if (r.model_id == model && r.rpm == at.rpm && r.flow_lpm == at.flow_lpm &&
            r.inlet_temp_c == at.inlet_temp_c)
            return &r;
    }
    return nullptr;
}

double metric_of(const SweepRow& r, RankMetric metric) {
    switch (metric) {
        case RankMetric::heat_rate: return r.heat_rate_w;
        case RankMetric::heat_per_area: return r.heat_per_area_w_m2;
        case RankMetric::max_pressure: return r.max_pressure_pa;
        case RankMetric::max_velocity: return r.max_velocity_m_s;
    }
    return 0.0;
}

bool dominates(const ParetoPoint& a, const ParetoPoint& b) {
    return a.heat_per_area_w_m2 >= b.heat_per_area_w_m2 &&
           a.max_pressure_pa <= b.max_pressure_pa &&
           (a.heat_per_area_w_m2 > b.heat_per_area_w_m2 ||
            a.max_pressure_pa < b.max_pressure_pa);
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SolverConfig& cfg,
                                ExecutionPolicy policy,
                                const FluidPropertyTable& fluid,
                                const SolidPropertyTable& solid) {
    return run_sweep_impl(spec, cfg, policy == ExecutionPolicy::parallel, fluid,
                          solid);
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec, const SolverConfig& cfg,
                                       const FluidPropertyTable& fluid,
                                       const SolidPropertyTable& solid) {
    return run_sweep_impl(spec, cfg, false, fluid, solid);
}

std::vector<int> rank_models(const std::vector<SweepRow>& rows,
                             const std::vector<int>& models, const GridPoint& at,
                             RankMetric metric) {
    struct Entry {
        int model;
        double value;
    };
    std::vector<Entry> entries;
    for (int m : models) {
        const SweepRow* r = find_row(rows, m, at);
        if (!r)
            throw std::invalid_argument("rank_models: model " + std::to_string(m) +
                                        " missing at the requested point");
        entries.push_back({m, metric_of(*r, metric)});
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.model < b.model;
    });
    std::vector<int> order;
    order.reserve(entries.size());
    for (const Entry& e : entries) order.push_back(e.model);
    return order;
}

std::optional<double> improvement_ratio(const std::vector<SweepRow>& rows,
                                        int candidate_model, int baseline_model,
                                        const GridPoint& at) {
    const SweepRow* cand = find_row(rows, candidate_model, at);
    const SweepRow* base = find_row(rows, baseline_model, at);
    if (!cand || !base)
        throw std::invalid_argument("improvement_ratio: model missing at the point");
    if (base->heat_rate_w == 0.0) return std::nullopt;
    return cand->heat_rate_w / base->heat_rate_w;
}

void mark_dominated(std::vector<ParetoPoint>& points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Sort by heat descending, pressure ascending; one sweep then finds every
    // dominated point against the best pressure seen at strictly higher heat
    // and against cheaper points of equal heat.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].heat_per_area_w_m2 != points[b].heat_per_area_w_m2)
            return points[a].heat_per_area_w_m2 > points[b].heat_per_area_w_m2;
        return points[a].max_pressure_pa < points[b].max_pressure_pa;
    });

    double best_pressure_higher_heat = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        const double heat = points[order[i]].heat_per_area_w_m2;
        while (j < n && points[order[j]].heat_per_area_w_m2 == heat) ++j;
        const double group_min_pressure = points[order[i]].max_pressure_pa;
        for (std::size_t k = i; k < j; ++k) {
            ParetoPoint& p = points[order[k]];
            p.dominated = best_pressure_higher_heat <= p.max_pressure_pa ||
                          p.max_pressure_pa > group_min_pressure;
        }
        best_pressure_higher_heat =
            std::min(best_pressure_higher_heat, group_min_pressure);
        i = j;
    }
}

std::vector<ParetoPoint> pareto_front(const std::vector<ParetoPoint>& points) {
    std::vector<ParetoPoint> marked = points;
    mark_dominated(marked);
    std::vector<ParetoPoint> front;
    for (const ParetoPoint& p : marked)
        if (!p.dominated) front.push_back(p);
    return front;
}

DesignScanResult design_scan(int base_model, const std::vector<int>& tooth_counts,
                             const std::vector<double>& depths_mm,
                             const std::vector<double>& fills,
                             const OperatingPoint& reference_op,
                             const SolverConfig& cfg, int n_axial_segments,
                             ExecutionPolicy policy, const FluidPropertyTable& fluid,
                             const SolidPropertyTable& solid) {
    if (tooth_counts.empty() || depths_mm.empty() || fills.empty())
        throw std::invalid_argument("design_scan: every axis needs at least one value");
    for (double d : depths_mm)
        if (d < 1.0 || d > 6.0)
            throw std::invalid_argument(
                "design_scan: profile depth outside the 1..6 mm range");
    for (int t : tooth_counts)
        if (t < 1) throw std::invalid_argument("design_scan: tooth count must be >= 1");
    for (double f : fills)
        if (f <= 0.0 || f >= 1.0)
            throw std::invalid_argument("design_scan: fill fraction must be in (0,1)");

    const ShaftSpec base = preset(base_model);
    if (!base.has_teeth())
        throw std::invalid_argument("design_scan: base model has no tooth channels");

    struct Variant {
        int teeth;
        double depth;
        double fill;
    };
    std::vector<Variant> variants;
    for (int t : tooth_counts)
        for (double d : depths_mm)
            for (double f : fills) variants.push_back({t, d, f});

    struct Outcome {
        bool ok = false;
        ParetoPoint point;
        std::string note;
    };
    std::vector<Outcome> outcomes(variants.size());

    const auto solve_variant = [&](std::size_t i) {
        const Variant& v = variants[i];
        ShaftSpec s = base;
        s.n_tooth_channels = v.teeth;
        s.profile_depth_mm = v.depth;
        s.tooth_fill_fraction = v.fill;
        Outcome& out = outcomes[i];
        char tag[96];
        std::snprintf(tag, sizeof(tag), "teeth=%d depth=%.6g fill=%.6g", v.teeth,
                      v.depth, v.fill);
        try {
            const ChannelNetwork net = build_network(s, n_axial_segments);
            const SolveResult res = march(net, reference_op, cfg, fluid, solid);
            out.point.tooth_channels = v.teeth;
            out.point.profile_depth_mm = v.depth;
            out.point.fill_fraction = v.fill;
            out.point.heat_per_area_w_m2 = res.total_heat_rate / net.total_heated_area;
            out.point.max_pressure_pa = res.max_gauge_pressure;
            out.ok = true;
        } catch (const std::exception& e) {
            out.note = std::string(tag) + ": " + e.what();
        }
    };

    if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(variants.size()); ++i)
            solve_variant(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < variants.size(); ++i) solve_variant(i);
    }

    DesignScanResult result;
    for (const Outcome& out : outcomes) {
        if (out.ok)
            result.points.push_back(out.point);
        else
            result.skipped.push_back(out.note);
    }
    mark_dominated(result.points);
    return result;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "model,rpm,flow_lpm,inlet_temp_c,outlet_temp_c,heat_rate_w,max_pressure_pa,"
        "max_velocity_m_s,heat_per_area_w_m2,converged\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.model_id);
        out += ',';
        out += g6(r.rpm);
        out += ',';
        out += g6(r.flow_lpm);
        out += ',';
        out += g6(r.inlet_temp_c);
        out += ',';
        out += g6(r.outlet_temp_c);
        out += ',';
        out += g6(r.heat_rate_w);
        out += ',';
        out += g6(r.max_pressure_pa);
        out += ',';
        out += g6(r.max_velocity_m_s);
        out += ',';
        out += g6(r.heat_per_area_w_m2);
        out += ',';
        out += r.converged ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        arr.push_back({{"model", r.model_id},
                       {"rpm", r.rpm},
                       {"flow_lpm", r.flow_lpm},
                       {"inlet_temp_c", r.inlet_temp_c},
                       {"outlet_temp_c", r.outlet_temp_c},
                       {"heat_rate_w", r.heat_rate_w},
                       {"max_pressure_pa", r.max_pressure_pa},
                       {"max_velocity_m_s", r.max_velocity_m_s},
                       {"heat_per_area_w_m2", r.heat_per_area_w_m2},
                       {"converged", r.converged}});
    }
    return arr.dump(2) + "\n";
}

std::string summary_json(const std::vector<SweepRow>& rows) {
    // Collect the distinct grid points in row order.
    std::vector<GridPoint> points;
    std::vector<int> models;
    for (const SweepRow& r : rows) {
        if (std::find(models.begin(), models.end(), r.model_id) == models.end())
            models.push_back(r.model_id);
        bool seen = false;
        for (const GridPoint& p : points)
            if (p.rpm == r.rpm && p.flow_lpm == r.flow_lpm &&
                p.inlet_temp_c == r.inlet_temp_c) {
                seen = true;
                break;
            }
        if (!seen) points.push_back({r.rpm, r.flow_lpm, r.inlet_temp_c});
    }
    std::sort(models.begin(), models.end());

    nlohmann::json summary;
    summary["models"] = models;
    nlohmann::json per_point = nlohmann::json::array();
    for (const GridPoint& p : points) {
        std::vector<int> present;
        for (int m : models)
            if (find_row(rows, m, p)) present.push_back(m);
        if (present.empty()) continue;
        nlohmann::json entry;
        entry["rpm"] = p.rpm;
        entry["flow_lpm"] = p.flow_lpm;
        entry["inlet_temp_c"] = p.inlet_temp_c;
        entry["ranking_by_heat_rate"] = rank_models(rows, present, p);
        if (std::find(present.begin(), present.end(), 1) != present.end() &&
            std::find(present.begin(), present.end(), 3) != present.end()) {
            const auto ratio = improvement_ratio(rows, 3, 1, p);
            if (ratio) entry["improvement_model3_vs_model1"] = *ratio;
        }
        per_point.push_back(entry);
    }
    summary["points"] = per_point;
    return summary.dump(2) + "\n";
}

}  // namespace rotorcool
