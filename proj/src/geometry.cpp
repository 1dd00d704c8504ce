#include "rotorcool/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace rotorcool {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMmToM = 1e-3;

void validate(const ShaftSpec& s) {
    if (s.model_id < 1 || s.model_id > 4)
        throw std::invalid_argument("ShaftSpec: model_id must be 1..4");
    if (s.length_total_mm <= 0.0 || s.length_tempfix_mm <= 0.0 ||
        s.length_tempfix_mm > s.length_total_mm)
        throw std::invalid_argument("ShaftSpec: invalid lengths");
    if (s.d_in_mm <= 0.0 || s.d_in_post_mm <= 0.0 || s.d_out_mm <= 0.0 ||
        s.d_outer_mm <= 0.0)
        throw std::invalid_argument("ShaftSpec: diameters must be positive");
    if (s.has_teeth()) {
        if (!s.d_inner_mm)
            throw std::invalid_argument("ShaftSpec: toothed model needs d_inner");
        if (*s.d_inner_mm >= s.d_outer_mm)
            throw std::invalid_argument("ShaftSpec: d_inner must be below d_outer");
        if (s.profile_depth_mm < 1.0 || s.profile_depth_mm > 6.0)
            throw std::invalid_argument(
                "ShaftSpec: profile depth outside the 1..6 mm manufacturing range");
        if (s.tooth_fill_fraction <= 0.0 || s.tooth_fill_fraction >= 1.0)
            throw std::invalid_argument("ShaftSpec: fill fraction must be in (0,1)");
        if (s.n_inlet_passages <= 0 || s.n_outlet_passages <= 0 ||
            s.d_passage_in_mm <= 0.0 || s.d_passage_out_mm <= 0.0)
            throw std::invalid_argument("ShaftSpec: invalid radial passage layout");
    }
}

// Mean channel diameter: the groove spans [d_inner/2, d_inner/2 + depth].
double channel_mean_diameter_mm(const ShaftSpec& s) {
    return *s.d_inner_mm + s.profile_depth_mm;
}

FlowSegment make_axial_bore(double diameter_m, double length_m, bool heated,
                            double wall_resistance) {
    FlowSegment seg;
    seg.kind = SegmentKind::axial_core;
    seg.length = length_m;
    seg.n_parallel = 1;
    seg.flow_area = kPi * diameter_m * diameter_m / 4.0;
    seg.wetted_perimeter = kPi * diameter_m;
    seg.hydraulic_diameter = hydraulic_diameter(seg.flow_area, seg.wetted_perimeter);
    seg.mean_radius = 0.0;
    seg.radius_start = 0.0;
    seg.radius_end = 0.0;
    seg.heated = heated;
    seg.heat_exchange_area = kPi * diameter_m * length_m;
    seg.wall_resistance_geom = heated ? wall_resistance : 0.0;
    return seg;
}

FlowSegment make_radial_group(SegmentKind kind, int n, double hole_diameter_m,
                              double r_from, double r_to) {
    FlowSegment seg;
    seg.kind = kind;
    seg.n_parallel = n;
    seg.length = std::abs(r_to - r_from);
    const double area_one = kPi * hole_diameter_m * hole_diameter_m / 4.0;
    seg.flow_area = n * area_one;
    seg.wetted_perimeter = n * kPi * hole_diameter_m;
    seg.hydraulic_diameter = hydraulic_diameter(area_one, kPi * hole_diameter_m);
    seg.radius_start = r_from;
    seg.radius_end = r_to;
    seg.mean_radius = 0.5 * (r_from + r_to);
    seg.heated = false;
    seg.heat_exchange_area = n * kPi * hole_diameter_m * seg.length;
    return seg;
}

}  // namespace

ShaftSpec preset(int model_id) {
    ShaftSpec s;
    s.model_id = model_id;
    switch (model_id) {
        case 1:
            s.length_total_mm = 340.35;
            s.length_tempfix_mm = 187.3;
            s.d_in_mm = 11.3;
            s.d_in_post_mm = 9.0;
            s.d_out_mm = 18.0;
            s.d_outer_mm = 52.1;
            s.fix_temp_area_mm2 = 30660.0;
            s.interface_area_mm2 = 41961.0;
            s.inner_profile = InnerProfile::none;
            break;
        case 2:
            s.length_total_mm = 340.35;
            s.length_tempfix_mm = 169.2;
            s.d_in_mm = 11.3;
            s.d_in_post_mm = 9.0;
            s.d_out_mm = 18.0;
            s.d_out_pre_mm = 18.0;
            s.d_outer_mm = 56.6;
            s.d_inner_mm = 47.8;
            s.fix_temp_area_mm2 = 35476.0;
            s.interface_area_mm2 = 47547.0;
            s.n_inlet_passages = 7;
            s.d_passage_in_mm = 4.5;
            s.n_outlet_passages = 7;
            s.d_passage_out_mm = 4.5;
            s.n_tooth_channels = 21;
            s.profile_depth_mm = 4.4;  // radial budget (d_outer - d_inner)/2
            s.inner_profile = InnerProfile::smooth;
            break;
        case 3:
            s.length_total_mm = 340.35;
            s.length_tempfix_mm = 166.6;
            s.d_in_mm = 11.0;
            s.d_in_post_mm = 9.0;
            s.d_out_mm = 20.0;
            s.d_out_pre_mm = 18.0;
            s.d_outer_mm = 56.6;
            s.d_inner_mm = 45.6;
            s.fix_temp_area_mm2 = 34968.0;
            s.interface_area_mm2 = 46489.0;
            s.n_inlet_passages = 7;
            s.d_passage_in_mm = 4.5;
            s.n_outlet_passages = 7;
            s.d_passage_out_mm = 4.5;
            s.n_tooth_channels = 21;
            // Same casing tooth profile as model 2; the wavy inner tube opens
            // the channel instead of deepening it.
            s.profile_depth_mm = 4.4;
            s.inner_profile = InnerProfile::wavy;
            s.open_area_factor = 1.15;
            s.wetted_perimeter_factor = 0.95;
            break;
        case 4:
            s.length_total_mm = 359.05;
            s.length_tempfix_mm = 171.2;
            s.d_in_mm = 11.0;
            s.d_in_post_mm = 9.0;
            s.d_out_mm = 20.0;
            s.d_out_pre_mm = 18.0;
            s.d_outer_mm = 98.0;
            s.d_inner_mm = 88.2;
            s.fix_temp_area_mm2 = 63882.0;
            s.interface_area_mm2 = 90393.0;
            s.n_inlet_passages = 12;
            s.d_passage_in_mm = 6.0;
            s.n_outlet_passages = 12;
            s.d_passage_out_mm = 6.0;
            s.n_tooth_channels = 36;
            s.profile_depth_mm = 4.9;
            s.inner_profile = InnerProfile::smooth;
            break;
        default:
            throw std::invalid_argument("preset: unknown model_id " +
                                        std::to_string(model_id));
    }
    return s;
}

double hydraulic_diameter(double area, double perimeter) {
    if (area <= 0.0 || perimeter <= 0.0)
        throw std::invalid_argument("hydraulic_diameter: area and perimeter must be > 0");
    return 4.0 * area / perimeter;
}

double channel_width_mm(const ShaftSpec& spec) {
    const double pitch = kPi * channel_mean_diameter_mm(spec) / spec.n_tooth_channels;
    return (1.0 - spec.tooth_fill_fraction) * pitch;
}

double heated_contact_area_mm2(const ShaftSpec& spec) {
    // Groove floor plus the two tooth flanks; the inner-tube closure is the
    // cold side and does not count.
    const double per_channel = channel_width_mm(spec) + 2.0 * spec.profile_depth_mm;
    return spec.n_tooth_channels * per_channel * spec.length_tempfix_mm;
}

CalibrationResult calibrate_fill_fraction(const ShaftSpec& spec,
                                          bool full_length_interface) {
    if (!spec.has_teeth())
        throw std::invalid_argument("calibrate_fill_fraction: model has no tooth channels");
    validate(spec);

    CalibrationResult result;
    result.spec = spec;
    result.target_area_mm2 = spec.interface_area_mm2;
    if (full_length_interface)
        result.target_area_mm2 *= spec.length_tempfix_mm / spec.length_total_mm;

    const double target = result.target_area_mm2;
    auto area_at = [&spec](double fill) {
        ShaftSpec s = spec;
        s.tooth_fill_fraction = fill;
        return heated_contact_area_mm2(s);
    };

    // Contact area is strictly decreasing in fill (wider teeth, narrower
    // grooves). Clamp to the nearest bound when the root is out of range.
    double lo = 0.2, hi = 0.8;
    const double a_lo = area_at(lo);
    const double a_hi = area_at(hi);
    if (target > a_lo) {
        result.spec.tooth_fill_fraction = lo;
        result.heated_area_mm2 = a_lo;
        result.in_range = false;
        return result;
    }
    if (target < a_hi) {
        result.spec.tooth_fill_fraction = hi;
        result.heated_area_mm2 = a_hi;
        result.in_range = false;
        return result;
    }
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (area_at(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    const double fill = 0.5 * (lo + hi);
    result.spec.tooth_fill_fraction = fill;
    result.heated_area_mm2 = area_at(fill);
    result.in_range =
        std::abs(result.heated_area_mm2 - target) <= 0.001 * target;
    return result;
}

ChannelNetwork build_network(const ShaftSpec& spec, int n_axial_segments) {
    validate(spec);
    if (n_axial_segments < 10)
        throw std::invalid_argument("build_network: need at least 10 axial segments");

    ChannelNetwork net;
    net.spec = spec;

    const double l_total = spec.length_total_mm * kMmToM;
    const double l_heated = spec.length_tempfix_mm * kMmToM;

    if (!spec.has_teeth()) {
        // Hollow shaft: one bore of d_out over the full length, with the
        // fixed-temperature window centred. Segment counts per stretch are
        // proportional to length so no segment straddles the window edge.
        const double d = spec.d_out_mm * kMmToM;
        const double r_bore = d / 2.0;
        const double r_outer = spec.d_outer_mm * kMmToM / 2.0;
        const double wall_resistance =
            r_bore * std::log(r_outer / r_bore);  // divided by k_steel in the solver
        const double l_end = 0.5 * (l_total - l_heated);

        auto emit = [&](double length, bool heated, int count) {
            if (length <= 0.0 || count <= 0) return;
            const double piece = length / count;
            for (int i = 0; i < count; ++i) {
                net.segments.push_back(
                    make_axial_bore(d, piece, heated, heated ? wall_resistance : 0.0));
            }
        };
        const int n_heat = std::max(
            1, static_cast<int>(std::lround(n_axial_segments * l_heated / l_total)));
        const int n_end = std::max(
            1, static_cast<int>(std::lround(n_axial_segments * l_end / l_total)));
        emit(l_end, false, n_end);
        emit(l_heated, true, n_heat);
        emit(l_end, false, n_end);
    } else {
        const double depth = spec.profile_depth_mm;
        const double floor_d_mm = *spec.d_inner_mm + 2.0 * depth;
        const double width_mm = channel_width_mm(spec);
        if (width_mm <= 0.0)
            throw std::invalid_argument("build_network: channel width is not positive");
        if (floor_d_mm > spec.d_outer_mm - 2.0 * spec.min_wall_mm + 1e-9)
            throw std::invalid_argument(
                "build_network: channel floor exceeds the casing radial budget");

        const double r_feed = spec.d_in_post_mm * kMmToM / 2.0;
        const double r_exit = spec.d_out_mm * kMmToM / 2.0;
        const double r_channel = channel_mean_diameter_mm(spec) * kMmToM / 2.0;
        const double l_end = 0.5 * (l_total - l_heated);

        // Feed bore to the far-end plug.
        net.segments.push_back(
            make_axial_bore(spec.d_in_post_mm * kMmToM, l_end, false, 0.0));
        net.segments.push_back(make_radial_group(SegmentKind::radial_inlet,
                                                 spec.n_inlet_passages,
                                                 spec.d_passage_in_mm * kMmToM,
                                                 r_feed, r_channel));

        // Tooth channels over the fixed-temperature stretch.
        const double w = width_mm * kMmToM;
        const double dth = depth * kMmToM;
        const double area_one = w * dth * spec.open_area_factor;
        const double perim_one = 2.0 * (w + dth) * spec.wetted_perimeter_factor;
        const double contact_per_len = spec.n_tooth_channels * (w + 2.0 * dth);
        const double r_floor = floor_d_mm * kMmToM / 2.0;
        const double r_outer = spec.d_outer_mm * kMmToM / 2.0;
        const double wall_resistance =
            r_floor < r_outer ? r_floor * std::log(r_outer / r_floor) : 0.0;

        const double piece = l_heated / n_axial_segments;
        for (int i = 0; i < n_axial_segments; ++i) {
            FlowSegment seg;
            seg.kind = SegmentKind::tooth_channel;
            seg.n_parallel = spec.n_tooth_channels;
            seg.length = piece;
            seg.flow_area = spec.n_tooth_channels * area_one;
            seg.wetted_perimeter = spec.n_tooth_channels * perim_one;
            seg.hydraulic_diameter = hydraulic_diameter(area_one, perim_one);
            seg.mean_radius = r_channel;
            seg.radius_start = r_channel;
            seg.radius_end = r_channel;
            seg.heated = true;
            seg.heat_exchange_area = contact_per_len * piece;
            seg.wall_resistance_geom = wall_resistance;
            net.segments.push_back(seg);
        }

        net.segments.push_back(make_radial_group(SegmentKind::radial_outlet,
                                                 spec.n_outlet_passages,
                                                 spec.d_passage_out_mm * kMmToM,
                                                 r_channel, r_exit));
        net.segments.push_back(
            make_axial_bore(spec.d_out_mm * kMmToM, l_end, false, 0.0));
    }

    for (const FlowSegment& seg : net.segments)
        if (seg.heated) net.total_heated_area += seg.heat_exchange_area;
    return net;
}

std::string describe(const ShaftSpec& s) {
    char buf[256];
    std::string out;
    auto kv = [&out, &buf](const char* key, double value) {
        std::snprintf(buf, sizeof(buf), "%s: %.6g\n", key, value);
        out += buf;
    };
    auto kv_opt = [&out, &buf](const char* key, const std::optional<double>& value) {
        if (value)
            std::snprintf(buf, sizeof(buf), "%s: %.6g\n", key, *value);
        else
            std::snprintf(buf, sizeof(buf), "%s: -\n", key);
        out += buf;
    };
    out += "model_id: " + std::to_string(s.model_id) + "\n";
    kv("length_total_mm", s.length_total_mm);
    kv("length_tempfix_mm", s.length_tempfix_mm);
    kv("d_in_mm", s.d_in_mm);
    kv("d_in_post_mm", s.d_in_post_mm);
    kv("d_out_mm", s.d_out_mm);
    kv_opt("d_out_pre_mm", s.d_out_pre_mm);
    kv("d_outer_mm", s.d_outer_mm);
    kv_opt("d_inner_mm", s.d_inner_mm);
    kv("fix_temp_area_mm2", s.fix_temp_area_mm2);
    kv("interface_area_mm2", s.interface_area_mm2);
    out += "n_inlet_passages: " + std::to_string(s.n_inlet_passages) + "\n";
    kv("d_passage_in_mm", s.d_passage_in_mm);
    out += "n_outlet_passages: " + std::to_string(s.n_outlet_passages) + "\n";
    kv("d_passage_out_mm", s.d_passage_out_mm);
    out += "n_tooth_channels: " + std::to_string(s.n_tooth_channels) + "\n";
    kv("profile_depth_mm", s.profile_depth_mm);
    kv("tooth_fill_fraction", s.tooth_fill_fraction);
    switch (s.inner_profile) {
        case InnerProfile::none: out += "inner_profile: none\n"; break;
        case InnerProfile::smooth: out += "inner_profile: smooth\n"; break;
        case InnerProfile::wavy: out += "inner_profile: wavy\n"; break;
    }
    kv("open_area_factor", s.open_area_factor);
    kv("wetted_perimeter_factor", s.wetted_perimeter_factor);
    if (s.has_teeth()) {
        kv("channel_width_mm", channel_width_mm(s));
        kv("heated_contact_area_mm2", heated_contact_area_mm2(s));
    }
    return out;
}

}  // namespace rotorcool
