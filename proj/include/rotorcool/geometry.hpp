// Parametric shaft geometry (four built-in models) compiled into a
// one-dimensional channel network of flow segments.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rotorcool {

enum class InnerProfile { none, smooth, wavy };

// Parametric description of one shaft. Dimensions are in millimetres, areas
// in mm^2, matching the machine drawing convention used throughout.
struct ShaftSpec {
    int model_id = 0;
    double length_total_mm = 0.0;
    double length_tempfix_mm = 0.0;      // axial extent of the fixed-temperature wall
    double d_in_mm = 0.0;                // inlet bore at the shaft face
    double d_in_post_mm = 0.0;           // feed bore downstream of the entry taper
    double d_out_mm = 0.0;               // exit bore
    std::optional<double> d_out_pre_mm;  // bore upstream of the exit taper
    double d_outer_mm = 0.0;             // shaft outer diameter
    std::optional<double> d_inner_mm;    // inner-tube outer diameter (tube-in-tube models)
    double fix_temp_area_mm2 = 0.0;
    double interface_area_mm2 = 0.0;
    int n_inlet_passages = 0;
    double d_passage_in_mm = 0.0;
    int n_outlet_passages = 0;
    double d_passage_out_mm = 0.0;
    int n_tooth_channels = 0;
    double profile_depth_mm = 0.0;       // radial tooth/groove depth
    double tooth_fill_fraction = 0.5;    // circumferential fraction occupied by teeth
    InnerProfile inner_profile = InnerProfile::none;
    // Wavy-inner-tube adjustment: per-channel flow area multiplier and wetted
    // perimeter multiplier (1.0 = plain rectangular channel).
    double open_area_factor = 1.0;
    double wetted_perimeter_factor = 1.0;
    // Minimum casing wall left radially outside the channel floor. The
    // built-in presets place the floor flush with the outer surface.
    double min_wall_mm = 0.0;

    bool has_teeth() const { return n_tooth_channels > 0; }
};

enum class SegmentKind { axial_core, radial_inlet, radial_outlet, tooth_channel };

// One lump of the serial flow path. A segment stands for a group of
// n_parallel identical passages; flow_area / wetted_perimeter /
// heat_exchange_area are totals across the group, hydraulic_diameter is per
// passage. All quantities are SI (metres).
struct FlowSegment {
    SegmentKind kind = SegmentKind::axial_core;
    double length = 0.0;
    double flow_area = 0.0;
    double wetted_perimeter = 0.0;
    double hydraulic_diameter = 0.0;
    double mean_radius = 0.0;    // segment centroid distance from the spin axis
    double radius_start = 0.0;   // radial segments: hole span end radii
    double radius_end = 0.0;
    bool heated = false;         // true: fixed-temperature wall; false: ambient wall
    double heat_exchange_area = 0.0;
    // Casing conduction geometry factor r_contact * ln(r_outer / r_contact)
    // in metres; the solver divides by the steel conductivity to get the
    // series wall resistance. Heated segments only.
    double wall_resistance_geom = 0.0;
    int n_parallel = 1;
};

struct ChannelNetwork {
    std::vector<FlowSegment> segments;   // ordered inlet to outlet
    double total_heated_area = 0.0;      // sum of heated heat_exchange_area, m^2
    ShaftSpec spec;
};

struct CalibrationResult {
    ShaftSpec spec;                 // with tooth_fill_fraction adjusted
    double heated_area_mm2 = 0.0;   // contact area achieved at the returned fill
    double target_area_mm2 = 0.0;
    bool in_range = true;           // false when the root fell outside [0.2, 0.8]
};

// Table-backed presets for the four shaft models.
ShaftSpec preset(int model_id);

// 4 * area / perimeter. Rejects nonpositive inputs.
double hydraulic_diameter(double area, double perimeter);

// Circumferential groove width at the channel mean radius, mm.
double channel_width_mm(const ShaftSpec& spec);

// Fluid-solid contact area of the heated channel stretch (groove floor plus
// both tooth flanks per channel over the fixed-temperature length), mm^2.
double heated_contact_area_mm2(const ShaftSpec& spec);

// Adjusts tooth_fill_fraction by bisection so the heated contact area matches
// the spec interface area (models 2-4). When full_length_interface is set the
// target is instead scaled by length_tempfix/length_total, treating the
// interface area as covering the whole channel length.
CalibrationResult calibrate_fill_fraction(const ShaftSpec& spec,
                                          bool full_length_interface = false);

// Compiles the spec into the serial network. The tooth-channel run is split
// into n_axial_segments pieces; model 1 splits its bore into unheated / heated
// / unheated stretches with counts proportional to length.
ChannelNetwork build_network(const ShaftSpec& spec, int n_axial_segments);

// Fixed-order key/value block for golden-file comparison.
std::string describe(const ShaftSpec& spec);

}  // namespace rotorcool
