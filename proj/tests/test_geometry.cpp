#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "rotorcool/geometry.hpp"

using namespace rotorcool;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("presets reproduce the catalogue rows") {
    const ShaftSpec m2 = preset(2);
    CHECK(m2.d_outer_mm == 56.6);
    CHECK(m2.d_inner_mm.value() == 47.8);
    CHECK(m2.n_tooth_channels == 21);
    CHECK(m2.n_inlet_passages == 7);
    CHECK(m2.d_passage_in_mm == 4.5);
    CHECK(m2.interface_area_mm2 == 47547.0);
    CHECK(m2.profile_depth_mm == doctest::Approx(4.4));

    const ShaftSpec m1 = preset(1);
    CHECK(m1.n_tooth_channels == 0);
    CHECK_FALSE(m1.d_inner_mm.has_value());
    CHECK(m1.d_out_mm == 18.0);
    CHECK(m1.interface_area_mm2 == 41961.0);

    const ShaftSpec m4 = preset(4);
    CHECK(m4.n_tooth_channels == 36);
    CHECK(m4.n_inlet_passages == 12);
    CHECK(m4.d_passage_in_mm == 6.0);
    CHECK(m4.length_total_mm == 359.05);

    CHECK_THROWS_AS(preset(5), std::invalid_argument);
    CHECK_THROWS_AS(preset(0), std::invalid_argument);
}

TEST_CASE("interface-area ratio between models 4 and 1") {
    const double ratio = preset(4).interface_area_mm2 / preset(1).interface_area_mm2;
    CHECK(ratio == doctest::Approx(2.154).epsilon(5e-4));
}

TEST_CASE("model 3 differs from model 2 in exactly the catalogue fields") {
    const ShaftSpec a = preset(2);
    const ShaftSpec b = preset(3);
    // Differing: length_tempfix, d_in, d_out, d_inner, both areas, the inner
    // profile and its two wavy-channel factors.
    CHECK(a.length_tempfix_mm != b.length_tempfix_mm);
    CHECK(a.d_in_mm != b.d_in_mm);
    CHECK(a.d_out_mm != b.d_out_mm);
    CHECK(a.d_inner_mm.value() != b.d_inner_mm.value());
    CHECK(a.fix_temp_area_mm2 != b.fix_temp_area_mm2);
    CHECK(a.interface_area_mm2 != b.interface_area_mm2);
    CHECK(a.inner_profile == InnerProfile::smooth);
    CHECK(b.inner_profile == InnerProfile::wavy);
    CHECK(b.open_area_factor == 1.15);
    CHECK(b.wetted_perimeter_factor == 0.95);
    // Everything else is identical.
    CHECK(a.length_total_mm == b.length_total_mm);
    CHECK(a.d_in_post_mm == b.d_in_post_mm);
    CHECK(a.d_out_pre_mm.value() == b.d_out_pre_mm.value());
    CHECK(a.d_outer_mm == b.d_outer_mm);
    CHECK(a.n_inlet_passages == b.n_inlet_passages);
    CHECK(a.d_passage_in_mm == b.d_passage_in_mm);
    CHECK(a.n_outlet_passages == b.n_outlet_passages);
    CHECK(a.d_passage_out_mm == b.d_passage_out_mm);
    CHECK(a.n_tooth_channels == b.n_tooth_channels);
    CHECK(a.profile_depth_mm == b.profile_depth_mm);
    CHECK(a.tooth_fill_fraction == b.tooth_fill_fraction);
}

TEST_CASE("hydraulic diameter") {
    // Circular duct recovers its own diameter.
    const double d = 0.018;
    CHECK(hydraulic_diameter(kPi * d * d / 4.0, kPi * d) ==
          doctest::Approx(d).epsilon(1e-14));
    // Rectangle 4.4 x 3.5 mm: 2ab/(a+b).
    const double a = 4.4e-3, b = 3.5e-3;
    CHECK(hydraulic_diameter(a * b, 2.0 * (a + b)) ==
          doctest::Approx(3.899e-3).epsilon(1e-3));
    CHECK_THROWS_AS(hydraulic_diameter(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hydraulic_diameter(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("model 1 network: single heated bore") {
    const ChannelNetwork net = build_network(preset(1), 100);
    for (const FlowSegment& seg : net.segments) {
        CHECK(seg.kind == SegmentKind::axial_core);
        CHECK(seg.mean_radius == 0.0);
        CHECK(seg.hydraulic_diameter == doctest::Approx(0.018).epsilon(1e-12));
    }
    // Heated area: pi * 0.018 * 0.1873.
    CHECK(net.total_heated_area ==
          doctest::Approx(kPi * 0.018 * 0.1873).epsilon(1e-9));
    // Unheated end stretches exist on both sides.
    CHECK_FALSE(net.segments.front().heated);
    CHECK_FALSE(net.segments.back().heated);
}

TEST_CASE("model 2 network: channel cross-section at default fill") {
    const ShaftSpec spec = preset(2);  // fill 0.5 before calibration
    const ChannelNetwork net = build_network(spec, 100);

    const double width = channel_width_mm(spec);
    CHECK(width == doctest::Approx(0.5 * kPi * 52.2 / 21.0).epsilon(1e-12));
    CHECK(width == doctest::Approx(3.90).epsilon(2e-3));

    bool found_channel = false;
    for (const FlowSegment& seg : net.segments) {
        if (seg.kind != SegmentKind::tooth_channel) continue;
        found_channel = true;
        CHECK(seg.n_parallel == 21);
        CHECK(seg.hydraulic_diameter == doctest::Approx(4.14e-3).epsilon(2e-3));
        CHECK(seg.heated);
        CHECK(seg.mean_radius == doctest::Approx(0.0261).epsilon(1e-12));
    }
    CHECK(found_channel);
}

TEST_CASE("network connectivity and segment ordering for toothed models") {
    for (int model : {2, 3, 4}) {
        const ChannelNetwork net = build_network(preset(model), 50);
        REQUIRE(net.segments.size() == 50 + 4);
        CHECK(net.segments[0].kind == SegmentKind::axial_core);
        CHECK(net.segments[1].kind == SegmentKind::radial_inlet);
        for (std::size_t i = 2; i < net.segments.size() - 2; ++i)
            CHECK(net.segments[i].kind == SegmentKind::tooth_channel);
        CHECK(net.segments[net.segments.size() - 2].kind ==
              SegmentKind::radial_outlet);
        CHECK(net.segments.back().kind == SegmentKind::axial_core);

        // Radial spans connect the bores to the channel mean radius.
        const FlowSegment& rin = net.segments[1];
        CHECK(rin.radius_start != rin.radius_end);
        CHECK(rin.radius_end ==
              doctest::Approx(net.segments[2].mean_radius).epsilon(1e-12));
        const FlowSegment& rout = net.segments[net.segments.size() - 2];
        CHECK(rout.radius_start ==
              doctest::Approx(net.segments[2].mean_radius).epsilon(1e-12));
    }
}

TEST_CASE("per-passage hydraulic diameter equals 4A/P to machine precision") {
    for (int model : {1, 2, 3, 4}) {
        const ChannelNetwork net = build_network(preset(model), 37);
        for (const FlowSegment& seg : net.segments) {
            const double area_one = seg.flow_area / seg.n_parallel;
            const double perim_one = seg.wetted_perimeter / seg.n_parallel;
            CHECK(seg.hydraulic_diameter ==
                  doctest::Approx(4.0 * area_one / perim_one).epsilon(1e-14));
        }
    }
}

TEST_CASE("segment count precondition") {
    CHECK_THROWS_AS(build_network(preset(2), 5), std::invalid_argument);
    CHECK_THROWS_AS(build_network(preset(1), 9), std::invalid_argument);
    CHECK_NOTHROW(build_network(preset(1), 10));
}

TEST_CASE("geometric impossibility is rejected with a diagnostic") {
    ShaftSpec s = preset(2);
    s.tooth_fill_fraction = 1.0;  // groove width collapses
    CHECK_THROWS_AS(build_network(s, 20), std::invalid_argument);

    s = preset(2);
    s.profile_depth_mm = 5.5;  // floor would sit outside the casing
    CHECK_THROWS_AS(build_network(s, 20), std::invalid_argument);

    s = preset(2);
    s.min_wall_mm = 1.0;  // default depth leaves no wall at all
    CHECK_THROWS_AS(build_network(s, 20), std::invalid_argument);
}

TEST_CASE("fill-fraction calibration hits the catalogue interface areas") {
    // Golden roots from the linear contact-area relation, recorded after an
    // independent bisection run.
    struct Expect {
        int model;
        double fill;
    };
    for (const Expect& e : {Expect{2, 0.413318}, Expect{3, 0.400013}, Expect{4, 0.401001}}) {
        const CalibrationResult cal = calibrate_fill_fraction(preset(e.model));
        CHECK(cal.in_range);
        CHECK(cal.spec.tooth_fill_fraction == doctest::Approx(e.fill).epsilon(1e-4));
        CHECK(cal.heated_area_mm2 ==
              doctest::Approx(preset(e.model).interface_area_mm2).epsilon(1e-3));
        // The compiled network's heated area matches the target within 10%.
        const ChannelNetwork net = build_network(cal.spec, 100);
        CHECK(net.total_heated_area * 1e6 ==
              doctest::Approx(cal.spec.interface_area_mm2).epsilon(0.1));
    }
    CHECK_THROWS_AS(calibrate_fill_fraction(preset(1)), std::invalid_argument);
}

TEST_CASE("calibration is a fixed point when the area already matches") {
    ShaftSpec s = preset(2);
    s.tooth_fill_fraction = 0.5;
    s.interface_area_mm2 = heated_contact_area_mm2(s);
    const CalibrationResult cal = calibrate_fill_fraction(s);
    CHECK(cal.in_range);
    CHECK(cal.spec.tooth_fill_fraction == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("calibration clamps and flags when the target is unreachable") {
    ShaftSpec s = preset(2);
    s.interface_area_mm2 = 1e7;  // far above any achievable contact area
    const CalibrationResult cal = calibrate_fill_fraction(s);
    CHECK_FALSE(cal.in_range);
    CHECK(cal.spec.tooth_fill_fraction == 0.2);

    s.interface_area_mm2 = 100.0;  // far below
    const CalibrationResult low = calibrate_fill_fraction(s);
    CHECK_FALSE(low.in_range);
    CHECK(low.spec.tooth_fill_fraction == 0.8);
}

TEST_CASE("full-length interface interpretation scales the target") {
    const ShaftSpec s = preset(2);
    const CalibrationResult cal = calibrate_fill_fraction(s, true);
    CHECK(cal.target_area_mm2 ==
          doctest::Approx(47547.0 * 169.2 / 340.35).epsilon(1e-12));
    // The scaled target is below the reachable band, so the result clamps.
    CHECK_FALSE(cal.in_range);
}

TEST_CASE("describe emits a fixed-order block") {
    const std::string text = describe(preset(1));
    CHECK(text.find("model_id: 1\n") == 0);
    CHECK(text.find("length_total_mm: 340.35\n") != std::string::npos);
    CHECK(text.find("d_out_pre_mm: -\n") != std::string::npos);
    CHECK(text.find("inner_profile: none\n") != std::string::npos);
    // Field order is stable: total length before tempfix length.
    CHECK(text.find("length_total_mm") < text.find("length_tempfix_mm"));
}
