#include "rotorcool/properties.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotorcool {

namespace {

// Fuchs FES 821-6436A ATF, 40..120 degC in 5 degC steps.
std::vector<FluidRow> builtin_oil_rows() {
    return {
        //  T      rho     nu          cp     k     mu
        {40.0, 826.3, 0.0000179, 1980.0, 0.14, 0.01479077},
        {45.0, 823.1, 0.0000150, 2000.0, 0.14, 0.0123465},
        {50.0, 820.0, 0.0000127, 2020.0, 0.14, 0.010414},
        {55.0, 816.8, 0.0000109, 2040.0, 0.14, 0.00890312},
        {60.0, 813.6, 0.0000094, 2060.0, 0.14, 0.00764784},
        {65.0, 810.4, 0.0000083, 2080.0, 0.13, 0.00672632},
        {70.0, 807.2, 0.0000073, 2090.0, 0.13, 0.00589256},
        {75.0, 804.0, 0.0000065, 2110.0, 0.13, 0.005226},
        {80.0, 800.8, 0.0000058, 2130.0, 0.13, 0.00464464},
        {85.0, 797.5, 0.0000052, 2150.0, 0.13, 0.004147},
        {90.0, 794.3, 0.0000048, 2170.0, 0.13, 0.00381264},
        {95.0, 791.1, 0.0000044, 2190.0, 0.13, 0.00348084},
        {100.0, 787.9, 0.0000040, 2210.0, 0.13, 0.0031516},
        {105.0, 784.6, 0.0000037, 2220.0, 0.13, 0.00290302},
        {110.0, 781.4, 0.0000034, 2240.0, 0.13, 0.00265676},
        {115.0, 778.1, 0.0000032, 2260.0, 0.13, 0.00248992},
        {120.0, 774.9, 0.0000030, 2280.0, 0.13, 0.0023247},
    };
}

// 20MnCr5 case-hardening steel.
std::vector<SolidRow> builtin_steel_rows() {
    return {
        //  T     rho     k      a     r_el   cp
        {20.0, 7850.0, 45.90, 12.7, 0.227, 0.46},
        {100.0, 7850.0, 45.77, 12.0, 0.276, 0.47},
        {200.0, 7850.0, 45.60, 11.0, 0.346, 0.49},
    };
}

// Returns the index i of the panel [rows[i], rows[i+1]] bracketing t, with t
// already clamped into the table range.
template <typename Row>
std::size_t bracket(const std::vector<Row>& rows, double t) {
    std::size_t lo = 0;
    std::size_t hi = rows.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (rows[mid].temperature_c <= t)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

FluidPropertyTable::FluidPropertyTable(std::vector<FluidRow> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty())
        throw std::invalid_argument("FluidPropertyTable: empty table");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const FluidRow& r = rows_[i];
        if (r.density <= 0.0 || r.kinematic_viscosity <= 0.0 ||
            r.specific_heat <= 0.0 || r.thermal_conductivity <= 0.0 ||
            r.dynamic_viscosity <= 0.0) {
            throw std::invalid_argument(
                "FluidPropertyTable: nonpositive value at row " + std::to_string(i));
        }
        if (i > 0) {
            const FluidRow& p = rows_[i - 1];
            if (r.temperature_c <= p.temperature_c)
                throw std::invalid_argument(
                    "FluidPropertyTable: temperatures not strictly increasing at row " +
                    std::to_string(i));
            if (r.density >= p.density)
                throw std::invalid_argument(
                    "FluidPropertyTable: density not strictly decreasing at row " +
                    std::to_string(i));
            if (r.dynamic_viscosity >= p.dynamic_viscosity ||
                r.kinematic_viscosity >= p.kinematic_viscosity)
                throw std::invalid_argument(
                    "FluidPropertyTable: viscosity not strictly decreasing at row " +
                    std::to_string(i));
        }
    }
    // The mu = rho*nu transcription check lives in consistency_check(),
    // which reports offending rows instead of refusing the table.
}

SolidPropertyTable::SolidPropertyTable(std::vector<SolidRow> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty())
        throw std::invalid_argument("SolidPropertyTable: empty table");
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        if (rows_[i].temperature_c <= rows_[i - 1].temperature_c)
            throw std::invalid_argument(
                "SolidPropertyTable: temperatures not strictly increasing");
        if (rows_[i].thermal_conductivity >= rows_[i - 1].thermal_conductivity)
            throw std::invalid_argument(
                "SolidPropertyTable: conductivity not decreasing");
    }
}

const FluidPropertyTable& oil_table() {
    static const FluidPropertyTable table(builtin_oil_rows());
    return table;
}

const SolidPropertyTable& steel_table() {
    static const SolidPropertyTable table(builtin_steel_rows());
    return table;
}

FluidState fluid_at(const FluidPropertyTable& table, double temperature_c) {
    const auto& rows = table.rows();
    FluidState s{};
    s.temperature_c = temperature_c;
    s.clamped = false;

    double t = temperature_c;
    if (t <= rows.front().temperature_c) {
        t = rows.front().temperature_c;
        s.clamped = temperature_c < rows.front().temperature_c;
    } else if (t >= rows.back().temperature_c) {
        t = rows.back().temperature_c;
        s.clamped = temperature_c > rows.back().temperature_c;
    }

    const std::size_t i = bracket(rows, t);
    const FluidRow& a = rows[i];
    if (t == a.temperature_c) {
        // Node hit: return the stored row bitwise.
        s.density = a.density;
        s.kinematic_viscosity = a.kinematic_viscosity;
        s.specific_heat = a.specific_heat;
        s.thermal_conductivity = a.thermal_conductivity;
        s.dynamic_viscosity = a.dynamic_viscosity;
    } else {
        const FluidRow& b = rows[i + 1];
        const double w = (t - a.temperature_c) / (b.temperature_c - a.temperature_c);
        s.density = a.density + w * (b.density - a.density);
        s.kinematic_viscosity =
            a.kinematic_viscosity + w * (b.kinematic_viscosity - a.kinematic_viscosity);
        s.specific_heat = a.specific_heat + w * (b.specific_heat - a.specific_heat);
        s.thermal_conductivity =
            a.thermal_conductivity + w * (b.thermal_conductivity - a.thermal_conductivity);
        s.dynamic_viscosity =
            a.dynamic_viscosity + w * (b.dynamic_viscosity - a.dynamic_viscosity);
    }
    s.prandtl = s.dynamic_viscosity * s.specific_heat / s.thermal_conductivity;
    return s;
}

SolidState solid_at(const SolidPropertyTable& table, double temperature_c) {
    const auto& rows = table.rows();
    double t = std::clamp(temperature_c, rows.front().temperature_c,
                          rows.back().temperature_c);
    const std::size_t i = bracket(rows, t);
    const SolidRow& a = rows[i];
    if (t == a.temperature_c)
        return {a.thermal_conductivity, a.density, a.specific_heat};
    const SolidRow& b = rows[i + 1];
    const double w = (t - a.temperature_c) / (b.temperature_c - a.temperature_c);
    return {
        a.thermal_conductivity + w * (b.thermal_conductivity - a.thermal_conductivity),
        a.density + w * (b.density - a.density),
        a.specific_heat + w * (b.specific_heat - a.specific_heat),
    };
}

ConsistencyReport consistency_check(const FluidPropertyTable& table, double threshold) {
    ConsistencyReport report;
    const auto& rows = table.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double mu_from_nu = rows[i].density * rows[i].kinematic_viscosity;
        const double rel =
            std::abs(rows[i].dynamic_viscosity - mu_from_nu) / rows[i].dynamic_viscosity;
        report.max_relative_discrepancy = std::max(report.max_relative_discrepancy, rel);
        if (rel > threshold) {
            report.offending_rows.push_back(i);
            report.pass = false;
        }
    }
    return report;
}

}  // namespace rotorcool
