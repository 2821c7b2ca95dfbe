// SPDX-License-Identifier: Apache-2.0
//
// curvant -- conformal multi-dipole antenna design toolkit

#include "curvant/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "curvant/constants.hpp"

namespace curvant::geom {

namespace {

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

void TubeSpec::validate() const {
    require(r1_m > 0.0, "tube radius r1 must be positive");
    require(l1_m > 0.0, "tube length l1 must be positive");
}

void DesignBounds::validate() const {
    require(d1_min_m < d1_max_m, "d1 bounds: min must be below max");
    require(theta1_min_deg < theta1_max_deg, "theta1 bounds: min must be below max");
    require(l3_min_m < l3_max_m, "l3 bounds: min must be below max");
    require(d1_step_m > 0.0, "d1 step must be positive");
    require(theta1_inc_deg > 0.0, "theta1 increment step must be positive");
    require(theta1_dec_deg > 0.0, "theta1 decrement step must be positive");
    require(l3_step_m > 0.0, "l3 step must be positive");
}

ClampResult clamp_and_flag(const DesignVariables& vars, const DesignBounds& bounds) {
    ClampResult r;
    r.vars = vars;
    r.vars.d1_m = clamp(vars.d1_m, bounds.d1_min_m, bounds.d1_max_m);
    r.vars.theta1_deg = clamp(vars.theta1_deg, bounds.theta1_min_deg, bounds.theta1_max_deg);
    for (int i = 0; i < 3; ++i)
        r.vars.l3_m[i] = clamp(vars.l3_m[i], bounds.l3_min_m, bounds.l3_max_m);

    r.flags[0] = r.vars.d1_m <= bounds.d1_min_m;
    r.flags[1] = r.vars.d1_m >= bounds.d1_max_m;
    r.flags[2] = r.vars.theta1_deg <= bounds.theta1_min_deg;
    r.flags[3] = r.vars.theta1_deg >= bounds.theta1_max_deg;
    for (int i = 0; i < 3; ++i) {
        r.flags[4 + 2 * i] = r.vars.l3_m[i] <= bounds.l3_min_m;
        r.flags[5 + 2 * i] = r.vars.l3_m[i] >= bounds.l3_max_m;
    }
    return r;
}

bool in_bounds(const DesignVariables& vars, const DesignBounds& bounds) {
    return clamp_and_flag(vars, bounds).vars == vars;
}

WireModel& WireModel::append(const WireModel& other) {
    const std::size_t offset = segments.size();
    segments.insert(segments.end(), other.segments.begin(), other.segments.end());
    for (const Port& p : other.ports)
        ports.push_back({p.segment + offset, p.sign});
    return *this;
}

MeshLayout plan_tube_mesh(const TubeSpec& tube, double frequency_hz,
                          const MeshParams& params) {
    tube.validate();
    require(frequency_hz > 0.0, "design frequency must be positive");
    require(params.pitch_divisor > 0.0, "mesh pitch divisor must be positive");

    const double lambda = kSpeedOfLight / frequency_hz;
    const double target = lambda / params.pitch_divisor;

    MeshLayout layout;
    int n_ring = static_cast<int>(std::ceil(2.0 * kPi * tube.r1_m / target));
    n_ring = std::max(n_ring, params.min_ring_segments);
    if (n_ring % 2 != 0) ++n_ring; // even ring count for azimuthal smoothness
    layout.ring_segments = n_ring;
    layout.axial_cells = std::max(1, static_cast<int>(std::ceil(tube.l1_m / target)));

    const double arc_pitch = 2.0 * kPi * tube.r1_m / n_ring;
    const double axial_pitch = tube.l1_m / layout.axial_cells;
    layout.pitch_m = std::max(arc_pitch, axial_pitch);
    layout.wire_radius_m = layout.pitch_m / (2.0 * kPi); // equal-area rule
    return layout;
}

WireModel build_tube_mesh(const TubeSpec& tube, double frequency_hz,
                          const MeshParams& params) {
    const MeshLayout layout = plan_tube_mesh(tube, frequency_hz, params);
    const int n_ring = layout.ring_segments;
    const int n_ax = layout.axial_cells;
    const double a = layout.wire_radius_m;

    // Grid nodes: (n_ax + 1) rings of n_ring points on the tube surface.
    auto node = [&](int level, int j) -> Vec3 {
        const double phi = 2.0 * kPi * j / n_ring;
        const double z = -0.5 * tube.l1_m + tube.l1_m * level / n_ax;
        return {tube.r1_m * std::cos(phi), tube.r1_m * std::sin(phi), z};
    };

    const double chord = 2.0 * tube.r1_m * std::sin(kPi / n_ring);
    const double axial_pitch = tube.l1_m / n_ax;
    const double min_len = std::min(chord, axial_pitch);
    if (min_len / a <= 4.0)
        throw std::invalid_argument(
            "tube mesh: pitch forces segment-length/radius <= 4 (thin-wire validity)");

    WireModel model;
    model.segments.reserve(static_cast<std::size_t>(n_ring) * (2 * n_ax + 1));

    // Rings, level by level.
    for (int level = 0; level <= n_ax; ++level)
        for (int j = 0; j < n_ring; ++j)
            model.segments.push_back({node(level, j), node(level, (j + 1) % n_ring), a});

    // Axial runs, one straight run per azimuthal node so the deck exporter can
    // group them into single GW cards.
    for (int j = 0; j < n_ring; ++j)
        for (int level = 0; level < n_ax; ++level)
            model.segments.push_back({node(level, j), node(level + 1, j), a});

    return model;
}

WireModel build_dipole_wires(const DesignVariables& vars, const TubeSpec& tube,
                             double frequency_hz, const DipoleParams& params) {
    tube.validate();
    require(frequency_hz > 0.0, "design frequency must be positive");
    require(params.element_radius_m > 0.0, "dipole element radius must be positive");
    require(vars.d1_m > 0.0, "d1 must be positive");

    const double lambda = kSpeedOfLight / frequency_hz;
    const double max_len = lambda / params.segment_divisor;
    const double rho = tube.r1_m + vars.d1_m;
    const double theta1 = deg_to_rad(vars.theta1_deg);

    // Adjacent dipoles collide when the azimuthal arc between their planes is
    // smaller than the element diameter.
    if (theta1 * rho <= 2.0 * params.element_radius_m)
        throw std::invalid_argument("dipoles overlap: azimuthal arc at r1+d1 smaller "
                                    "than the element diameter");

    static constexpr std::array<double, 3> azimuth_sign{-1.0, 0.0, 1.0};
    static constexpr std::array<int, 3> port_sign{+1, -1, +1};

    WireModel model;
    for (int i = 0; i < 3; ++i) {
        const double len = vars.l3_m[i];
        require(len > 0.0, "dipole length must be positive");

        int n = static_cast<int>(std::ceil(len / max_len));
        if (n % 2 == 0) ++n; // odd count so one segment is centered on the feed

        const double phi = azimuth_sign[i] * theta1;
        const Vec3 base{rho * std::cos(phi), rho * std::sin(phi), -0.5 * len};
        const Vec3 step{0.0, 0.0, len / n};

        const std::size_t first = model.segments.size();
        for (int s = 0; s < n; ++s) {
            const Vec3 a = base + step * static_cast<double>(s);
            model.segments.push_back({a, a + step, params.element_radius_m});
        }
        model.ports.push_back({first + static_cast<std::size_t>(n / 2), port_sign[i]});
    }
    return model;
}

WireModel assemble_model(const DesignVariables& vars, const TubeSpec& tube,
                         double frequency_hz, const ModelParams& params) {
    WireModel model = build_tube_mesh(tube, frequency_hz, params.mesh);
    model.append(build_dipole_wires(vars, tube, frequency_hz, params.dipole));
    return model;
}

} // namespace curvant::geom
