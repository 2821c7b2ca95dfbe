// SPDX-License-Identifier: Apache-2.0
//
// curvant -- conformal multi-dipole antenna design toolkit

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "curvant/vec3.hpp"

namespace curvant::geom {

// Conductive tube the antenna conforms to. Only a fragment of length l1_m
// is modeled; the tube axis is z with the fragment centered on the origin.
struct TubeSpec {
    double r1_m = 0.10;
    double l1_m = 0.25;

    void validate() const; // throws std::invalid_argument
};

// Adjustable antenna dimensions. theta1 is the azimuthal separation between
// adjacent dipole planes; the three dipoles sit at azimuths -theta1, 0, +theta1.
struct DesignVariables {
    double d1_m = 0.03;                          // dipole-to-tube spacing
    double theta1_deg = 45.0;                    // angular separation
    std::array<double, 3> l3_m{0.08, 0.08, 0.08}; // dipole total lengths

    bool operator==(const DesignVariables&) const = default;
};

// Allowed ranges and adjustment steps. theta1 uses asymmetric steps: the
// increment and decrement are configured independently.
struct DesignBounds {
    double d1_min_m = 0.01;
    double d1_max_m = 0.05;
    double d1_step_m = 0.01;

    double theta1_min_deg = 10.0;
    double theta1_max_deg = 90.0;
    double theta1_inc_deg = 1.0;
    double theta1_dec_deg = 0.286;

    double l3_min_m = 0.01;
    double l3_max_m = 0.15;
    double l3_step_m = 0.005;

    void validate() const; // throws std::invalid_argument
};

// (at-min, at-max) pairs in variable order D1, theta1, L3_0, L3_1, L3_2.
using BoundaryFlags = std::array<bool, 10>;

struct ClampResult {
    DesignVariables vars;
    BoundaryFlags flags;
};

// Saturate every variable into its [min, max] range and report which ended
// up pinned at a bound. Total and idempotent.
ClampResult clamp_and_flag(const DesignVariables& vars, const DesignBounds& bounds);

// True when every variable is strictly inside its range or exactly on a bound,
// i.e. clamping is a no-op.
bool in_bounds(const DesignVariables& vars, const DesignBounds& bounds);

// Straight thin wire piece. radius_m is the wire radius, not the half-length.
struct Segment {
    Vec3 a;
    Vec3 b;
    double radius_m = 0.0;

    Vec3 center() const { return (a + b) * 0.5; }
    Vec3 direction() const { return (b - a).normalized(); }
    double length() const { return (b - a).norm(); }
};

// Feed location: delta-gap source on one segment. sign realizes the 180-degree
// feed-line inversion as a voltage sign.
struct Port {
    std::size_t segment = 0;
    int sign = 1; // +1 or -1
};

struct WireModel {
    std::vector<Segment> segments;
    std::vector<Port> ports;

    std::size_t size() const { return segments.size(); }

    // Append another model, shifting its port indices. Returns *this.
    WireModel& append(const WireModel& other);
};

// Tube meshing controls. pitch_divisor sets the target cell size lambda/pitch_divisor;
// 10 is the production value, smaller values coarsen the grid for quick runs.
struct MeshParams {
    double pitch_divisor = 10.0;
    int min_ring_segments = 16; // rounded up to an even count
};

// Dipole construction controls. Segment length target is lambda/segment_divisor,
// finer than the tube mesh so the delta-gap feed sits on a short center segment.
struct DipoleParams {
    double element_radius_m = 1.0e-3;
    double segment_divisor = 20.0;
};

struct ModelParams {
    MeshParams mesh;
    DipoleParams dipole;
};

// Cylindrical wire grid: rings of chords plus axial runs, cell pitch at most
// lambda/pitch_divisor, wire radius = pitch / (2 pi) (equal-area rule).
// Throws std::invalid_argument when the pitch forces segment-length/radius <= 4.
WireModel build_tube_mesh(const TubeSpec& tube, double frequency_hz,
                          const MeshParams& params = {});

// Mesh pitch and equal-area wire radius that build_tube_mesh will use.
struct MeshLayout {
    int ring_segments = 0;  // chords per ring
    int axial_cells = 0;    // cells along the tube axis
    double pitch_m = 0.0;   // max of arc pitch and axial pitch
    double wire_radius_m = 0.0;
};
MeshLayout plan_tube_mesh(const TubeSpec& tube, double frequency_hz,
                          const MeshParams& params = {});

// Three axis-parallel dipoles at radius r1+d1, azimuths -theta1/0/+theta1,
// centered on the tube mid-plane. Each is split into the smallest odd number
// of segments with length <= lambda/segment_divisor; the center segment
// carries the port. Port signs alternate +1, -1, +1.
// Throws std::invalid_argument on out-of-bounds-style geometry (overlapping
// dipoles: azimuthal arc at radius r1+d1 smaller than the element diameter).
WireModel build_dipole_wires(const DesignVariables& vars, const TubeSpec& tube,
                             double frequency_hz, const DipoleParams& params = {});

// Tube mesh plus dipoles, deterministic segment order (tube first, then the
// dipoles in index order).
WireModel assemble_model(const DesignVariables& vars, const TubeSpec& tube,
                         double frequency_hz, const ModelParams& params = {});

} // namespace curvant::geom
